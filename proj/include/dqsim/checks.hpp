#ifndef DQSIM_CHECKS_HPP
#define DQSIM_CHECKS_HPP

#include <bit>
#include <cstddef>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dqsim/algorithms.hpp"
#include "dqsim/discrete.hpp"
#include "dqsim/field.hpp"
#include "dqsim/linalg.hpp"
#include "dqsim/modal.hpp"

namespace dqsim::checks {

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct CheckSuiteResult {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string matrix_key(const Matrix& m) {
  std::string k;
  for (const Fq& e : m.entries()) k += e.str() + ";";
  return k;
}

/// All 2^{2^n} truth tables with exactly `ones` true entries.
inline std::vector<OracleTable> tables_with_true_count(std::size_t n, std::size_t ones) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<OracleTable> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << size); ++bits) {
    if (std::popcount(bits) != static_cast<int>(ones)) continue;
    std::vector<std::uint8_t> outputs(size);
    for (std::size_t x = 0; x < size; ++x) outputs[x] = (bits >> x) & 1;
    out.emplace_back(n, std::move(outputs));
  }
  return out;
}

}  // namespace detail

inline Check check_plus_plus_inner_product() {
  const FieldSpec f2 = FieldSpec::validate(2, 1);
  const Vector plus = Vector::from_ints({1, 1}, f2);
  const Fq got = inner_product(plus, plus);
  return {"modal-inner-product-plus-plus", "<+|+> = 0 over F_2", got.str(),
          got == Fq::zero(f2)};
}

inline Check check_modal_gate_count() {
  const FieldSpec f2 = FieldSpec::validate(2, 1);
  const std::vector<Matrix> gates = modal::modal_gates_1q(2);
  std::set<std::string> got, want;
  for (const Matrix& g : gates) got.insert(detail::matrix_key(g));
  for (const Matrix& g : std::vector<Matrix>{
           modal::x0_gate(f2), modal::x1_gate(f2), modal::s_gate(f2),
           modal::s_dagger_gate(f2), Matrix::from_ints(2, 2, {0, 1, 1, 1}, f2),
           Matrix::from_ints(2, 2, {1, 1, 1, 0}, f2)})
    want.insert(detail::matrix_key(g));
  const bool pass = gates.size() == 6 && got == want;
  return {"modal-six-invertible-maps", "the 6 listed GL(2,F_2) matrices",
          std::to_string(gates.size()) + " matrices, listed set match: " +
              (got == want ? "yes" : "no"),
          pass};
}

inline Check check_modal_state_count() {
  const FieldSpec f2 = FieldSpec::validate(2, 1);
  const std::size_t count = modal::enumerate_modal_states(f2, 2).size();
  return {"modal-three-1qubit-states", "3", std::to_string(count), count == 3};
}

inline Check check_modal_unique_sat() {
  std::size_t tested = 0, correct = 0;
  bool evals_ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t ones = 0; ones <= 1; ++ones) {
      for (const OracleTable& f : detail::tables_with_true_count(n, ones)) {
        const auto r = modal::unique_sat_modal(f);
        ++tested;
        if (r.satisfiable == (ones == 1)) ++correct;
        if (r.oracle_evals != 1) evals_ok = false;
      }
    }
  }
  const bool pass = tested == 3 + 5 + 9 && correct == tested && evals_ok;
  return {"modal-unique-sat-exhaustive",
          "17 admissible tables decided correctly, 1 oracle evaluation each",
          std::to_string(correct) + "/" + std::to_string(tested) +
              " correct, single-eval: " + (evals_ok ? "yes" : "no"),
          pass};
}

inline Check check_modal_database_search() {
  bool ok = true;
  std::ostringstream obs;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t size = std::size_t{1} << n;
    for (std::size_t m = 0; m < size; ++m) {
      std::vector<std::uint8_t> outputs(size, 0);
      outputs[m] = 1;
      OracleTable db(n, std::move(outputs));
      const auto r = modal::database_search_modal(db);
      if (r.index != m || r.oracle_evals > static_cast<long>(n)) {
        ok = false;
        obs << "N=" << size << " marked=" << m << " -> " << r.index << " ("
            << r.oracle_evals << " evals) ";
      }
    }
  }
  return {"modal-database-search-log-queries",
          "marked record found for N in {2,4,8,16}, <= log2(N) evaluations",
          ok ? "all found within budget" : obs.str(), ok};
}

inline Check check_frobenius_conjugation() {
  bool ok = true;
  for (long long p : {3LL, 7LL, 11LL}) {
    const FieldSpec ctx = FieldSpec::validate(p, 2);
    for (const Fq& a : enumerate_elements(ctx))
      if (!(conj(a) == pow(a, static_cast<unsigned long long>(p)))) ok = false;
  }
  return {"frobenius-equals-conjugation", "conj(a) = a^p on all of F_9, F_49, F_121",
          ok ? "agrees everywhere" : "disagreement found", ok};
}

inline Check check_isotropic_vectors_exist() {
  bool ok = true;
  std::ostringstream obs;
  std::vector<FieldSpec> fields{FieldSpec::validate(2, 1), FieldSpec::validate(3, 2),
                                FieldSpec::validate(7, 2), FieldSpec::validate(11, 2)};
  for (const FieldSpec& ctx : fields) {
    bool found = false;
    for (const Fq& a : enumerate_elements(ctx)) {
      for (const Fq& b : enumerate_elements(ctx)) {
        const Vector v({a, b}, ctx);
        if (!v.is_zero() && inner_product(v, v).is_zero()) {
          found = true;
          obs << "F_" << ctx.order() << ": (" << a << ", " << b << ") ";
          break;
        }
      }
      if (found) break;
    }
    if (!found) ok = false;
  }
  return {"isotropic-vector-in-every-field",
          "a nonzero self-orthogonal 2-vector in each tested field", obs.str(), ok};
}

inline Check check_bloch_census() {
  struct Row {
    long long p;
    std::size_t vectors, classes, phases;
  };
  const std::vector<Row> expected{{3, 24, 6, 4}, {7, 336, 42, 8}, {11, 1320, 110, 12}};
  bool ok = true;
  std::ostringstream obs;
  for (const Row& row : expected) {
    const auto c = discrete::bloch_census(row.p);
    obs << "p=" << row.p << ": " << c.unit_vectors << "/" << c.classes << "/" << c.phases
        << " ";
    if (c.unit_vectors != row.vectors || c.classes != row.classes ||
        c.phases != row.phases || !c.matches_formula ||
        c.unit_vectors != c.classes * c.phases)
      ok = false;
  }
  return {"bloch-census-counts", "24/6/4, 336/42/8, 1320/110/12 with classes = p(p-1)",
          obs.str(), ok};
}

inline Check check_hadamard_unitary() {
  const FieldSpec f9 = FieldSpec::validate(3, 2);
  const Matrix h = discrete::hadamard(3);
  const Matrix want = Fq(1, 1, f9) * Matrix::from_ints(2, 2, {1, 1, 1, -1}, f9);
  const Matrix s_lifted = Matrix::from_ints(2, 2, {1, 0, 1, 1}, f9);
  const bool pass = h == want && is_unitary(h) && !is_unitary(s_lifted);
  return {"hadamard-unitary-s-not",
          "H = (1+i)[[1,1],[1,-1]] unitary over F_9; lifted S non-unitary",
          std::string("H match: ") + (h == want ? "yes" : "no") +
              ", H unitary: " + (is_unitary(h) ? "yes" : "no") +
              ", S unitary: " + (is_unitary(s_lifted) ? "yes" : "no"),
          pass};
}

inline Check check_hermitian_census() {
  const auto c = discrete::hermitian_census(3);
  std::set<long long> diag;
  bool diag_in_base = true;
  for (const Fq& d : c.diagonal_values) {
    if (d.im() != 0) diag_in_base = false;
    diag.insert(d.re());
  }
  const bool pass = c.total == 81 && diag == std::set<long long>{0, 1, 2} && diag_in_base &&
                    c.offdiagonal_values == 9;
  return {"hermitian-census-p3", "81 matrices, diagonals in {0,1,-1}, 9 off-diagonal values",
          std::to_string(c.total) + " matrices, " + std::to_string(diag.size()) +
              " diagonal values, " + std::to_string(c.offdiagonal_values) +
              " off-diagonal values",
          pass};
}

inline Check check_deutsch_jozsa() {
  std::size_t tested = 0, correct = 0;
  bool evals_ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t size = std::size_t{1} << n;
    for (const OracleTable& f : detail::tables_with_true_count(n, 0)) {
      const auto r = algorithms::deutsch_jozsa(f, 3);
      ++tested;
      correct += r.verdict == algorithms::DjVerdict::Constant;
      evals_ok = evals_ok && r.oracle_evals == 1;
    }
    for (const OracleTable& f : detail::tables_with_true_count(n, size)) {
      const auto r = algorithms::deutsch_jozsa(f, 3);
      ++tested;
      correct += r.verdict == algorithms::DjVerdict::Constant;
      evals_ok = evals_ok && r.oracle_evals == 1;
    }
    for (const OracleTable& f : detail::tables_with_true_count(n, size / 2)) {
      const auto r = algorithms::deutsch_jozsa(f, 3);
      ++tested;
      correct += r.verdict == algorithms::DjVerdict::Balanced;
      evals_ok = evals_ok && r.oracle_evals == 1;
    }
  }
  const bool pass = tested == correct && evals_ok && tested == (2 + 2) + (2 + 6) + (2 + 70);
  return {"deutsch-jozsa-exhaustive-f9",
          "all constant and balanced tables decided, n in {1,2,3}, 1 evaluation each",
          std::to_string(correct) + "/" + std::to_string(tested) +
              " correct, single-eval: " + (evals_ok ? "yes" : "no"),
          pass};
}

inline Check check_grover_field_dependence() {
  bool ok7 = true;
  for (std::size_t m = 0; m < 4; ++m) {
    const auto r = algorithms::grover(m, {4, 7, 1});
    if (!r.outcomes.is_certain(m)) ok7 = false;
  }
  // default sqrt(N) = 2 iterations over F_9: support is not a singleton
  const auto r3 = algorithms::grover(2, {4, 3, -1});
  const bool ok3 = r3.outcomes.possible.size() != 1;
  return {"grover-n4-field-dependence",
          "F_49, 1 iteration: certain outcome; F_9, sqrt(N) iterations: not a singleton",
          std::string("F_49 certain: ") + (ok7 ? "yes" : "no") +
              ", F_9 support size: " + std::to_string(r3.outcomes.possible.size()),
          ok7 && ok3};
}

inline Check check_discrete_unique_sat() {
  bool ok = true;
  std::ostringstream obs;
  const auto sweep = [&](long long p, std::size_t n) {
    for (std::size_t ones = 0; ones <= 1; ++ones)
      for (const OracleTable& f : detail::tables_with_true_count(n, ones)) {
        const auto r = algorithms::unique_sat_discrete(f, p);
        const auto want =
            ones == 1 ? algorithms::UsatVerdict::Sat : algorithms::UsatVerdict::Unsat;
        if (r.verdict != want || r.oracle_evals != 1) {
          ok = false;
          obs << "(p=" << p << ",n=" << n << ") miss ";
        }
      }
  };
  sweep(3, 2);
  sweep(7, 3);
  for (const OracleTable& f : detail::tables_with_true_count(3, 1)) {
    const auto r = algorithms::unique_sat_discrete(f, 3);
    if (r.verdict != algorithms::UsatVerdict::Inconclusive) {
      ok = false;
      obs << "(p=3,n=3) not inconclusive ";
    }
  }
  return {"discrete-unique-sat-divisibility",
          "exact verdicts when p | 2^n - 1; inconclusive for p=3, n=3",
          ok ? "all verdicts as expected" : obs.str(), ok};
}

inline Check check_pad_database() {
  const long long a = algorithms::pad_database(7, 4);
  const long long b = algorithms::pad_database(3, 3);
  bool always = true;
  for (long long p : {3LL, 7LL, 11LL})
    for (long long n = 1; n <= 16; ++n) {
      const long long padded = algorithms::pad_database(p, n);
      if (padded < n || !algorithms::supernatural_condition(p, padded).divides) always = false;
    }
  const bool pass = a == 6 && b == 4 && always;
  return {"pad-database-divisibility", "pad(7,4) = 6, pad(3,3) = 4, padded sizes divide",
          "pad(7,4) = " + std::to_string(a) + ", pad(3,3) = " + std::to_string(b) +
              ", always divides: " + (always ? "yes" : "no"),
          pass};
}

inline Check check_no_cloning() {
  bool ok = true;
  for (long long p : {3LL, 7LL, 11LL}) {
    const auto r = discrete::no_cloning_witness(p);
    if (r.clones) ok = false;
  }
  return {"no-cloning-witness", "basis cloner fails on a superposition for p in {3,7,11}",
          ok ? "witness found for every p" : "a superposition was cloned", ok};
}

inline Check check_algebraic_properties() {
  bool ok = true;
  std::ostringstream obs;

  // field axioms, exhaustive
  for (long long p : {2LL, 3LL, 7LL}) {
    const FieldSpec ctx = p == 2 ? FieldSpec::validate(2, 1) : FieldSpec::validate(p, 2);
    const auto elems = enumerate_elements(ctx);
    for (const Fq& a : elems)
      for (const Fq& b : elems) {
        if (!(a + b == b + a) || !(a * b == b * a)) ok = false;
        for (const Fq& c : elems) {
          if (!((a + b) + c == a + (b + c))) ok = false;
          if (!((a * b) * c == a * (b * c))) ok = false;
          if (!(a * (b + c) == a * b + a * c)) ok = false;
        }
        if (!b.is_zero() && !(b * inverse(b) == Fq::one(ctx))) ok = false;
      }
    if (!ok) obs << "field axioms fail for p=" << p << " ";
  }

  // conjugation is an automorphism; norm is multiplicative and surjective
  for (long long p : {3LL, 7LL}) {
    const FieldSpec ctx = FieldSpec::validate(p, 2);
    const auto elems = enumerate_elements(ctx);
    std::set<long long> norms;
    for (const Fq& a : elems) {
      if (!(conj(conj(a)) == a)) ok = false;
      if (!a.is_zero()) norms.insert(norm(a));
      for (const Fq& b : elems) {
        if (!(conj(a * b) == conj(a) * conj(b))) ok = false;
        if (!(conj(a + b) == conj(a) + conj(b))) ok = false;
        if (norm(a * b) != (norm(a) * norm(b)) % p) ok = false;
      }
    }
    if (norms.size() != static_cast<std::size_t>(p - 1)) ok = false;
  }

  // sesquilinearity over F_9, dimension 2
  {
    const FieldSpec ctx = FieldSpec::validate(3, 2);
    const auto elems = enumerate_elements(ctx);
    std::vector<Vector> vs;
    for (const Fq& a : elems)
      for (const Fq& b : elems) vs.push_back(Vector({a, b}, ctx));
    for (std::size_t j = 0; j < vs.size(); j += 7)
      for (std::size_t k = 0; k < vs.size(); k += 5)
        for (const Fq& c : elems) {
          const Vector& u = vs[j];
          const Vector& v = vs[k];
          if (!(inner_product(u, v) == conj(inner_product(v, u)))) ok = false;
          if (!(inner_product(u, c * v) == c * inner_product(u, v))) ok = false;
          if (!(inner_product(c * u, v) == conj(c) * inner_product(u, v))) ok = false;
        }
  }

  // unitary implies invertible, all 2x2 over F_9
  {
    const FieldSpec ctx = FieldSpec::validate(3, 2);
    const auto elems = enumerate_elements(ctx);
    for (const Fq& a : elems)
      for (const Fq& b : elems)
        for (const Fq& c : elems)
          for (const Fq& d : elems) {
            const Matrix m(2, 2, {a, b, c, d}, ctx);
            if (is_unitary(m) && !is_invertible(m)) ok = false;
          }
  }

  // tensor respects apply
  {
    const FieldSpec ctx = FieldSpec::validate(7, 2);
    const Matrix a = discrete::hadamard(7);
    const Matrix b = discrete::pauli_x2(ctx);
    const Vector u = Vector::from_ints({2, 5}, ctx);
    const Vector v({Fq(1, 3, ctx), Fq(0, 6, ctx)}, ctx);
    if (!(apply(tensor(a, b), tensor(u, v)) == tensor(apply(a, u), apply(b, v)))) ok = false;
  }

  return {"algebraic-property-suites",
          "field axioms, conjugation automorphism, norm map, sesquilinearity, "
          "unitary=>invertible, tensor/apply compatibility",
          ok ? "all properties hold" : "violation: " + obs.str(), ok};
}

inline CheckSuiteResult run_paper_checks(const std::string& filter = "") {
  using Entry = std::pair<std::string, std::function<Check()>>;
  const std::vector<Entry> all{
      {"modal-inner-product-plus-plus", check_plus_plus_inner_product},
      {"modal-six-invertible-maps", check_modal_gate_count},
      {"modal-three-1qubit-states", check_modal_state_count},
      {"modal-unique-sat-exhaustive", check_modal_unique_sat},
      {"modal-database-search-log-queries", check_modal_database_search},
      {"frobenius-equals-conjugation", check_frobenius_conjugation},
      {"isotropic-vector-in-every-field", check_isotropic_vectors_exist},
      {"bloch-census-counts", check_bloch_census},
      {"hadamard-unitary-s-not", check_hadamard_unitary},
      {"hermitian-census-p3", check_hermitian_census},
      {"deutsch-jozsa-exhaustive-f9", check_deutsch_jozsa},
      {"grover-n4-field-dependence", check_grover_field_dependence},
      {"discrete-unique-sat-divisibility", check_discrete_unique_sat},
      {"pad-database-divisibility", check_pad_database},
      {"no-cloning-witness", check_no_cloning},
      {"algebraic-property-suites", check_algebraic_properties},
  };
  CheckSuiteResult result;
  for (const auto& [name, fn] : all)
    if (filter.empty() || name.find(filter) != std::string::npos)
      result.checks.push_back(fn());
  return result;
}

}  // namespace dqsim::checks

#endif
