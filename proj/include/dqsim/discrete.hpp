#ifndef DQSIM_DISCRETE_HPP
#define DQSIM_DISCRETE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "dqsim/errors.hpp"
#include "dqsim/field.hpp"
#include "dqsim/linalg.hpp"
#include "dqsim/modal.hpp"

namespace dqsim::discrete {

using modal::OutcomeSet;

/// The p+1 scalars of norm 1; states differing by one of these are the
/// same physical state.
struct PhaseGroup {
  long long p = 0;
  std::vector<Fq> elements;  // lexicographic on (re, im)
};

inline PhaseGroup phase_group(long long p) {
  const FieldSpec ctx = FieldSpec::validate(p, 2);
  PhaseGroup g{p, {}};
  for (const Fq& s : enumerate_elements(ctx))
    if (norm(s) == 1) g.elements.push_back(s);
  return g;
}

/// Unit-norm state stored as its canonical phase representative: the
/// phase multiple whose first nonzero entry has the least (re, im).
class DiscreteState {
 public:
  static DiscreteState from_unit_vector(const Vector& v) {
    if (!(inner_product(v, v) == Fq::one(v.ctx()))) throw ZeroState();
    return DiscreteState(canonical_form(v));
  }

  const Vector& vector() const { return vec_; }
  const FieldSpec& ctx() const { return vec_.ctx(); }

  friend bool operator==(const DiscreteState& a, const DiscreteState& b) {
    return a.vec_ == b.vec_;
  }

  static Vector canonical_form(const Vector& v) {
    const PhaseGroup g = phase_group(v.ctx().p);
    std::size_t first = 0;
    while (first < v.dim() && v[first].is_zero()) ++first;
    if (first == v.dim()) throw ZeroVector();
    // order real-first so basis kets are their own representatives
    const auto key = [](const Fq& a) { return std::pair{a.im(), a.re()}; };
    const Fq* best = nullptr;
    for (const Fq& s : g.elements) {
      if (best == nullptr || key(s * v[first]) < key(*best * v[first])) best = &s;
    }
    return *best * v;
  }

 private:
  explicit DiscreteState(Vector v) : vec_(std::move(v)) {}
  Vector vec_;
};

inline DiscreteState canonicalize(const DiscreteState& s) { return s; }

inline bool equivalent(const DiscreteState& a, const DiscreteState& b) { return a == b; }

/// Scale v to unit norm. Fails with IsotropicVector when <v|v> = 0: no
/// scalar multiple of v has norm 1.
inline DiscreteState normalize(const Vector& v) {
  if (v.is_zero()) throw ZeroVector();
  const Fq nrm = inner_product(v, v);
  if (nrm.is_zero()) {
    std::string witness = "(";
    for (std::size_t j = 0; j < v.dim(); ++j)
      witness += v[j].str() + (j + 1 < v.dim() ? ", " : ")");
    throw IsotropicVector(witness);
  }
  const long long target = from_symmetric(
      inverse(Fq(nrm.re(), FieldSpec::validate(v.ctx().p, 1))).re(), v.ctx().p);
  // the norm map is surjective onto F_p*, so a scaling always exists
  for (const Fq& s : enumerate_elements(v.ctx()))
    if (norm(s) == target) return DiscreteState::from_unit_vector(s * v);
  throw Error("norm surjectivity failed");  // unreachable
}

struct BlochCensus {
  long long p = 0;
  std::size_t unit_vectors = 0;
  std::size_t classes = 0;
  std::size_t phases = 0;
  bool matches_formula = false;  // classes == p(p-1)
  std::vector<Vector> class_reps;
};

inline constexpr long long kCensusGuard = 31;

/// Exhaustive scan of all 2-component vectors over F_{p^2}: count unit
/// vectors and group them into phase-equivalence classes.
inline BlochCensus bloch_census(long long p) {
  if (p > kCensusGuard) throw TooLarge("p = " + std::to_string(p) + " for Bloch census");
  const FieldSpec ctx = FieldSpec::validate(p, 2);
  const std::vector<Fq> elems = enumerate_elements(ctx);

  BlochCensus census;
  census.p = p;
  census.phases = static_cast<std::size_t>(p + 1);
  std::set<std::array<long long, 4>> reps;
  for (const Fq& a : elems)
    for (const Fq& b : elems) {
      if ((norm(a) + norm(b)) % p != 1) continue;
      ++census.unit_vectors;
      const Vector canon = DiscreteState::canonical_form(Vector({a, b}, ctx));
      reps.insert({canon[0].re(), canon[0].im(), canon[1].re(), canon[1].im()});
    }
  census.classes = reps.size();
  census.matches_formula = census.classes == static_cast<std::size_t>(p * (p - 1));
  for (const auto& r : reps)
    census.class_reps.push_back(Vector({Fq(r[0], r[1], ctx), Fq(r[2], r[3], ctx)}, ctx));
  return census;
}

struct PauliCoefficients {
  Fq a0, a1, a2, a3;
};

inline Matrix pauli_x2(FieldSpec ctx) {
  return Matrix(2, 2, {Fq::zero(ctx), -Fq::i(ctx), Fq::i(ctx), Fq::zero(ctx)}, ctx);
}
inline Matrix pauli_x3(FieldSpec ctx) { return Matrix::from_ints(2, 2, {1, 0, 0, -1}, ctx); }

/// O = a0 I + a1 X_1 + a2 X_2 + a3 X_3, written out entrywise.
inline Matrix pauli_compose(const PauliCoefficients& c) {
  const FieldSpec ctx = c.a0.ctx();
  const Fq i = Fq::i(ctx);
  return Matrix(2, 2,
                {c.a0 + c.a3, c.a1 - i * c.a2, c.a1 + i * c.a2, c.a0 - c.a3}, ctx);
}

inline PauliCoefficients pauli_decompose(const Matrix& o) {
  if (o.rows() != 2 || o.cols() != 2) throw NotTwoByTwo();
  const FieldSpec ctx = o.ctx();
  const Fq half = inverse(Fq(2, ctx));
  const Fq i = Fq::i(ctx);
  return PauliCoefficients{
      half * (o.at(0, 0) + o.at(1, 1)),
      half * (o.at(0, 1) + o.at(1, 0)),
      inverse(Fq(2, ctx) * i) * (o.at(1, 0) - o.at(0, 1)),
      half * (o.at(0, 0) - o.at(1, 1)),
  };
}

struct HermitianCensus {
  long long p = 0;
  std::size_t total = 0;
  std::vector<Fq> diagonal_values;   // distinct values seen on the diagonal
  std::size_t offdiagonal_values = 0;  // distinct values of the (0,1) entry
};

inline HermitianCensus hermitian_census(long long p) {
  if (p > 11) throw TooLarge("p = " + std::to_string(p) + " for Hermitian census");
  const FieldSpec ctx = FieldSpec::validate(p, 2);
  const std::vector<Fq> elems = enumerate_elements(ctx);
  HermitianCensus census;
  census.p = p;
  std::set<std::array<long long, 2>> diag, off;
  for (const Fq& d0 : elems)
    for (const Fq& d1 : elems)
      for (const Fq& c : elems) {
        const Matrix m(2, 2, {d0, c, conj(c), d1}, ctx);
        if (!is_hermitian(m)) continue;
        ++census.total;
        diag.insert({d0.re(), d0.im()});
        diag.insert({d1.re(), d1.im()});
        off.insert({c.re(), c.im()});
      }
  for (const auto& d : diag) census.diagonal_values.push_back(Fq(d[0], d[1], ctx));
  census.offdiagonal_values = off.size();
  return census;
}

inline OutcomeSet measure_standard(const DiscreteState& s) {
  return modal::measure_possibilistic(s.vector());
}

/// Projection onto the outcome's basis ket; always normalizable since a
/// basis ket has norm 1.
inline DiscreteState post_state(const DiscreteState& s, std::size_t outcome) {
  if (s.vector()[outcome].is_zero()) throw ImpossibleOutcome(outcome);
  return DiscreteState::from_unit_vector(Vector::basis(s.vector().dim(), outcome, s.ctx()));
}

/// s * [[1,1],[1,-1]] with s the lexicographically least scalar making the
/// result unitary (norm(s) * 2 = 1). For p = 3 this is (1+i)[[1,1],[1,-1]].
inline Matrix hadamard(long long p) {
  const FieldSpec ctx = FieldSpec::validate(p, 2);
  const long long target =
      from_symmetric(inverse(Fq(2, FieldSpec::validate(p, 1))).re(), p);
  for (const Fq& s : enumerate_elements(ctx))
    if (norm(s) == target) return s * Matrix::from_ints(2, 2, {1, 1, 1, -1}, ctx);
  throw NoUnitaryScaling(p);
}

struct CloningReport {
  long long p = 0;
  Vector psi;
  Vector cloner_output;   // C(psi (x) |0>)
  Vector required_output; // psi (x) psi
  bool clones = false;    // true iff the outputs agree up to a phase
};

/// The only linear map that copies both basis states sends psi (x) |0> to
/// psi_0|00> + psi_1|11>, which is not psi (x) psi for any superposition.
inline CloningReport no_cloning_witness(long long p) {
  const FieldSpec ctx = FieldSpec::validate(p, 2);
  const DiscreteState psi = normalize(Vector::from_ints({1, 1}, ctx));
  const Vector& v = psi.vector();
  Vector lhs = Vector::zeros(4, ctx);
  lhs[0] = v[0];
  lhs[3] = v[1];
  const Vector rhs = tensor(v, v);
  CloningReport report{p, v, lhs, rhs, false};
  for (const Fq& s : phase_group(p).elements)
    if (lhs == s * rhs) report.clones = true;
  return report;
}

}  // namespace dqsim::discrete

#endif
