#ifndef DQSIM_MODAL_HPP
#define DQSIM_MODAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dqsim/errors.hpp"
#include "dqsim/field.hpp"
#include "dqsim/linalg.hpp"

namespace dqsim::modal {

inline constexpr std::size_t kDefaultMaxArity = 12;

/// Possibilistic measurement record: which basis outcomes are possible.
struct OutcomeSet {
  std::vector<std::size_t> possible;  // ascending, nonempty

  bool is_certain(std::size_t outcome) const {
    return possible.size() == 1 && possible[0] == outcome;
  }
  bool is_possible(std::size_t outcome) const {
    for (std::size_t j : possible)
      if (j == outcome) return true;
    return false;
  }
  bool is_impossible(std::size_t outcome) const { return !is_possible(outcome); }
};

inline OutcomeSet measure_possibilistic(const Vector& state) {
  if (state.is_zero()) throw ZeroState();
  return OutcomeSet{state.support()};
}

inline Matrix x0_gate(FieldSpec ctx) { return Matrix::identity(2, ctx); }
inline Matrix x1_gate(FieldSpec ctx) { return Matrix::from_ints(2, 2, {0, 1, 1, 0}, ctx); }
inline Matrix s_gate(FieldSpec ctx) { return Matrix::from_ints(2, 2, {1, 0, 1, 1}, ctx); }
inline Matrix s_dagger_gate(FieldSpec ctx) { return Matrix::from_ints(2, 2, {1, 1, 0, 1}, ctx); }

/// All invertible 2x2 maps over F_p, lexicographic on the entry tuple.
/// For p = 2 these are the six 1-qubit modal gates.
inline std::vector<Matrix> modal_gates_1q(long long p) {
  if (p > 11) throw TooLarge("p = " + std::to_string(p) + " for GL(2) enumeration");
  const FieldSpec ctx = FieldSpec::validate(p, 1);
  std::vector<Matrix> out;
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long c = 0; c < p; ++c)
        for (long long d = 0; d < p; ++d) {
          Matrix m = Matrix::from_ints(2, 2, {a, b, c, d}, ctx);
          if (is_invertible(m)) out.push_back(std::move(m));
        }
  return out;
}

/// All nonzero state vectors of the given dimension over F_p.
inline std::vector<Vector> enumerate_modal_states(FieldSpec ctx, std::size_t dim) {
  const std::vector<Fq> elems = enumerate_elements(ctx);
  std::vector<Vector> out;
  std::vector<std::size_t> digits(dim, 0);
  for (;;) {
    std::vector<Fq> entries;
    entries.reserve(dim);
    for (std::size_t d : digits) entries.push_back(elems[d]);
    Vector v(std::move(entries), ctx);
    if (!v.is_zero()) out.push_back(std::move(v));
    std::size_t k = dim;
    while (k > 0 && ++digits[k - 1] == elems.size()) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

/// Apply a 2x2 gate to the qubit whose index bit is `bit` (bit 0 = least
/// significant) of a dense 2^m state.
inline Vector apply_single_qubit(const Matrix& gate, std::size_t bit, const Vector& state) {
  const std::size_t mask = std::size_t{1} << bit;
  Vector out = Vector::zeros(state.dim(), state.ctx());
  for (std::size_t idx = 0; idx < state.dim(); ++idx) {
    const Fq& amp = state[idx];
    if (amp.is_zero()) continue;
    const std::size_t b = (idx & mask) ? 1 : 0;
    out[idx & ~mask] = out[idx & ~mask] + gate.at(0, b) * amp;
    out[idx | mask] = out[idx | mask] + gate.at(1, b) * amp;
  }
  return out;
}

struct UniqueSatResult {
  bool satisfiable = false;
  std::vector<std::size_t> final_support;
  long oracle_evals = 0;
  std::optional<Vector> final_state;
};

/// One-query UNIQUE-SAT over F_2. The register is y (most significant
/// index bit) followed by x_1..x_n; UNSAT exactly when the final support
/// is the single basis state |0>|0...0>.
inline UniqueSatResult unique_sat_modal(const OracleTable& f, bool strict = false,
                                        std::size_t max_arity = kDefaultMaxArity) {
  if (f.n > max_arity) throw ArityTooLarge(f.n, max_arity);
  if (strict && f.true_count() > 1) throw MultiplyMarked();
  const FieldSpec ctx = FieldSpec::validate(2, 1);
  const std::size_t n = f.n;
  const std::size_t dim = std::size_t{1} << (n + 1);
  const Matrix s = s_gate(ctx);
  const Matrix sd = s_dagger_gate(ctx);
  const long before = f.eval_count;

  Vector state = Vector::basis(dim, 0, ctx);
  for (std::size_t b = 0; b < n; ++b) state = apply_single_qubit(s, b, state);
  state = apply_oracle(f, state);
  for (std::size_t b = 0; b < n; ++b) state = apply_single_qubit(s, b, state);
  state = apply_single_qubit(sd, n, state);
  // controlled on y = |a>, apply X_a to every x qubit: a = 1 flips all x bits
  {
    const std::size_t half = dim >> 1;
    Vector flipped = state;
    for (std::size_t x = 0; x < half; ++x) flipped[half + x] = state[half + ((half - 1) ^ x)];
    state = flipped;
  }
  state = apply_single_qubit(sd, n, state);

  UniqueSatResult r;
  r.final_support = measure_possibilistic(state).possible;
  r.satisfiable = !(r.final_support.size() == 1 && r.final_support[0] == 0);
  r.oracle_evals = f.eval_count - before;
  r.final_state = std::move(state);
  return r;
}

struct SearchResult {
  std::size_t index = 0;
  long oracle_evals = 0;
};

/// Locate the unique marked record with log2(N) restricted UNIQUE-SAT
/// queries, halving the candidate range each round.
inline SearchResult database_search_modal(const OracleTable& db,
                                          std::size_t max_arity = kDefaultMaxArity) {
  if (db.n > max_arity) throw ArityTooLarge(db.n, max_arity);
  const std::size_t marked = db.true_count();
  if (marked == 0) throw NoMarked();
  if (marked > 1) throw MultiplyMarked();

  const std::size_t size = std::size_t{1} << db.n;
  std::size_t lo = 0;
  std::size_t width = size;
  long evals = 0;
  while (width > 1) {
    const std::size_t half = width / 2;
    std::vector<std::uint8_t> restricted(size, 0);
    for (std::size_t x = lo; x < lo + half; ++x) restricted[x] = db.outputs[x];
    OracleTable g(db.n, std::move(restricted));
    const UniqueSatResult r = unique_sat_modal(g, false, max_arity);
    evals += r.oracle_evals;
    db.record_evaluation();  // one black-box use of the underlying f per round
    if (!r.satisfiable) lo += half;
    width = half;
  }
  return SearchResult{lo, evals};
}

}  // namespace dqsim::modal

#endif
