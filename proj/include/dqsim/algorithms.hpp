#ifndef DQSIM_ALGORITHMS_HPP
#define DQSIM_ALGORITHMS_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "dqsim/discrete.hpp"
#include "dqsim/errors.hpp"
#include "dqsim/field.hpp"
#include "dqsim/linalg.hpp"
#include "dqsim/modal.hpp"

namespace dqsim::algorithms {

using modal::OutcomeSet;

enum class DjVerdict { Constant, Balanced };

struct DjResult {
  DjVerdict verdict = DjVerdict::Constant;
  std::vector<std::size_t> x_support;  // support of the measured x register
  long oracle_evals = 0;
  std::optional<Vector> final_state;
};

/// Deutsch-Jozsa over F_{p^2}: y is prepared in H|1>, both registers run
/// through the textbook circuit, and the x register is read out
/// possibilistically. Constant functions make outcome 0...0 certain,
/// balanced ones make it impossible.
inline DjResult deutsch_jozsa(const OracleTable& f, long long p,
                              std::size_t max_arity = modal::kDefaultMaxArity) {
  if (f.n > max_arity) throw ArityTooLarge(f.n, max_arity);
  const FieldSpec ctx = FieldSpec::validate(p, 2);
  const std::size_t n = f.n;
  const std::size_t half = std::size_t{1} << n;
  const Matrix h = discrete::hadamard(p);
  const long before = f.eval_count;

  const Vector y_state = apply(h, Vector::basis(2, 1, ctx));
  Vector state = tensor(y_state, Vector::basis(half, 0, ctx));
  for (std::size_t b = 0; b < n; ++b) state = modal::apply_single_qubit(h, b, state);
  state = apply_oracle(f, state);
  for (std::size_t b = 0; b < n; ++b) state = modal::apply_single_qubit(h, b, state);

  std::set<std::size_t> xs;
  for (std::size_t idx : state.support()) xs.insert(idx & (half - 1));

  DjResult r;
  r.x_support.assign(xs.begin(), xs.end());
  r.oracle_evals = f.eval_count - before;
  r.final_state = state;
  if (r.x_support.size() == 1 && r.x_support[0] == 0)
    r.verdict = DjVerdict::Constant;
  else if (xs.count(0) == 0)
    r.verdict = DjVerdict::Balanced;
  else
    throw PromiseViolated();
  return r;
}

/// N x N matrix with -1 + 2/N on the diagonal and 2/N elsewhere,
/// with 2/N taken in F_p.
inline Matrix grover_diffusion(long long n_records, long long p) {
  if (n_records % p == 0) throw NotInvertibleN(n_records, p);
  const FieldSpec ctx = FieldSpec::validate(p, 2);
  const Fq two_over_n = Fq(2, ctx) * inverse(Fq(n_records % p, ctx));
  const Fq diag = two_over_n - Fq(1, ctx);
  Matrix m = Matrix::zeros(static_cast<std::size_t>(n_records),
                           static_cast<std::size_t>(n_records), ctx);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = r == c ? diag : two_over_n;
  return m;
}

struct GroverConfig {
  long long database_size = 4;  // power of two
  long long p = 7;
  long long iterations = -1;  // < 0: round(sqrt(N))

  long long effective_iterations() const {
    return iterations >= 0 ? iterations
                           : std::llround(std::sqrt(static_cast<double>(database_size)));
  }
};

struct GroverResult {
  OutcomeSet outcomes;
  Vector final_state;
  long oracle_evals = 0;
};

/// Grover search with the phase-flip oracle: start from the normalized
/// all-ones state, then repeat [flip marked amplitude; apply diffusion].
inline GroverResult grover(std::size_t marked, const GroverConfig& cfg) {
  const long long n_records = cfg.database_size;
  const FieldSpec ctx = FieldSpec::validate(cfg.p, 2);
  if (n_records % cfg.p == 0) throw NotInvertibleN(n_records, cfg.p);
  const std::size_t dim = static_cast<std::size_t>(n_records);

  Vector uniform(std::vector<Fq>(dim, Fq::one(ctx)), ctx);
  if (inner_product(uniform, uniform).is_zero()) throw IsotropicStart(n_records, cfg.p);
  Vector state = discrete::normalize(uniform).vector();

  const Matrix diffusion = grover_diffusion(n_records, cfg.p);
  const long long iters = cfg.effective_iterations();
  for (long long k = 0; k < iters; ++k) {
    state[marked] = -state[marked];
    state = apply(diffusion, state);
  }
  return GroverResult{modal::measure_possibilistic(state), state, static_cast<long>(iters)};
}

inline long long multiplicative_order_of_two(long long p) {
  long long ord = 1;
  long long pow2 = 2 % p;
  while (pow2 != 1) {
    pow2 = (pow2 * 2) % p;
    ++ord;
  }
  return ord;
}

struct SupernaturalReport {
  long long p = 0;
  long long n_bits = 0;
  bool divides = false;  // p | 2^n - 1
  std::optional<long long> padded_n;
};

inline bool divides_two_pow_minus_one(long long p, long long n_bits) {
  long long pow2 = 1;
  for (long long k = 0; k < n_bits; ++k) pow2 = (pow2 * 2) % p;
  return pow2 == 1;
}

inline SupernaturalReport supernatural_condition(long long p, long long n_bits) {
  SupernaturalReport r{p, n_bits, divides_two_pow_minus_one(p, n_bits), {}};
  if (!r.divides) {
    const long long ord = multiplicative_order_of_two(p);
    r.padded_n = ((n_bits + ord - 1) / ord) * ord;
  }
  return r;
}

/// Least n' >= n with p | 2^{n'} - 1: pad the database with dummy records
/// up to the next multiple of the order of 2 mod p.
inline long long pad_database(long long p, long long n_bits) {
  const SupernaturalReport r = supernatural_condition(p, n_bits);
  return r.divides ? n_bits : *r.padded_n;
}

enum class UsatVerdict { Sat, Unsat, Inconclusive };

struct UsatDiscreteResult {
  UsatVerdict verdict = UsatVerdict::Inconclusive;
  std::vector<std::size_t> final_support;
  Fq zero_amplitude;  // amplitude of |0>|0...0>
  long oracle_evals = 0;
  std::optional<Vector> final_state;
};

/// One-query UNIQUE-SAT over F_{p^2}: y stays |0>, x passes through
/// H^n, U_f, H^n. The |0>|0..0> amplitude is proportional to the number
/// of unsatisfying inputs, so it cancels exactly when p | 2^n - 1 and f
/// is satisfiable; without the divisibility the verdict is inconclusive.
inline UsatDiscreteResult unique_sat_discrete(const OracleTable& f, long long p,
                                              std::size_t max_arity = modal::kDefaultMaxArity) {
  if (f.n > max_arity) throw ArityTooLarge(f.n, max_arity);
  const FieldSpec ctx = FieldSpec::validate(p, 2);
  const std::size_t n = f.n;
  const std::size_t half = std::size_t{1} << n;
  const Matrix h = discrete::hadamard(p);
  const long before = f.eval_count;

  Vector state = Vector::basis(half * 2, 0, ctx);
  for (std::size_t b = 0; b < n; ++b) state = modal::apply_single_qubit(h, b, state);
  state = apply_oracle(f, state);
  for (std::size_t b = 0; b < n; ++b) state = modal::apply_single_qubit(h, b, state);

  UsatDiscreteResult r;
  r.final_support = state.support();
  r.zero_amplitude = state[0];
  r.oracle_evals = f.eval_count - before;
  r.final_state = state;
  const bool divides = divides_two_pow_minus_one(p, static_cast<long long>(n));
  if (r.zero_amplitude.is_zero())
    r.verdict = UsatVerdict::Sat;
  else if (divides && r.final_support.size() == 1 && r.final_support[0] == 0)
    r.verdict = UsatVerdict::Unsat;
  else
    r.verdict = UsatVerdict::Inconclusive;
  return r;
}

}  // namespace dqsim::algorithms

#endif
