#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "dqsim/algorithms.hpp"
#include "dqsim/discrete.hpp"
#include "dqsim/field.hpp"
#include "dqsim/linalg.hpp"

using namespace dqsim;
using namespace dqsim::algorithms;

namespace {

const FieldSpec kF9 = FieldSpec::validate(3, 2);
const FieldSpec kF49 = FieldSpec::validate(7, 2);

OracleTable table_from_bits(std::size_t n, std::size_t bits) {
  std::vector<std::uint8_t> outputs(std::size_t{1} << n);
  for (std::size_t x = 0; x < outputs.size(); ++x) outputs[x] = (bits >> x) & 1;
  return OracleTable(n, std::move(outputs));
}

OracleTable single_marked(std::size_t n, std::size_t k) {
  std::vector<std::uint8_t> outputs(std::size_t{1} << n, 0);
  outputs[k] = 1;
  return OracleTable(n, std::move(outputs));
}

}  // namespace

TEST_CASE("Deutsch-Jozsa examples") {
  OracleTable f_true(2, {1, 1, 1, 1});
  const auto c = deutsch_jozsa(f_true, 3);
  CHECK(c.verdict == DjVerdict::Constant);
  CHECK(c.oracle_evals == 1);

  OracleTable f_id(1, {0, 1});
  const auto b = deutsch_jozsa(f_id, 3);
  CHECK(b.verdict == DjVerdict::Balanced);
  CHECK(b.oracle_evals == 1);
}

TEST_CASE("Deutsch-Jozsa is exhaustive-correct over F_9") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t size = std::size_t{1} << n;
    std::size_t balanced_count = 0;
    for (std::size_t bits = 0; bits < (std::size_t{1} << size); ++bits) {
      const int ones = std::popcount(bits);
      const bool constant = ones == 0 || ones == static_cast<int>(size);
      const bool balanced = ones == static_cast<int>(size / 2);
      if (!constant && !balanced) continue;
      const auto r = deutsch_jozsa(table_from_bits(n, bits), 3);
      CHECK(r.verdict == (constant ? DjVerdict::Constant : DjVerdict::Balanced));
      CHECK(r.oracle_evals == 1);
      balanced_count += balanced;
    }
    if (n == 3) CHECK(balanced_count == 70);
  }
}

TEST_CASE("Deutsch-Jozsa rejects promise violations") {
  OracleTable f(2, {1, 0, 0, 0});
  CHECK_THROWS_AS(deutsch_jozsa(f, 3), PromiseViolated);
}

TEST_CASE("Grover diffusion matrix entries") {
  const Matrix d47 = grover_diffusion(4, 7);
  CHECK(d47.at(0, 0) == Fq(3, kF49));  // -1 + 2*inv(4) = -1 + 4 = 3
  CHECK(d47.at(0, 1) == Fq(4, kF49));
  CHECK(d47.at(3, 2) == Fq(4, kF49));

  const Matrix d43 = grover_diffusion(4, 3);
  CHECK(d43.at(0, 0) == Fq(1, kF9));  // amplitudes collapse to +-1
  CHECK(d43.at(0, 1) == Fq(2, kF9));

  for (auto [n, p] : {std::pair{2LL, 3LL}, {2LL, 7LL}, {4LL, 7LL}, {8LL, 7LL}, {4LL, 11LL}})
    CHECK(is_unitary(grover_diffusion(n, p)));

  CHECK_THROWS_AS(grover_diffusion(21, 7), NotInvertibleN);
}

TEST_CASE("Grover over F_49 finds the marked record in one iteration, N = 4") {
  for (std::size_t m = 0; m < 4; ++m) {
    const auto r = grover(m, GroverConfig{4, 7, 1});
    CHECK(r.outcomes.is_certain(m));
    CHECK(r.oracle_evals == 1);
  }
  for (std::size_t m = 0; m < 2; ++m)
    CHECK(grover(m, GroverConfig{2, 7, 1}).outcomes.is_possible(m));
}

TEST_CASE("Grover over F_9 at sqrt(N) iterations does not isolate the record") {
  const auto r = grover(2, GroverConfig{4, 3, -1});  // default 2 iterations
  CHECK(r.oracle_evals == 2);
  CHECK(r.outcomes.possible.size() == 4);
}

TEST_CASE("Grover precondition failures") {
  CHECK_THROWS_AS(grover(0, GroverConfig{21, 7, 1}), NotInvertibleN);
}

TEST_CASE("supernatural divisibility condition") {
  CHECK(supernatural_condition(7, 3).divides);   // 2^3 - 1 = 7
  CHECK(supernatural_condition(3, 2).divides);   // 2^2 - 1 = 3
  CHECK_FALSE(supernatural_condition(7, 4).divides);
  CHECK(pad_database(7, 4) == 6);  // ord_7(2) = 3
  CHECK(pad_database(3, 3) == 4);
  CHECK(multiplicative_order_of_two(7) == 3);
  CHECK(multiplicative_order_of_two(3) == 2);
  for (long long p : {3, 7, 11, 19, 23})
    for (long long n = 1; n <= 20; ++n) {
      const long long padded = pad_database(p, n);
      CHECK(padded >= n);
      CHECK(supernatural_condition(p, padded).divides);
    }
}

TEST_CASE("discrete unique-sat with the divisibility condition") {
  // p = 3, n = 2: 2^2 - 1 = 3
  {
    const auto unsat = unique_sat_discrete(OracleTable(2, {0, 0, 0, 0}), 3);
    CHECK(unsat.verdict == UsatVerdict::Unsat);
    CHECK(unsat.final_support == std::vector<std::size_t>{0});
    CHECK(unsat.oracle_evals == 1);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto sat = unique_sat_discrete(single_marked(2, k), 3);
      CHECK(sat.verdict == UsatVerdict::Sat);
      CHECK(sat.zero_amplitude.is_zero());
    }
  }
  // p = 7, n = 3: 2^3 - 1 = 7
  {
    CHECK(unique_sat_discrete(OracleTable(3, std::vector<std::uint8_t>(8, 0)), 7).verdict ==
          UsatVerdict::Unsat);
    for (std::size_t k = 0; k < 8; ++k)
      CHECK(unique_sat_discrete(single_marked(3, k), 7).verdict == UsatVerdict::Sat);
  }
}

TEST_CASE("discrete unique-sat is inconclusive without the divisibility") {
  // p = 3, n = 3: 3 does not divide 7; both branches leave |0>|000> possible
  const auto unsat = unique_sat_discrete(OracleTable(3, std::vector<std::uint8_t>(8, 0)), 3);
  CHECK_FALSE(unsat.zero_amplitude.is_zero());
  for (std::size_t k = 0; k < 8; ++k) {
    const auto r = unique_sat_discrete(single_marked(3, k), 3);
    CHECK(r.verdict == UsatVerdict::Inconclusive);
    CHECK_FALSE(r.zero_amplitude.is_zero());
  }
}

TEST_CASE("discrete unique-sat amplitude bookkeeping") {
  // the |0>|0..0> amplitude is a unit times (count of unsatisfying inputs)
  const auto unsat = unique_sat_discrete(OracleTable(3, std::vector<std::uint8_t>(8, 0)), 3);
  const auto sat = unique_sat_discrete(single_marked(3, 5), 3);
  CHECK(norm(unsat.zero_amplitude) == norm(Fq(8 % 3, kF9)));
  CHECK(norm(sat.zero_amplitude) == norm(Fq(7 % 3, kF9)));
  CHECK_THROWS_AS(unique_sat_discrete(single_marked(13, 0), 3), ArityTooLarge);
}
