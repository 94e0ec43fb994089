#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "dqsim/field.hpp"
#include "dqsim/linalg.hpp"
#include "dqsim/modal.hpp"

using namespace dqsim;
using namespace dqsim::modal;

namespace {

const FieldSpec kF2 = FieldSpec::validate(2, 1);

std::string key(const Matrix& m) {
  std::string k;
  for (const Fq& e : m.entries()) k += e.str() + ";";
  return k;
}

OracleTable single_marked(std::size_t n, std::size_t k) {
  std::vector<std::uint8_t> outputs(std::size_t{1} << n, 0);
  outputs[k] = 1;
  return OracleTable(n, std::move(outputs));
}

}  // namespace

TEST_CASE("the six invertible 1-qubit maps over F_2") {
  const auto gates = modal_gates_1q(2);
  REQUIRE(gates.size() == 6);
  std::set<std::string> got, want;
  for (const Matrix& g : gates) got.insert(key(g));
  want.insert(key(x0_gate(kF2)));
  want.insert(key(x1_gate(kF2)));
  want.insert(key(s_gate(kF2)));
  want.insert(key(s_dagger_gate(kF2)));
  want.insert(key(Matrix::from_ints(2, 2, {0, 1, 1, 1}, kF2)));
  want.insert(key(Matrix::from_ints(2, 2, {1, 1, 1, 0}, kF2)));
  CHECK(got == want);
}

TEST_CASE("GL(2, F_3) has (9-1)(9-3) elements") {
  // brute-force oracle: count maps with no nonzero kernel vector
  const FieldSpec f3 = FieldSpec::validate(3, 1);
  const auto states = enumerate_modal_states(f3, 2);
  std::size_t oracle_count = 0;
  for (long long a = 0; a < 3; ++a)
    for (long long b = 0; b < 3; ++b)
      for (long long c = 0; c < 3; ++c)
        for (long long d = 0; d < 3; ++d) {
          const Matrix m = Matrix::from_ints(2, 2, {a, b, c, d}, f3);
          bool kills = false;
          for (const Vector& v : states)
            if (apply(m, v).is_zero()) kills = true;
          if (!kills) ++oracle_count;
        }
  CHECK(oracle_count == 48);
  const auto gates = modal_gates_1q(3);
  CHECK(gates.size() == 48);
  bool has_identity = false;
  for (const Matrix& g : gates)
    if (g == Matrix::identity(2, f3)) has_identity = true;
  CHECK(has_identity);
  CHECK_THROWS_AS(modal_gates_1q(13), TooLarge);
}

TEST_CASE("exactly three 1-qubit modal states over F_2") {
  const auto states = enumerate_modal_states(kF2, 2);
  CHECK(states.size() == 3);
  // every invertible map sends valid states to valid states
  for (const Matrix& g : modal_gates_1q(2))
    for (const Vector& v : states) CHECK_FALSE(apply(g, v).is_zero());
}

TEST_CASE("possibilistic measurement") {
  const auto plus = measure_possibilistic(Vector::from_ints({1, 1}, kF2));
  CHECK(plus.possible == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(plus.is_certain(0));

  const auto zero = measure_possibilistic(Vector::basis(2, 0, kF2));
  CHECK(zero.is_certain(0));
  CHECK(zero.is_impossible(1));

  const auto multi = measure_possibilistic(Vector::from_ints({1, 1, 0, 1}, kF2));
  CHECK(multi.possible == std::vector<std::size_t>{0, 1, 3});

  CHECK_THROWS_AS(measure_possibilistic(Vector::zeros(2, kF2)), ZeroState);
}

TEST_CASE("unique-sat examples") {
  OracleTable f_false(2, {0, 0, 0, 0});
  const auto unsat = unique_sat_modal(f_false);
  CHECK_FALSE(unsat.satisfiable);
  CHECK(unsat.final_support == std::vector<std::size_t>{0});
  CHECK(unsat.oracle_evals == 1);

  OracleTable f_11 = single_marked(2, 3);
  const auto sat = unique_sat_modal(f_11);
  CHECK(sat.satisfiable);
  CHECK(sat.oracle_evals == 1);
  // the |0>|00> amplitude must vanish
  CHECK((*sat.final_state)[0].is_zero());
}

TEST_CASE("unique-sat agrees with truth-table satisfiability, exhaustive") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t size = std::size_t{1} << n;
    OracleTable f_false(n, std::vector<std::uint8_t>(size, 0));
    CHECK_FALSE(unique_sat_modal(f_false).satisfiable);
    for (std::size_t k = 0; k < size; ++k) {
      const auto r = unique_sat_modal(single_marked(n, k));
      CHECK(r.satisfiable);
      CHECK(r.oracle_evals == 1);
    }
  }
}

TEST_CASE("strict mode rejects multiply-satisfiable tables") {
  OracleTable f(2, {1, 1, 0, 0});
  CHECK_THROWS_AS(unique_sat_modal(f, true), MultiplyMarked);
  CHECK_THROWS_AS(unique_sat_modal(single_marked(13, 5)), ArityTooLarge);
  CHECK_NOTHROW(unique_sat_modal(single_marked(13, 5), false, 13));
}

TEST_CASE("database search") {
  {
    OracleTable db = single_marked(3, 5);
    const auto r = database_search_modal(db);
    CHECK(r.index == 5);
    CHECK(r.oracle_evals <= 3);
  }
  {
    OracleTable db = single_marked(1, 0);
    const auto r = database_search_modal(db);
    CHECK(r.index == 0);
    CHECK(r.oracle_evals == 1);
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      OracleTable db = single_marked(n, m);
      const auto r = database_search_modal(db);
      CHECK(r.index == m);
      CHECK(r.oracle_evals <= static_cast<long>(n));
    }
}

TEST_CASE("database search rejects broken promises") {
  OracleTable none(2, {0, 0, 0, 0});
  CHECK_THROWS_AS(database_search_modal(none), NoMarked);
  OracleTable two(2, {1, 0, 1, 0});
  CHECK_THROWS_AS(database_search_modal(two), MultiplyMarked);
}
