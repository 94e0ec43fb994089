#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dqsim/field.hpp"

using namespace dqsim;

namespace {

// independent oracles
Fq naive_power(const Fq& a, unsigned long long e) {
  Fq acc = Fq::one(a.ctx());
  for (unsigned long long k = 0; k < e; ++k) acc = acc * a;
  return acc;
}

Fq inverse_by_scan(const Fq& a) {
  for (const Fq& b : enumerate_elements(a.ctx()))
    if (a * b == Fq::one(a.ctx())) return b;
  throw std::logic_error("no inverse");
}

long long inverse_by_euclid(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return ((t % p) + p) % p;
}

const FieldSpec kF2 = FieldSpec::validate(2, 1);
const FieldSpec kF7 = FieldSpec::validate(7, 1);
const FieldSpec kF9 = FieldSpec::validate(3, 2);
const FieldSpec kF49 = FieldSpec::validate(7, 2);

}  // namespace

TEST_CASE("field validation") {
  CHECK(FieldSpec::validate(3, 2) == FieldSpec{3, 2});
  CHECK(FieldSpec::validate(2, 1) == FieldSpec{2, 1});
  CHECK(FieldSpec::validate(19, 2).order() == 361);
  CHECK_THROWS_AS(FieldSpec::validate(4, 1), NotPrime);
  CHECK_THROWS_AS(FieldSpec::validate(1, 1), NotPrime);
  CHECK_THROWS_AS(FieldSpec::validate(5, 2), BadResidue);  // x^2+1 = (x+2)(x+3) mod 5
  CHECK_THROWS_AS(FieldSpec::validate(13, 2), BadResidue);
  CHECK_THROWS_AS(FieldSpec::validate(2, 2), Degree2WithP2);
}

TEST_CASE("arithmetic over F_9") {
  const Fq one_plus_i(1, 1, kF9);
  const Fq one_minus_i(1, -1, kF9);
  CHECK(one_plus_i * one_minus_i == Fq(2, kF9));  // (1-i)(1+i) = -1
  CHECK(one_plus_i + Fq::zero(kF9) == one_plus_i);
  CHECK(one_plus_i * one_plus_i == Fq(0, 2, kF9));  // (1+i)^2 = 2i
  CHECK(-Fq(1, kF9) == Fq(2, kF9));
  CHECK_THROWS_AS(one_plus_i + Fq(1, kF49), ContextMismatch);
}

TEST_CASE("conjugation") {
  CHECK(conj(Fq(1, 1, kF9)) == Fq(1, 2, kF9));  // 1-i = 1+2i
  CHECK(conj(Fq::zero(kF9)) == Fq::zero(kF9));
  CHECK(conj(Fq(2, 3, kF49)) == Fq(2, 4, kF49));
  // Frobenius oracle: a^p by repeated multiplication
  CHECK(naive_power(Fq(1, 1, kF9), 3) == Fq(1, 2, kF9));
  CHECK(naive_power(Fq(2, 3, kF49), 7) == Fq(2, 4, kF49));
  CHECK(conj(Fq(5, kF7)) == Fq(5, kF7));  // degree 1: identity
}

TEST_CASE("Frobenius agreement is exhaustive") {
  for (long long p : {3, 7, 11}) {
    const FieldSpec ctx = FieldSpec::validate(p, 2);
    for (const Fq& a : enumerate_elements(ctx))
      CHECK(conj(a) == naive_power(a, static_cast<unsigned long long>(p)));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Fq(2, kF7)) == Fq(4, kF7));
  CHECK(inverse_by_euclid(2, 7) == 4);
  CHECK(inverse(Fq::one(kF9)) == Fq::one(kF9));
  CHECK(inverse(Fq(1, 1, kF9)) == Fq(2, 1, kF9));  // (1+i)(-1+i) = 1
  CHECK(inverse_by_scan(Fq(1, 1, kF9)) == Fq(2, 1, kF9));
  CHECK_THROWS_AS(inverse(Fq::zero(kF9)), ZeroDivisor);
  for (const Fq& a : enumerate_elements(kF49)) {
    if (a.is_zero()) continue;
    CHECK(a * inverse(a) == Fq::one(kF49));
    CHECK(inverse(a) == inverse_by_scan(a));
  }
}

TEST_CASE("norm") {
  CHECK(norm(Fq(1, 1, kF9)) == 2);
  CHECK(norm(Fq::zero(kF9)) == 0);
  CHECK(norm(Fq::i(kF9)) == 1);
  for (long long p : {3, 7, 11}) {
    const FieldSpec ctx = FieldSpec::validate(p, 2);
    std::set<long long> hit;
    for (const Fq& a : enumerate_elements(ctx)) {
      for (const Fq& b : enumerate_elements(ctx))
        CHECK(norm(a * b) == (norm(a) * norm(b)) % p);
      CHECK(norm(a) == (conj(a) * a).re());
      if (!a.is_zero()) hit.insert(norm(a));
    }
    // surjective onto F_p^*
    for (long long v = 1; v < p; ++v) CHECK(hit.count(v) == 1);
  }
}

TEST_CASE("element enumeration") {
  const auto f9 = enumerate_elements(kF9);
  CHECK(f9.size() == 9);
  const std::set<std::pair<long long, long long>> want{
      {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
  std::set<std::pair<long long, long long>> got;
  for (const Fq& a : f9) got.insert({a.re(), a.im()});
  CHECK(got == want);

  const auto f2 = enumerate_elements(kF2);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == Fq(0, kF2));
  CHECK(f2[1] == Fq(1, kF2));

  CHECK(enumerate_elements(kF49).size() == 49);
  CHECK_THROWS_AS(enumerate_elements(FieldSpec::validate(1019, 2)), TooLarge);
}

TEST_CASE("field axioms, exhaustive") {
  for (FieldSpec ctx : {kF2, FieldSpec::validate(3, 1), kF9, kF7}) {
    const auto elems = enumerate_elements(ctx);
    for (const Fq& a : elems)
      for (const Fq& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const Fq& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
  }
}

TEST_CASE("conjugation is an automorphism") {
  for (FieldSpec ctx : {kF9, kF49}) {
    const auto elems = enumerate_elements(ctx);
    for (const Fq& a : elems) {
      CHECK(conj(conj(a)) == a);
      for (const Fq& b : elems) {
        CHECK(conj(a * b) == conj(a) * conj(b));
        CHECK(conj(a + b) == conj(a) + conj(b));
      }
    }
  }
}

TEST_CASE("symmetric-range display") {
  CHECK(to_symmetric(2, 3) == -1);
  CHECK(to_symmetric(1, 2) == 1);
  CHECK(to_symmetric(4, 7) == -3);
  CHECK(to_symmetric(3, 7) == 3);
  CHECK(from_symmetric(-1, 3) == 2);
  CHECK(Fq(1, 2, kF9).str() == "1-i");
  CHECK(Fq(0, 1, kF9).str() == "i");
  CHECK(Fq(5, kF7).str() == "-2");
}
