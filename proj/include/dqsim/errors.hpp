#ifndef DQSIM_ERRORS_HPP
#define DQSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dqsim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
  explicit NotPrime(long long p) : Error("not prime: " + std::to_string(p)) {}
};

// degree 2 requested with p = 1 (mod 4): x^2+1 splits, no extension
struct BadResidue : Error {
  explicit BadResidue(long long p)
      : Error("x^2+1 reducible: p = " + std::to_string(p) + " is 1 (mod 4)") {}
};

struct Degree2WithP2 : Error {
  Degree2WithP2() : Error("x^2+1 = (x+1)^2 over F_2; no degree-2 extension") {}
};

struct ContextMismatch : Error {
  ContextMismatch() : Error("operands belong to different fields") {}
};

struct ZeroDivisor : Error {
  ZeroDivisor() : Error("inverse of zero") {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error("exhaustive guard exceeded: " + what) {}
};

struct DimensionMismatch : Error {
  DimensionMismatch() : Error("dimension mismatch") {}
};

struct NotSquare : Error {
  NotSquare() : Error("matrix is not square") {}
};

struct NotTwoByTwo : Error {
  NotTwoByTwo() : Error("operation requires a 2x2 matrix") {}
};

struct ZeroState : Error {
  ZeroState() : Error("the zero vector is not a state") {}
};

struct ZeroVector : Error {
  ZeroVector() : Error("zero vector") {}
};

struct IsotropicVector : Error {
  explicit IsotropicVector(const std::string& witness)
      : Error("vector has self inner product 0, no unit scaling exists: " + witness) {}
};

struct ImpossibleOutcome : Error {
  explicit ImpossibleOutcome(std::size_t outcome)
      : Error("outcome " + std::to_string(outcome) + " has zero amplitude") {}
};

struct ArityTooLarge : Error {
  explicit ArityTooLarge(std::size_t n, std::size_t limit)
      : Error("oracle arity " + std::to_string(n) + " exceeds guard " + std::to_string(limit)) {}
};

struct NoMarked : Error {
  NoMarked() : Error("database has no marked record") {}
};

struct MultiplyMarked : Error {
  MultiplyMarked() : Error("database has more than one marked record") {}
};

struct PromiseViolated : Error {
  PromiseViolated() : Error("oracle is neither constant nor balanced") {}
};

struct NoUnitaryScaling : Error {
  explicit NoUnitaryScaling(long long p)
      : Error("no scalar makes the Hadamard unitary over F_{p^2}, p = " + std::to_string(p)) {}
};

struct NotInvertibleN : Error {
  explicit NotInvertibleN(long long n, long long p)
      : Error("N = " + std::to_string(n) + " not invertible mod " + std::to_string(p)) {}
};

struct IsotropicStart : Error {
  explicit IsotropicStart(long long n, long long p)
      : Error("uniform state over " + std::to_string(n) + " records is isotropic mod " +
              std::to_string(p)) {}
};

}  // namespace dqsim

#endif
