#ifndef DQSIM_FIELD_HPP
#define DQSIM_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dqsim/errors.hpp"

namespace dqsim {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic context: the prime field F_p (degree 1) or its quadratic
/// extension F_{p^2} = F_p[i]/(i^2+1) (degree 2, requires p = 3 mod 4).
struct FieldSpec {
  long long p = 2;
  int degree = 1;

  static FieldSpec validate(long long p, int degree) {
    if (!is_prime(p)) throw NotPrime(p);
    if (degree == 2) {
      if (p == 2) throw Degree2WithP2();
      if (p % 4 == 1) throw BadResidue(p);
    }
    return FieldSpec{p, degree};
  }

  long long order() const {
    return degree == 2 ? p * p : p;
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Map a residue in [0, p) to the symmetric range used for display,
/// e.g. 2 mod 3 prints as -1.
inline long long to_symmetric(long long v, long long p) {
  return 2 * v > p ? v - p : v;
}

inline long long from_symmetric(long long v, long long p) {
  return ((v % p) + p) % p;
}

/// Element of the active field, stored as re + im*i with both residues
/// reduced into [0, p). Degree-1 elements keep im = 0.
class Fq {
 public:
  Fq() = default;
  Fq(long long re, long long im, FieldSpec ctx)
      : re_(from_symmetric(re, ctx.p)), im_(from_symmetric(im, ctx.p)), ctx_(ctx) {
    if (ctx.degree == 1 && im_ != 0) throw ContextMismatch();
  }
  Fq(long long re, FieldSpec ctx) : Fq(re, 0, ctx) {}

  static Fq zero(FieldSpec ctx) { return Fq(0, 0, ctx); }
  static Fq one(FieldSpec ctx) { return Fq(1, 0, ctx); }
  static Fq i(FieldSpec ctx) { return Fq(0, 1, ctx); }

  long long re() const { return re_; }
  long long im() const { return im_; }
  const FieldSpec& ctx() const { return ctx_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  friend Fq operator+(const Fq& a, const Fq& b) {
    a.check(b);
    return raw((a.re_ + b.re_) % a.ctx_.p, (a.im_ + b.im_) % a.ctx_.p, a.ctx_);
  }
  friend Fq operator-(const Fq& a, const Fq& b) {
    a.check(b);
    const long long p = a.ctx_.p;
    return raw((a.re_ - b.re_ + p) % p, (a.im_ - b.im_ + p) % p, a.ctx_);
  }
  friend Fq operator*(const Fq& a, const Fq& b) {
    a.check(b);
    const long long p = a.ctx_.p;
    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i with i^2 = -1
    long long re = ((a.re_ * b.re_ - a.im_ * b.im_) % p + p) % p;
    long long im = (a.re_ * b.im_ + a.im_ * b.re_) % p;
    return raw(re, im, a.ctx_);
  }
  Fq operator-() const { return raw((ctx_.p - re_) % ctx_.p, (ctx_.p - im_) % ctx_.p, ctx_); }

  friend bool operator==(const Fq& a, const Fq& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.ctx_ == b.ctx_;
  }

  /// Ordering on the (re, im) encoding; context-blind, used for
  /// canonical representatives and deterministic output.
  friend bool operator<(const Fq& a, const Fq& b) {
    return a.re_ != b.re_ ? a.re_ < b.re_ : a.im_ < b.im_;
  }

  std::string str() const {
    const long long re = to_symmetric(re_, ctx_.p);
    const long long im = to_symmetric(im_, ctx_.p);
    if (ctx_.degree == 1 || im == 0) return std::to_string(re);
    std::string s;
    if (re != 0) s += std::to_string(re) + (im > 0 ? "+" : "");
    if (im == 1)
      s += "i";
    else if (im == -1)
      s += "-i";
    else
      s += std::to_string(im) + "i";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fq& a) { return os << a.str(); }

 private:
  static Fq raw(long long re, long long im, FieldSpec ctx) {
    Fq r;
    r.re_ = re;
    r.im_ = im;
    r.ctx_ = ctx;
    return r;
  }
  void check(const Fq& other) const {
    if (!(ctx_ == other.ctx_)) throw ContextMismatch();
  }

  long long re_ = 0;
  long long im_ = 0;
  FieldSpec ctx_{};
};

/// Complex conjugate re - im*i. Coincides with the Frobenius map a^p when
/// p = 3 (mod 4); the agreement is a tested property, not assumed here.
inline Fq conj(const Fq& a) {
  if (a.ctx().degree == 1) return a;
  return Fq(a.re(), -a.im(), a.ctx());
}

inline Fq pow(Fq base, unsigned long long e) {
  Fq acc = Fq::one(base.ctx());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// Multiplicative inverse via a^(q-2); the contract is a * inverse(a) = 1.
inline Fq inverse(const Fq& a) {
  if (a.is_zero()) throw ZeroDivisor();
  return pow(a, static_cast<unsigned long long>(a.ctx().order() - 2));
}

/// Field norm N(a) = conj(a) * a = re^2 + im^2 mod p; lands in the base field.
inline long long norm(const Fq& a) {
  return (a.re() * a.re() + a.im() * a.im()) % a.ctx().p;
}

inline constexpr long long kEnumerationGuard = 1'000'000;

/// All p^degree elements, lexicographic on (re, im).
inline std::vector<Fq> enumerate_elements(FieldSpec ctx) {
  if (ctx.order() > kEnumerationGuard)
    throw TooLarge("field order " + std::to_string(ctx.order()));
  std::vector<Fq> out;
  out.reserve(static_cast<std::size_t>(ctx.order()));
  const long long im_max = ctx.degree == 2 ? ctx.p : 1;
  for (long long re = 0; re < ctx.p; ++re)
    for (long long im = 0; im < im_max; ++im) out.push_back(Fq(re, im, ctx));
  return out;
}

}  // namespace dqsim

#endif
