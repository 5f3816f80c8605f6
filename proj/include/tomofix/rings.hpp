// Ring value types used throughout the library. All arithmetic is exact:
// arbitrary-precision integers and rationals come from GMP, modular values
// carry their modulus at runtime. There is deliberately no floating-point
// ring instance.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace tomofix {

// Raised when an identity that is asserted as part of an operation's
// contract fails to hold on the computed data.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// gmpxx does not canonicalize two-argument rational constructors; every
// rational built from a numerator/denominator pair must go through here.
inline mpq_class make_rational(const mpz_class& num, const mpz_class& den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline mpq_class make_rational(long num, long den) {
  return make_rational(mpz_class(num), mpz_class(den));
}

// Residue ring Z/mZ with a runtime modulus. Division is defined for unit
// operands only, so with a prime modulus this is the field F_p.
class Mod {
 public:
  Mod(std::int64_t value, std::uint64_t modulus) : m_(modulus) {
    if (modulus == 0) throw std::invalid_argument("Mod: modulus must be positive");
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += static_cast<std::int64_t>(modulus);
    v_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return m_; }

  friend Mod operator+(const Mod& a, const Mod& b) {
    a.check(b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.m_) s -= a.m_;
    return Mod(s, a.m_, raw_tag{});
  }
  friend Mod operator-(const Mod& a, const Mod& b) {
    a.check(b);
    std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.m_ - b.v_;
    return Mod(s, a.m_, raw_tag{});
  }
  friend Mod operator*(const Mod& a, const Mod& b) {
    a.check(b);
    unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    return Mod(static_cast<std::uint64_t>(p % a.m_), a.m_, raw_tag{});
  }
  Mod operator-() const { return Mod(v_ == 0 ? 0 : m_ - v_, m_, raw_tag{}); }

  friend bool operator==(const Mod& a, const Mod& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Mod& a, const Mod& b) { return !(a == b); }

  // Multiplicative inverse; requires gcd(value, modulus) = 1.
  Mod inv() const {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m_), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) throw std::domain_error("Mod::inv: value is not a unit");
    return Mod(t, m_);
  }

  Mod pow(std::uint64_t e) const {
    Mod base = *this;
    Mod acc(1 % static_cast<std::int64_t>(m_), m_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const { return std::to_string(v_); }

 private:
  struct raw_tag {};
  Mod(std::uint64_t v, std::uint64_t m, raw_tag) : v_(v), m_(m) {}
  void check(const Mod& other) const {
    if (m_ != other.m_) throw std::invalid_argument("Mod: mixed moduli");
  }

  std::uint64_t v_;
  std::uint64_t m_;
};

// Shape-aware zero/one: rings with runtime parameters (modulus, conductor)
// need a witness value to produce compatible constants.
template <class R>
struct RingTraits;

template <>
struct RingTraits<mpz_class> {
  static mpz_class zero(const mpz_class&) { return mpz_class(0); }
  static mpz_class one(const mpz_class&) { return mpz_class(1); }
  static const char* name() { return "Z"; }
};

template <>
struct RingTraits<mpq_class> {
  static mpq_class zero(const mpq_class&) { return mpq_class(0); }
  static mpq_class one(const mpq_class&) { return mpq_class(1); }
  static const char* name() { return "Q"; }
};

template <>
struct RingTraits<Mod> {
  static Mod zero(const Mod& like) { return Mod(0, like.modulus()); }
  static Mod one(const Mod& like) { return Mod(1, like.modulus()); }
  static const char* name() { return "Zmod"; }
};

template <class R>
concept RingValue = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { RingTraits<R>::zero(a) } -> std::convertible_to<R>;
  { RingTraits<R>::one(a) } -> std::convertible_to<R>;
};

}  // namespace tomofix
