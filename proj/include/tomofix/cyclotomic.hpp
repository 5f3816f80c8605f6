// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// Elements are residues modulo the N-th cyclotomic polynomial Phi_N, stored
// in the power basis 1, z, ..., z^{phi(N)-1} with exact rational
// coefficients. Phi_N is irreducible over Q, so the representation is
// canonical and the zero test is plain coefficient comparison. Phi_N itself
// is computed by the recursive division Phi_N = (x^N-1) / prod_{d|N, d<N}
// Phi_d; no table dependence.
#pragma once

#include <atomic>
#include <complex>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tomofix/rings.hpp"

namespace tomofix {

struct conductor_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixed-conductor arithmetic embeds into the lcm conductor; the cap keeps a
// runaway lcm from allocating gigantic reduction tables. Overridable through
// the TOMOFIX_CONDUCTOR_CAP environment variable or set_conductor_cap().
inline std::atomic<unsigned long>& conductor_cap_storage() {
  static std::atomic<unsigned long> cap = [] {
    unsigned long v = 10080;
    if (const char* env = std::getenv("TOMOFIX_CONDUCTOR_CAP")) {
      char* end = nullptr;
      unsigned long parsed = std::strtoul(env, &end, 10);
      if (end != env && parsed > 0) v = parsed;
    }
    return v;
  }();
  return cap;
}

inline unsigned long conductor_cap() { return conductor_cap_storage().load(); }
inline void set_conductor_cap(unsigned long cap) { conductor_cap_storage().store(cap); }

namespace cyc_detail {

using ZPoly = std::vector<mpz_class>;  // little-endian coefficients

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; the remainder must vanish.
inline ZPoly divide_exact(ZPoly num, const ZPoly& den) {
  trim(num);
  if (num.size() < den.size()) throw std::logic_error("divide_exact: degree too small");
  ZPoly q(num.size() - den.size() + 1, mpz_class(0));
  for (std::size_t shift = q.size(); shift-- > 0;) {
    mpz_class c = num[shift + den.size() - 1];
    if (c == 0) continue;
    q[shift] = c;
    for (std::size_t k = 0; k < den.size(); ++k) num[shift + k] -= c * den[k];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("divide_exact: nonzero remainder");
  return q;
}

inline std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
  std::vector<std::pair<unsigned long, unsigned>> f;
  for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline unsigned long euler_phi(unsigned long n) {
  unsigned long out = n;
  for (auto [p, e] : factorize(n)) out = out / p * (p - 1);
  return out;
}

struct ConductorData {
  unsigned long n;
  unsigned long phi;
  ZPoly minimal;                        // Phi_N, monic, degree phi
  std::vector<std::vector<mpz_class>> pow;  // x^j mod Phi_N, j = 0..max(N-1, 2phi-2)
};

class ConductorCache {
 public:
  static const ConductorData& get(unsigned long n) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    if (n > conductor_cap())
      throw conductor_cap_error("conductor " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(conductor_cap()));
    ConductorCache& self = instance();
    std::lock_guard<std::mutex> lock(self.mu_);
    auto it = self.data_.find(n);
    if (it == self.data_.end()) it = self.data_.emplace(n, self.build(n)).first;
    return *it->second;
  }

 private:
  static ConductorCache& instance() {
    static ConductorCache cache;
    return cache;
  }

  const ZPoly& cyclotomic_poly(unsigned long n) {
    auto it = phi_polys_.find(n);
    if (it != phi_polys_.end()) return it->second;
    ZPoly num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    for (unsigned long d = 1; d < n; ++d)
      if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_poly(d));
    return phi_polys_.emplace(n, std::move(num)).first->second;
  }

  std::unique_ptr<ConductorData> build(unsigned long n) {
    auto data = std::make_unique<ConductorData>();
    data->n = n;
    data->minimal = cyclotomic_poly(n);
    data->phi = data->minimal.size() - 1;
    const unsigned long phi = data->phi;
    unsigned long top = std::max<unsigned long>(n == 0 ? 0 : n - 1,
                                                phi >= 1 ? 2 * phi - 2 : 0);
    data->pow.resize(top + 1);
    for (unsigned long j = 0; j <= top; ++j) {
      std::vector<mpz_class> row(phi, mpz_class(0));
      if (j < phi) {
        row[j] = 1;
      } else {
        const std::vector<mpz_class>& prev = data->pow[j - 1];
        // multiply by x, then fold the overflow via x^phi = -(lower terms)
        mpz_class carry = prev[phi - 1];
        for (unsigned long i = phi; i-- > 1;) row[i] = prev[i - 1];
        row[0] = 0;
        if (carry != 0)
          for (unsigned long i = 0; i < phi; ++i) row[i] -= carry * data->minimal[i];
      }
      data->pow[j] = std::move(row);
    }
    return data;
  }

  std::mutex mu_;
  std::map<unsigned long, std::unique_ptr<ConductorData>> data_;
  std::map<unsigned long, ZPoly> phi_polys_;
};

using QPoly = std::vector<mpq_class>;

inline int q_degree(const QPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

inline QPoly q_divmod(QPoly num, const QPoly& den, QPoly* quotient = nullptr) {
  int dd = q_degree(den);
  if (dd < 0) throw std::invalid_argument("q_divmod: division by zero polynomial");
  int dn = q_degree(num);
  QPoly q(dn >= dd ? static_cast<std::size_t>(dn - dd + 1) : 0, mpq_class(0));
  while ((dn = q_degree(num)) >= dd) {
    mpq_class c = num[dn] / den[dd];
    q[dn - dd] = c;
    for (int k = 0; k <= dd; ++k) num[dn - dd + k] -= c * den[k];
  }
  if (quotient) *quotient = std::move(q);
  return num;
}

}  // namespace cyc_detail

// An element of Q(zeta_N) in canonical power-basis form.
class CycElem {
 public:
  CycElem() : n_(1), c_(1, mpq_class(0)) {}

  static CycElem from_rational(const mpq_class& q) {
    CycElem x;
    x.c_[0] = q;
    return x;
  }
  static CycElem from_integer(long v) { return from_rational(mpq_class(v)); }

  unsigned long conductor() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const mpq_class& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  mpq_class rational_value() const {
    if (!is_rational()) throw std::domain_error("CycElem: not a rational value");
    return c_[0];
  }

  // Image in Q(zeta_M); requires N | M.
  CycElem embed(unsigned long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("CycElem::embed: conductor must be a multiple");
    const auto& data = cyc_detail::ConductorCache::get(m);
    unsigned long f = m / n_;
    CycElem out = zero_at(m, data.phi);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      const auto& row = data.pow[j * f];
      for (unsigned long i = 0; i < data.phi; ++i) out.c_[i] += c_[j] * row[i];
    }
    return out;
  }

  friend CycElem operator+(const CycElem& a, const CycElem& b) {
    return combined(a, b, false);
  }
  friend CycElem operator-(const CycElem& a, const CycElem& b) {
    return combined(a, b, true);
  }
  CycElem operator-() const {
    CycElem out = *this;
    for (mpq_class& q : out.c_) q = -q;
    return out;
  }

  friend CycElem operator*(const CycElem& a, const CycElem& b) {
    auto [x, y] = to_common(a, b);
    const auto& data = cyc_detail::ConductorCache::get(x.n_);
    unsigned long phi = data.phi;
    std::vector<mpq_class> conv(2 * phi - 1, mpq_class(0));
    for (unsigned long i = 0; i < phi; ++i) {
      if (x.c_[i] == 0) continue;
      for (unsigned long j = 0; j < phi; ++j) {
        if (y.c_[j] == 0) continue;
        conv[i + j] += x.c_[i] * y.c_[j];
      }
    }
    CycElem out = zero_at(x.n_, phi);
    for (unsigned long i = 0; i < phi; ++i) out.c_[i] = std::move(conv[i]);
    for (unsigned long j = phi; j < conv.size(); ++j) {
      if (conv[j] == 0) continue;
      const auto& row = data.pow[j];
      for (unsigned long i = 0; i < phi; ++i) out.c_[i] += conv[j] * row[i];
    }
    return out;
  }

  friend bool operator==(const CycElem& a, const CycElem& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    auto [x, y] = to_common(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  CycElem inv() const {
    if (is_zero()) throw std::domain_error("CycElem::inv: division by zero");
    const auto& data = cyc_detail::ConductorCache::get(n_);
    // extended Euclid in Q[x] against Phi_N (irreducible over Q)
    cyc_detail::QPoly r0(data.minimal.size());
    for (std::size_t i = 0; i < data.minimal.size(); ++i) r0[i] = mpq_class(data.minimal[i]);
    cyc_detail::QPoly r1(c_.begin(), c_.end());
    cyc_detail::QPoly s0(1, mpq_class(0)), s1(1, mpq_class(1));
    while (cyc_detail::q_degree(r1) > 0) {
      cyc_detail::QPoly q;
      cyc_detail::QPoly r2 = cyc_detail::q_divmod(r0, r1, &q);
      // s2 = s0 - q*s1
      cyc_detail::QPoly s2(std::max<std::size_t>(s0.size(), q.size() + s1.size()), mpq_class(0));
      for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
      }
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (cyc_detail::q_degree(r1) != 0)
      throw std::logic_error("CycElem::inv: gcd with the minimal polynomial is not constant");
    mpq_class lead = r1[0];
    CycElem out = zero_at(n_, data.phi);
    for (std::size_t i = 0; i < s1.size() && i < data.phi; ++i) out.c_[i] = s1[i] / lead;
    // s1 may formally exceed the basis length only by zero coefficients
    for (std::size_t i = data.phi; i < s1.size(); ++i)
      if (s1[i] != 0) throw std::logic_error("CycElem::inv: non-canonical Bezout cofactor");
    return out;
  }

  CycElem pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    CycElem base = *this;
    CycElem acc = one_at(n_);
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
      if (k & 1ull) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  // Galois map zeta -> zeta^a for gcd(a, N) = 1.
  CycElem galois(unsigned long a) const {
    a %= n_;
    if (std::gcd(a, n_) != 1)
      throw std::invalid_argument("CycElem::galois: exponent not coprime to conductor");
    const auto& data = cyc_detail::ConductorCache::get(n_);
    CycElem out = zero_at(n_, data.phi);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      const auto& row = data.pow[(j * a) % n_];
      for (unsigned long i = 0; i < data.phi; ++i) out.c_[i] += c_[j] * row[i];
    }
    return out;
  }

  // Complex conjugation zeta -> zeta^{-1}; for roots of unity u this gives
  // conj(u) * u = 1.
  CycElem conjugate() const {
    if (n_ <= 2) return *this;
    return galois(n_ - 1);
  }

  // Floating-point image for display and sanity scans only.
  std::complex<double> approx() const {
    std::complex<double> z = std::polar(1.0, 2.0 * 3.14159265358979323846 / static_cast<double>(n_));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + std::complex<double>(c_[i].get_d(), 0.0);
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      mpq_class q = c_[i];
      std::string sign = q < 0 ? "-" : (first ? "" : "+");
      if (q < 0) q = -q;
      std::string mag = q.get_str();
      std::string term;
      if (i == 0) {
        term = mag;
      } else {
        std::string var = "z" + std::to_string(n_) + (i > 1 ? "^" + std::to_string(i) : "");
        term = (mag == "1") ? var : mag + "*" + var;
      }
      out += sign + term;
      first = false;
    }
    return out;
  }

  static CycElem zero_at(unsigned long n) {
    return zero_at(n, cyc_detail::ConductorCache::get(n).phi);
  }
  static CycElem one_at(unsigned long n) {
    CycElem x = zero_at(n);
    x.c_[0] = 1;
    return x;
  }

 private:
  friend CycElem root_of_unity(unsigned long n, long long k);

  static CycElem zero_at(unsigned long n, unsigned long phi) {
    CycElem x;
    x.n_ = n;
    x.c_.assign(phi, mpq_class(0));
    return x;
  }

  static std::pair<CycElem, CycElem> to_common(const CycElem& a, const CycElem& b) {
    if (a.n_ == b.n_) return {a, b};
    unsigned long g = std::gcd(a.n_, b.n_);
    unsigned long quotient = a.n_ / g;
    if (b.n_ > conductor_cap() / quotient)
      throw conductor_cap_error("lcm of conductors " + std::to_string(a.n_) + ", " +
                                std::to_string(b.n_) + " exceeds the cap");
    unsigned long l = quotient * b.n_;
    return {a.embed(l), b.embed(l)};
  }

  static CycElem combined(const CycElem& a, const CycElem& b, bool subtract) {
    auto [x, y] = to_common(a, b);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (subtract)
        x.c_[i] -= y.c_[i];
      else
        x.c_[i] += y.c_[i];
    }
    return x;
  }

  unsigned long n_;
  std::vector<mpq_class> c_;
};

// zeta_N^k as an exact element (k reduced mod N).
inline CycElem root_of_unity(unsigned long n, long long k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: order must be positive");
  const auto& data = cyc_detail::ConductorCache::get(n);
  long long r = k % static_cast<long long>(n);
  if (r < 0) r += static_cast<long long>(n);
  CycElem out = CycElem::zero_at(n, data.phi);
  const auto& row = data.pow[static_cast<unsigned long>(r)];
  for (unsigned long i = 0; i < data.phi; ++i) out.c_[i] = mpq_class(row[i]);
  return out;
}

// Least m >= 1 with u^m = 1. Roots of unity inside Q(zeta_N) form the group
// generated by -1 and zeta_N, so any root of unity has order dividing
// lcm(2, N); anything else is rejected.
inline unsigned long order_of(const CycElem& u) {
  unsigned long n = u.conductor();
  unsigned long bound = std::lcm<unsigned long, unsigned long>(2, n);
  CycElem one = CycElem::one_at(u.conductor());
  if (u.pow(static_cast<long long>(bound)) != one)
    throw std::invalid_argument("order_of: not a root of unity");
  unsigned long m = bound;
  for (auto [p, e] : cyc_detail::factorize(bound)) {
    for (unsigned i = 0; i < e; ++i) {
      if (m % p == 0 && u.pow(static_cast<long long>(m / p)) == one)
        m /= p;
      else
        break;
    }
  }
  return m;
}

template <>
struct RingTraits<CycElem> {
  static CycElem zero(const CycElem&) { return CycElem(); }
  static CycElem one(const CycElem&) { return CycElem::from_integer(1); }
  static const char* name() { return "Qcyc"; }
};

}  // namespace tomofix
