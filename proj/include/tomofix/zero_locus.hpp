// Exact zero locus of the punctured square-window polynomial m_{S(n)*} on
// the unit torus.
//
// The closed form: every solution satisfies x^{n-1} y^{n-1} = 1, so with
// c = xy in mu_{n-1} the locus decomposes as the union over c of
//   S1(c) = {(x,y) in (mu*_{n-1})^2 : xy = c},
//   S2(c) = {(x,y) in (mu*_{(n-1)(n+1)})^2 : xy = c, x^{n+1} = c}.
// The oracle ignores the case analysis and just enumerates all of
// mu_M x mu_M, M = (n-1)(n+1), keeping exact zeros of m_{S(n)*}.
#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "tomofix/laurent.hpp"
#include "tomofix/parallel.hpp"

namespace tomofix {

// A root of unity in normal form zeta_order^exp with gcd(exp, order) = 1
// (order 1 means the value 1). Compact, orderable, and convertible to the
// exact field element on demand.
struct RootOfUnity {
  unsigned long order = 1;
  unsigned long exp = 0;

  static RootOfUnity from_power(unsigned long n, long long k) {
    if (n == 0) throw std::invalid_argument("RootOfUnity: order must be positive");
    long long r = k % static_cast<long long>(n);
    if (r < 0) r += static_cast<long long>(n);
    unsigned long e = static_cast<unsigned long>(r);
    unsigned long g = std::gcd(e, n);
    if (e == 0) return RootOfUnity{1, 0};
    return RootOfUnity{n / g, e / g};
  }

  CycElem value() const { return root_of_unity(order, static_cast<long long>(exp)); }

  RootOfUnity pow(long long e) const {
    long long r = e % static_cast<long long>(order);
    if (r < 0) r += static_cast<long long>(order);
    return from_power(order, static_cast<long long>(exp) * r);
  }
  RootOfUnity conj() const { return pow(-1); }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    unsigned long l = std::lcm(a.order, b.order);
    return from_power(l, static_cast<long long>(a.exp * (l / a.order)) +
                             static_cast<long long>(b.exp * (l / b.order)));
  }

  friend constexpr auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;
};

struct TorusPoint {
  RootOfUnity x, y;
  friend constexpr auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
};

inline CycElem eval(const LaurentPoly2& f, const TorusPoint& p) {
  return eval(f, p.x.value(), p.y.value());
}

namespace locus_detail {

// Exact zero test of m_{S(n)*}(zeta_M^s, zeta_M^t): accumulate the n^2 - 1
// window exponents modulo x^M - 1, then reduce once modulo Phi_M.
inline bool punctured_square_vanishes(long long n, const cyc_detail::ConductorData& data,
                                      unsigned long s, unsigned long t) {
  const unsigned long m = data.n;
  std::vector<long> acc(m, 0);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      acc[(static_cast<unsigned long>(i) * s + static_cast<unsigned long>(j) * t) % m] += 1;
  acc[0] -= 1;
  std::vector<mpz_class> red(data.phi, mpz_class(0));
  for (unsigned long k = 0; k < m; ++k) {
    if (acc[k] == 0) continue;
    const auto& row = data.pow[k];
    for (unsigned long i = 0; i < data.phi; ++i) red[i] += acc[k] * row[i];
  }
  for (const mpz_class& v : red)
    if (v != 0) return false;
  return true;
}

}  // namespace locus_detail

// Closed-form locus from the case analysis; every returned point is
// re-checked by exact evaluation.
inline std::vector<TorusPoint> square_zero_locus(long long n) {
  if (n < 2) throw std::invalid_argument("square_zero_locus: n must be >= 2");
  const unsigned long nm1 = static_cast<unsigned long>(n - 1);
  const unsigned long m = static_cast<unsigned long>((n - 1) * (n + 1));
  std::set<TorusPoint> pts;
  for (unsigned long a = 0; a < nm1; ++a) {
    // S1(c), c = zeta_{n-1}^a: x, y in mu*_{n-1} with xy = c
    for (unsigned long sx = 1; sx < nm1; ++sx) {
      unsigned long sy = (a + nm1 - sx % nm1) % nm1;
      if (sy == 0) continue;
      pts.insert(TorusPoint{RootOfUnity::from_power(nm1, sx),
                            RootOfUnity::from_power(nm1, sy)});
    }
    // S2(c): x in mu*_M with x^{n+1} = c, y = c/x != 1.
    // In exponents: t(n+1) = a(n+1) mod M  <=>  t = a mod (n-1).
    for (unsigned long r = 0; r <= static_cast<unsigned long>(n); ++r) {
      unsigned long t = (a + nm1 * r) % m;
      if (t == 0) continue;
      unsigned long ty = (a * static_cast<unsigned long>(n + 1) + m - t) % m;
      if (ty == 0) continue;
      pts.insert(TorusPoint{RootOfUnity::from_power(m, t), RootOfUnity::from_power(m, ty)});
    }
  }
  LaurentPoly2 f = char_poly(puncture(square_window(n)));
  std::vector<TorusPoint> out(pts.begin(), pts.end());
  for (const TorusPoint& p : out)
    if (!eval(f, p).is_zero())
      throw verification_error("square_zero_locus: constructed point does not vanish");
  return out;
}

// Independent oracle: exhaustive enumeration over mu_M x mu_M. The bound
// x^{n-1} y^{n-1} = 1 confines all torus zeros to roots of unity of order
// dividing M, so the enumeration domain is complete.
inline std::vector<TorusPoint> zero_locus_oracle(long long n, int threads = 1) {
  if (n < 2) throw std::invalid_argument("zero_locus_oracle: n must be >= 2");
  const unsigned long m = static_cast<unsigned long>((n - 1) * (n + 1));
  const auto& data = cyc_detail::ConductorCache::get(m);
  std::vector<std::vector<TorusPoint>> found(m);
  parallel_indexed(m, threads, [&](std::size_t s) {
    for (unsigned long t = 0; t < m; ++t)
      if (locus_detail::punctured_square_vanishes(n, data, static_cast<unsigned long>(s), t))
        found[s].push_back(TorusPoint{RootOfUnity::from_power(m, static_cast<long long>(s)),
                                      RootOfUnity::from_power(m, static_cast<long long>(t))});
  });
  std::set<TorusPoint> pts;
  for (auto& chunk : found) pts.insert(chunk.begin(), chunk.end());
  return std::vector<TorusPoint>(pts.begin(), pts.end());
}

}  // namespace tomofix
