// Fixed arrays of polynomial growth.
//
// Pipeline: shift the window polynomial to a zero-locus point in local
// coordinates, turn it into a constant-coefficient differential operator
// (coordinates map to negated partials), compute the polynomial solutions
// of bounded degree by exact elimination, and synthesize arrays from the
// solutions via rising factorials. A combinatorial dimension formula for
// the solution space is implemented independently of the kernel route.
#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tomofix/arrays.hpp"
#include "tomofix/linalg.hpp"
#include "tomofix/zero_locus.hpp"

namespace tomofix {

namespace poly_detail {

using Exponent = std::pair<long long, long long>;

// Shared exact-coefficient term map for polynomials in (w1, w2) and
// operators in (d1, d2).
class TermMap {
 public:
  void add_term(long long s1, long long s2, const CycElem& c) {
    if (s1 < 0 || s2 < 0) throw std::invalid_argument("TermMap: exponents must be nonnegative");
    if (c.is_zero()) return;
    Exponent e{s1, s2};
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Exponent, CycElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long degree() const {
    long long d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  std::string str(const char* v1, const char* v2) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
      os << (first ? "" : " + ") << "(" << c.str() << ")";
      if (e.first > 0) os << "*" << v1 << (e.first > 1 ? "^" + std::to_string(e.first) : "");
      if (e.second > 0) os << "*" << v2 << (e.second > 1 ? "^" + std::to_string(e.second) : "");
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const TermMap& a, const TermMap& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (auto& [e, c] : a.terms_) {
      if (it->first != e || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }

 protected:
  std::map<Exponent, CycElem> terms_;
};

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace poly_detail

// Polynomial in two local coordinates with exact cyclotomic coefficients.
class Poly2 : public poly_detail::TermMap {
 public:
  std::string str() const { return TermMap::str("x", "y"); }

  static Poly2 constant(const CycElem& c) {
    Poly2 g;
    g.add_term(0, 0, c);
    return g;
  }
  static Poly2 monomial(long long s1, long long s2, const CycElem& c) {
    Poly2 g;
    g.add_term(s1, s2, c);
    return g;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (auto& [e, c] : b.terms()) out.add_term(e.first, e.second, c);
    return out;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (auto& [e, c] : b.terms()) out.add_term(e.first, e.second, -c);
    return out;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (auto& [ea, ca] : a.terms())
      for (auto& [eb, cb] : b.terms())
        out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
  }
  friend Poly2 operator*(const CycElem& s, const Poly2& a) {
    Poly2 out;
    for (auto& [e, c] : a.terms()) out.add_term(e.first, e.second, s * c);
    return out;
  }
};

// Constant-coefficient differential operator sum c_s d^s.
class DiffOp2 : public poly_detail::TermMap {
 public:
  std::string str() const { return TermMap::str("d1", "d2"); }

  static DiffOp2 from_terms(std::map<poly_detail::Exponent, CycElem> t) {
    DiffOp2 d;
    for (auto& [e, c] : t) d.add_term(e.first, e.second, c);
    return d;
  }

  std::vector<LatticePoint> support() const {
    std::vector<LatticePoint> out;
    for (auto& [e, c] : terms()) out.push_back({e.first, e.second});
    return out;
  }

  friend DiffOp2 operator*(const DiffOp2& a, const DiffOp2& b) {
    DiffOp2 out;
    for (auto& [ea, ca] : a.terms())
      for (auto& [eb, cb] : b.terms())
        out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
  }
  friend DiffOp2 operator+(const DiffOp2& a, const DiffOp2& b) {
    DiffOp2 out = a;
    for (auto& [e, c] : b.terms()) out.add_term(e.first, e.second, c);
    return out;
  }
  friend DiffOp2 operator-(const DiffOp2& a, const DiffOp2& b) {
    DiffOp2 out = a;
    for (auto& [e, c] : b.terms()) out.add_term(e.first, e.second, -c);
    return out;
  }
};

// m_W(w + p): the window polynomial in local coordinates w centered at p,
// expanded exactly by binomials. Requires nonnegative window exponents.
// The constant term equals the evaluation of m_W at p, so it vanishes
// exactly when p lies in the zero locus.
inline Poly2 shift_char_poly(const Window& w, const TorusPoint& p) {
  long long max1 = 0, max2 = 0;
  for (LatticePoint q : w) {
    if (q.i1 < 0 || q.i2 < 0)
      throw std::invalid_argument("shift_char_poly: window has negative exponents");
    max1 = std::max(max1, q.i1);
    max2 = std::max(max2, q.i2);
  }
  std::vector<CycElem> xp(static_cast<std::size_t>(max1) + 1), yp(static_cast<std::size_t>(max2) + 1);
  xp[0] = CycElem::from_integer(1);
  yp[0] = CycElem::from_integer(1);
  CycElem x = p.x.value(), y = p.y.value();
  for (long long k = 1; k <= max1; ++k) xp[static_cast<std::size_t>(k)] = xp[static_cast<std::size_t>(k - 1)] * x;
  for (long long k = 1; k <= max2; ++k) yp[static_cast<std::size_t>(k)] = yp[static_cast<std::size_t>(k - 1)] * y;
  Poly2 out;
  for (LatticePoint q : w)
    for (long long a = 0; a <= q.i1; ++a)
      for (long long b = 0; b <= q.i2; ++b) {
        mpz_class coeff = poly_detail::binomial(static_cast<unsigned long>(q.i1), static_cast<unsigned long>(a)) *
                          poly_detail::binomial(static_cast<unsigned long>(q.i2), static_cast<unsigned long>(b));
        CycElem c = CycElem::from_rational(mpq_class(coeff)) *
                    xp[static_cast<std::size_t>(q.i1 - a)] * yp[static_cast<std::size_t>(q.i2 - b)];
        out.add_term(a, b, c);
      }
  return out;
}

// The algebra map sending w_i to -d_i: a monomial w^s becomes
// (-1)^{s1+s2} d^s with the coefficient carried along.
inline DiffOp2 f_minus(const Poly2& g) {
  DiffOp2 out;
  for (auto& [e, c] : g.terms()) {
    CycElem coeff = ((e.first + e.second) % 2 == 0) ? c : -c;
    out.add_term(e.first, e.second, coeff);
  }
  return out;
}

// Inverse transport on polynomials (w_i maps to d_i): plain coefficient
// transfer from monomials to derivatives.
inline DiffOp2 f_minus_inv(const Poly2& g) {
  DiffOp2 out;
  for (auto& [e, c] : g.terms()) out.add_term(e.first, e.second, c);
  return out;
}

// The operator attached to a window at a torus point. The shifted constant
// term must vanish (the point should be in the zero locus) unless the
// caller explicitly allows probing elsewhere.
inline DiffOp2 window_operator(const Window& w, const TorusPoint& p,
                               bool require_vanishing_constant = true) {
  Poly2 shifted = shift_char_poly(w, p);
  if (require_vanishing_constant) {
    auto it = shifted.terms().find({0, 0});
    if (it != shifted.terms().end() && !it->second.is_zero())
      throw std::invalid_argument("window_operator: constant term does not vanish at the point");
  }
  return f_minus(shifted);
}

// Formal application: d^s acting on w^t gives t!/(t-s)! w^{t-s}.
inline Poly2 apply(const DiffOp2& d, const Poly2& g) {
  Poly2 out;
  for (auto& [s, cs] : d.terms())
    for (auto& [t, gt] : g.terms()) {
      if (t.first < s.first || t.second < s.second) continue;
      mpz_class fall(1);
      for (long long k = t.first; k > t.first - s.first; --k) fall *= static_cast<long>(k);
      for (long long k = t.second; k > t.second - s.second; --k) fall *= static_cast<long>(k);
      CycElem c = CycElem::from_rational(mpq_class(fall)) * cs * gt;
      out.add_term(t.first - s.first, t.second - s.second, c);
    }
  return out;
}

// Exponents of monomials of total degree <= N, graded-lexicographic order.
inline std::vector<poly_detail::Exponent> simplex_exponents(long long n) {
  std::vector<poly_detail::Exponent> out;
  for (long long d = 0; d <= n; ++d)
    for (long long s1 = 0; s1 <= d; ++s1) out.emplace_back(s1, d - s1);
  return out;
}

inline std::size_t simplex_size(long long n) {
  return static_cast<std::size_t>((n + 1) * (n + 2) / 2);
}

struct SolutionSpace {
  long long degree_bound = 0;
  std::vector<Poly2> basis;
  std::size_t dimension() const { return basis.size(); }
};

// Polynomial solutions of Dg = 0 of degree at most N: the exact kernel of
// the induced linear map on the monomial simplex.
inline SolutionSpace sol_space(const DiffOp2& d, long long n) {
  if (n < 0) throw std::invalid_argument("sol_space: degree bound must be nonnegative");
  const std::vector<poly_detail::Exponent> cols = simplex_exponents(n);
  std::map<poly_detail::Exponent, std::size_t> row_of;
  for (const auto& e : cols) row_of.emplace(e, row_of.size());
  CycElem zero, one = CycElem::from_integer(1);
  std::vector<std::vector<CycElem>> m(cols.size(), std::vector<CycElem>(cols.size(), zero));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Poly2 image = apply(d, Poly2::monomial(cols[c].first, cols[c].second, one));
    for (auto& [e, v] : image.terms()) m[row_of.at(e)][c] = m[row_of.at(e)][c] + v;
  }
  Rref<CycElem> r = rref(std::move(m));
  SolutionSpace out;
  out.degree_bound = n;
  for (auto& vec : kernel_from_rref(r, cols.size(), zero, one)) {
    Poly2 g;
    for (std::size_t c = 0; c < cols.size(); ++c) g.add_term(cols[c].first, cols[c].second, vec[c]);
    if (!apply(d, g).is_zero())
      throw verification_error("sol_space: kernel vector is not annihilated");
    out.basis.push_back(std::move(g));
  }
  return out;
}

// Combinatorial dimension count: (N+1)(N+2)/2 minus the number of
// nonnegative points of the difference set (simplex minus support),
// clamped at zero.
inline std::size_t dim_formula(const DiffOp2& d, long long n) {
  if (n < 0) throw std::invalid_argument("dim_formula: degree bound must be nonnegative");
  std::set<poly_detail::Exponent> diff;
  for (const auto& t : simplex_exponents(n))
    for (const LatticePoint& s : d.support()) {
      long long u1 = t.first - s.i1, u2 = t.second - s.i2;
      if (u1 >= 0 && u2 >= 0) diff.emplace(u1, u2);
    }
  std::size_t total = simplex_size(n);
  return diff.size() >= total ? 0 : total - diff.size();
}

// k raised s: (k+1)(k+2)...(k+s), the empty product being 1.
inline mpz_class rising_factorial(long long k, long long s) {
  if (s < 0) throw std::invalid_argument("rising_factorial: s must be nonnegative");
  mpz_class out(1);
  for (long long t = 1; t <= s; ++t) out *= mpz_class(static_cast<long>(k + t));
  return out;
}

// Array synthesis from a polynomial solution g of the window operator at p:
// entry at k is sum_s c_s (-k) raised s times p^{k-s}, with the transported
// coefficients c_s. The result is checked to have vanishing window sums on
// the whole interior of the region.
inline PatchArray<CycElem> array_from_solution(const Window& w, const TorusPoint& p,
                                               const Poly2& g, const Rect& region) {
  const DiffOp2 transported = f_minus_inv(g);
  CycElem x = p.x.value(), y = p.y.value();
  PatchArray<CycElem> out(region, CycElem());
  for (long long k2 = region.jmin; k2 <= region.jmax; ++k2)
    for (long long k1 = region.imin; k1 <= region.imax; ++k1) {
      CycElem acc;
      for (auto& [s, c] : transported.terms()) {
        mpz_class rf = rising_factorial(-k1, s.first) * rising_factorial(-k2, s.second);
        if (rf == 0) continue;
        CycElem term = CycElem::from_rational(mpq_class(rf)) * c *
                       x.pow(k1 - s.first) * y.pow(k2 - s.second);
        acc = acc + term;
      }
      out.at(k1, k2) = acc;
    }
  if (!all_zero(delta_on_interior(w, out)))
    throw verification_error("array_from_solution: window sums do not vanish on the interior");
  out.set_generator_tag("from solution " + g.str() + " at (zeta_" + std::to_string(p.x.order) +
                        "^" + std::to_string(p.x.exp) + ", zeta_" + std::to_string(p.y.order) +
                        "^" + std::to_string(p.y.exp) + ")");
  return out;
}

}  // namespace tomofix
