// Laurent polynomials in two variables with integer coefficients, and the
// characteristic polynomial m_W of a window.
#pragma once

#include <map>
#include <utility>

#include "tomofix/cyclotomic.hpp"
#include "tomofix/lattice.hpp"

namespace tomofix {

class LaurentPoly2 {
 public:
  using Exponent = std::pair<long long, long long>;

  LaurentPoly2() = default;

  void add_term(long long e1, long long e2, long long c) {
    if (c == 0) return;
    Exponent e{e1, e2};
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static LaurentPoly2 constant(long long c) {
    LaurentPoly2 f;
    f.add_term(0, 0, c);
    return f;
  }
  static LaurentPoly2 monomial(long long e1, long long e2, long long c = 1) {
    LaurentPoly2 f;
    f.add_term(e1, e2, c);
    return f;
  }

  const std::map<Exponent, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 out = a;
    for (auto& [e, c] : b.terms_) out.add_term(e.first, e.second, c);
    return out;
  }
  friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 out = a;
    for (auto& [e, c] : b.terms_) out.add_term(e.first, e.second, -c);
    return out;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 out;
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_)
        out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  std::map<Exponent, long long> terms_;
};

// m_W(x, y) = sum over window points of x^{i1} y^{i2}.
inline LaurentPoly2 char_poly(const Window& w) {
  LaurentPoly2 f;
  for (LatticePoint p : w) f.add_term(p.i1, p.i2, 1);
  return f;
}

// f*(x, y) = f(1/x, 1/y).
inline LaurentPoly2 star(const LaurentPoly2& f) {
  LaurentPoly2 out;
  for (auto& [e, c] : f.terms()) out.add_term(-e.first, -e.second, c);
  return out;
}

// Exact evaluation at invertible coordinates (roots of unity in practice).
inline CycElem eval(const LaurentPoly2& f, const CycElem& x, const CycElem& y) {
  CycElem acc;
  for (auto& [e, c] : f.terms()) {
    CycElem term = x.pow(e.first) * y.pow(e.second);
    acc = acc + CycElem::from_integer(c) * term;
  }
  return acc;
}

}  // namespace tomofix
