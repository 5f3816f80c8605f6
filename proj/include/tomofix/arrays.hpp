// Arrays over commutative rings: wraparound torus arrays and finite
// rectangular patches of arrays on Z^2, plus the window-sum operator.
#pragma once

#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tomofix/lattice.hpp"
#include "tomofix/rings.hpp"

namespace tomofix {

template <RingValue R>
class TorusArray {
 public:
  TorusArray(long long n1, long long n2, const R& fill)
      : n1_(n1), n2_(n2), v_(checked_cells(n1, n2), fill) {}

  // Row-major values, flattened index k = i + n1*j.
  static TorusArray from_values(long long n1, long long n2, std::vector<R> values) {
    if (values.size() != checked_cells(n1, n2))
      throw std::invalid_argument("TorusArray: value count does not match dims");
    TorusArray a(n1, n2, values.front());
    a.v_ = std::move(values);
    return a;
  }

  long long n1() const { return n1_; }
  long long n2() const { return n2_; }
  std::size_t cells() const { return v_.size(); }

  // Index arithmetic wraps modulo (n1, n2).
  const R& at(long long i, long long j) const { return v_[index(i, j)]; }
  R& at(long long i, long long j) { return v_[index(i, j)]; }
  const R& at(LatticePoint p) const { return at(p.i1, p.i2); }

  const std::vector<R>& values() const { return v_; }

  friend bool operator==(const TorusArray& a, const TorusArray& b) {
    return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.v_ == b.v_;
  }

 private:
  static std::size_t checked_cells(long long n1, long long n2) {
    if (n1 <= 0 || n2 <= 0)
      throw std::invalid_argument("TorusArray: dims must be positive");
    return static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);
  }
  std::size_t index(long long i, long long j) const {
    long long a = i % n1_;
    if (a < 0) a += n1_;
    long long b = j % n2_;
    if (b < 0) b += n2_;
    return static_cast<std::size_t>(a + n1_ * b);
  }

  long long n1_, n2_;
  std::vector<R> v_;
};

struct Rect {
  long long imin, imax, jmin, jmax;  // inclusive bounds

  long long width() const { return imax - imin + 1; }
  long long height() const { return jmax - jmin + 1; }
  bool contains(LatticePoint p) const {
    return p.i1 >= imin && p.i1 <= imax && p.i2 >= jmin && p.i2 <= jmax;
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Finite rectangular view of an array on Z^2. Unlike TorusArray there is no
// wraparound: reading outside the rectangle is an error, never truncation.
// A patch may carry a tag describing the closed form it was generated
// from; the tag is annotation only and never takes part in equality.
template <RingValue R>
class PatchArray {
 public:
  PatchArray(Rect r, const R& fill) : r_(check(r)), v_(cells(r), fill) {}

  static PatchArray from_values(Rect r, std::vector<R> values) {
    if (values.size() != cells(check(r)))
      throw std::invalid_argument("PatchArray: value count does not match rect");
    PatchArray a(r, values.front());
    a.v_ = std::move(values);
    return a;
  }

  const Rect& rect() const { return r_; }

  const R& at(long long i, long long j) const { return v_[index(i, j)]; }
  R& at(long long i, long long j) { return v_[index(i, j)]; }
  const R& at(LatticePoint p) const { return at(p.i1, p.i2); }

  const std::vector<R>& values() const { return v_; }

  const std::string& generator_tag() const { return tag_; }
  void set_generator_tag(std::string tag) { tag_ = std::move(tag); }

  friend bool operator==(const PatchArray& a, const PatchArray& b) {
    return a.r_ == b.r_ && a.v_ == b.v_;
  }

 private:
  static Rect check(Rect r) {
    if (r.imax < r.imin || r.jmax < r.jmin)
      throw std::invalid_argument("PatchArray: degenerate rectangle");
    return r;
  }
  static std::size_t cells(Rect r) {
    return static_cast<std::size_t>(r.width()) * static_cast<std::size_t>(r.height());
  }
  std::size_t index(long long i, long long j) const {
    if (i < r_.imin || i > r_.imax || j < r_.jmin || j > r_.jmax)
      throw std::out_of_range("PatchArray: cell outside the rectangle");
    return static_cast<std::size_t>((i - r_.imin) + r_.width() * (j - r_.jmin));
  }

  Rect r_;
  std::vector<R> v_;
  std::string tag_;
};

// d_{W+k}(a): the sum of array values over the translated window.
template <RingValue R>
R degree(const Window& w, const TorusArray<R>& a, LatticePoint k = kOrigin) {
  R s = RingTraits<R>::zero(a.values().front());
  for (LatticePoint p : w) s = s + a.at(k + p);
  return s;
}

template <RingValue R>
R degree(const Window& w, const PatchArray<R>& a, LatticePoint k = kOrigin) {
  for (LatticePoint p : w)
    if (!a.rect().contains(k + p))
      throw std::out_of_range("degree: window translate escapes the patch");
  R s = RingTraits<R>::zero(a.values().front());
  for (LatticePoint p : w) s = s + a.at(k + p);
  return s;
}

template <RingValue R>
TorusArray<R> delta(const Window& w, const TorusArray<R>& a) {
  TorusArray<R> out(a.n1(), a.n2(), RingTraits<R>::zero(a.values().front()));
  for (long long j = 0; j < a.n2(); ++j)
    for (long long i = 0; i < a.n1(); ++i) out.at(i, j) = degree(w, a, {i, j});
  return out;
}

// (T_p(a))_i = a_{i-p}.
template <RingValue R>
TorusArray<R> translate(const TorusArray<R>& a, LatticePoint p) {
  TorusArray<R> out = a;
  for (long long j = 0; j < a.n2(); ++j)
    for (long long i = 0; i < a.n1(); ++i) out.at(i, j) = a.at(i - p.i1, j - p.i2);
  return out;
}

// Cells k for which w+k stays inside the rectangle of a patch.
inline Rect interior_rect(const Rect& r, const Window& w) {
  if (w.empty()) return r;
  long long lo1 = w.points().front().i1, hi1 = lo1, lo2 = w.points().front().i2, hi2 = lo2;
  for (LatticePoint p : w) {
    lo1 = std::min(lo1, p.i1);
    hi1 = std::max(hi1, p.i1);
    lo2 = std::min(lo2, p.i2);
    hi2 = std::max(hi2, p.i2);
  }
  Rect out{r.imin - lo1, r.imax - hi1, r.jmin - lo2, r.jmax - hi2};
  if (out.imax < out.imin || out.jmax < out.jmin)
    throw std::invalid_argument("interior_rect: region too small for the window");
  return out;
}

// Window sums of a patch, defined on the interior only.
template <RingValue R>
PatchArray<R> delta_on_interior(const Window& w, const PatchArray<R>& a) {
  Rect in = interior_rect(a.rect(), w);
  PatchArray<R> out(in, RingTraits<R>::zero(a.values().front()));
  for (long long j = in.jmin; j <= in.jmax; ++j)
    for (long long i = in.imin; i <= in.imax; ++i) out.at(i, j) = degree(w, a, {i, j});
  return out;
}

template <RingValue R>
bool all_zero(const TorusArray<R>& a) {
  R z = RingTraits<R>::zero(a.values().front());
  for (const R& v : a.values())
    if (!(v == z)) return false;
  return true;
}

template <RingValue R>
bool all_zero(const PatchArray<R>& a) {
  R z = RingTraits<R>::zero(a.values().front());
  for (const R& v : a.values())
    if (!(v == z)) return false;
  return true;
}

// Whether a is a fixed array of the window-sum operator for w. Fixedness is
// a property of the translation class of w (the window is normalized first),
// and both characterizations are evaluated:
//   delta_W(a) = a   and   delta_{W*}(a) = 0.
template <RingValue R>
bool is_fixed(const Window& w, const TorusArray<R>& a) {
  Window nw = normalize(w);
  bool direct = delta(nw, a) == a;
  bool through_kernel = all_zero(delta(puncture(nw), a));
  if (direct != through_kernel)
    throw std::logic_error("is_fixed: the two fixed-point characterizations disagree");
  return direct;
}

}  // namespace tomofix
