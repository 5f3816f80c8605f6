// Lattice points and finite windows in Z^2.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace tomofix {

struct LatticePoint {
  long long i1 = 0;
  long long i2 = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) {
    return {a.i1 + b.i1, a.i2 + b.i2};
  }
  friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) {
    return {a.i1 - b.i1, a.i2 - b.i2};
  }
  constexpr LatticePoint operator-() const { return {-i1, -i2}; }
};

inline constexpr LatticePoint kOrigin{0, 0};

// Finite subset of Z^2 with set semantics (sorted, deduplicated).
// Windows are allowed to be empty so that puncturing {O} is representable;
// the window sum over an empty window is identically zero.
class Window {
 public:
  Window() = default;
  explicit Window(std::vector<LatticePoint> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }
  Window(std::initializer_list<LatticePoint> pts)
      : Window(std::vector<LatticePoint>(pts)) {}

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  bool contains(LatticePoint p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
  }
  const std::vector<LatticePoint>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::vector<LatticePoint> pts_;
};

// The square window of width n: {0..n-1} x {0..n-1}.
inline Window square_window(long long n) {
  if (n < 2) throw std::invalid_argument("square_window: width must be >= 2");
  std::vector<LatticePoint> pts;
  pts.reserve(static_cast<std::size_t>(n * n));
  for (long long j = 0; j < n; ++j)
    for (long long i = 0; i < n; ++i) pts.push_back({i, j});
  return Window(std::move(pts));
}

// W* = W \ {O}; requires the origin to be a member.
inline Window puncture(const Window& w) {
  if (!w.contains(kOrigin))
    throw std::invalid_argument("puncture: window does not contain the origin");
  std::vector<LatticePoint> pts;
  pts.reserve(w.size() - 1);
  for (LatticePoint p : w)
    if (p != kOrigin) pts.push_back(p);
  return Window(std::move(pts));
}

inline Window translate(const Window& w, LatticePoint k) {
  std::vector<LatticePoint> pts;
  pts.reserve(w.size());
  for (LatticePoint p : w) pts.push_back(p + k);
  return Window(std::move(pts));
}

// Canonical representative of the translation class: the lexicographically
// smallest point goes to the origin. All translates of a window share one
// normal form, and the normal form always contains the origin.
inline Window normalize(const Window& w) {
  if (w.empty()) throw std::invalid_argument("normalize: empty window");
  return translate(w, -w.points().front());
}

}  // namespace tomofix
