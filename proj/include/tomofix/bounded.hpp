// Bounded fixed arrays built from torus zero-locus points: character
// arrays, their periods, and rational bases obtained from Galois orbits.
#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "tomofix/arrays.hpp"
#include "tomofix/linalg.hpp"
#include "tomofix/zero_locus.hpp"

namespace tomofix {

struct construction_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The array (i, j) -> x^i y^j for a fixed torus point (x, y), realized on a
// torus whose dimensions are multiples of the coordinate orders.
class CharacterArray {
 public:
  CharacterArray(TorusPoint p, long long n1, long long n2) : p_(p), n1_(n1), n2_(n2) {
    if (n1 <= 0 || n2 <= 0) throw std::invalid_argument("CharacterArray: dims must be positive");
    if (n1 % static_cast<long long>(p.x.order) != 0 ||
        n2 % static_cast<long long>(p.y.order) != 0)
      throw std::invalid_argument("CharacterArray: dims must be multiples of the coordinate orders");
  }

  static CharacterArray fundamental(TorusPoint p) {
    return CharacterArray(p, static_cast<long long>(p.x.order), static_cast<long long>(p.y.order));
  }

  const TorusPoint& point() const { return p_; }
  long long n1() const { return n1_; }
  long long n2() const { return n2_; }

  CycElem entry(long long i, long long j) const {
    return p_.x.pow(i).value() * p_.y.pow(j).value();
  }

  TorusArray<CycElem> materialize() const {
    std::vector<CycElem> xs = power_row(p_.x, n1_);
    std::vector<CycElem> ys = power_row(p_.y, n2_);
    TorusArray<CycElem> out(n1_, n2_, CycElem());
    for (long long j = 0; j < n2_; ++j)
      for (long long i = 0; i < n1_; ++i) out.at(i, j) = xs[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(j)];
    return out;
  }

 private:
  static std::vector<CycElem> power_row(const RootOfUnity& u, long long count) {
    std::vector<CycElem> out;
    out.reserve(static_cast<std::size_t>(count));
    CycElem acc = CycElem::from_integer(1);
    CycElem base = u.value();
    for (long long k = 0; k < count; ++k) {
      out.push_back(acc);
      acc = acc * base;
    }
    return out;
  }

  TorusPoint p_;
  long long n1_, n2_;
};

inline CharacterArray character_array(TorusPoint p, long long n1, long long n2) {
  return CharacterArray(p, n1, n2);
}

// One character array per zero-locus point of m_{S(n)*}, each on its
// fundamental torus; by eq-counting this is a maximal bounded family.
inline std::vector<CharacterArray> bounded_basis(long long n) {
  std::vector<CharacterArray> out;
  for (const TorusPoint& p : square_zero_locus(n)) out.push_back(CharacterArray::fundamental(p));
  return out;
}

// Periods ((ord x, 0), (0, ord y)), verified both algebraically
// (x^{ord} = 1) and by literal shifting on the fundamental torus.
inline std::pair<LatticePoint, LatticePoint> period_lattice(const CharacterArray& a) {
  long long px = static_cast<long long>(a.point().x.order);
  long long qy = static_cast<long long>(a.point().y.order);
  if (a.point().x.pow(px).order != 1 || a.point().y.pow(qy).order != 1)
    throw verification_error("period_lattice: order does not annihilate the coordinate");
  TorusArray<CycElem> t = CharacterArray(a.point(), px, qy).materialize();
  if (!(translate(t, {px, 0}) == t) || !(translate(t, {0, qy}) == t))
    throw verification_error("period_lattice: shifting does not fix the array");
  return {LatticePoint{px, 0}, LatticePoint{0, qy}};
}

// Exact check that the window sums of a character array vanish everywhere
// on a torus. Entries are roots of unity, so each cell's window sum is
// accumulated in exponent space and reduced once modulo Phi_L.
inline bool character_kernel_check(const Window& punctured, const TorusPoint& p,
                                   long long n1, long long n2) {
  unsigned long l = std::lcm(p.x.order, p.y.order);
  const auto& data = cyc_detail::ConductorCache::get(l);
  const unsigned long phi = data.phi;
  std::vector<std::vector<long>> rows(l, std::vector<long>(phi, 0));
  bool fits = true;
  for (unsigned long k = 0; k < l && fits; ++k)
    for (unsigned long i = 0; i < phi; ++i) {
      if (!data.pow[k][i].fits_slong_p()) {
        fits = false;
        break;
      }
      rows[k][i] = data.pow[k][i].get_si();
    }
  if (!fits) throw std::overflow_error("character_kernel_check: reduction table too large");
  const unsigned long ex = p.x.exp * (l / p.x.order);
  const unsigned long ey = p.y.exp * (l / p.y.order);
  std::vector<long> red(phi);
  for (long long j = 0; j < n2; ++j)
    for (long long i = 0; i < n1; ++i) {
      std::fill(red.begin(), red.end(), 0);
      for (LatticePoint w : punctured) {
        long long ii = (i + w.i1) % n1;
        long long jj = (j + w.i2) % n2;
        if (ii < 0) ii += n1;
        if (jj < 0) jj += n2;
        unsigned long e = (static_cast<unsigned long>(ii) * ex + static_cast<unsigned long>(jj) * ey) % l;
        const std::vector<long>& row = rows[e];
        for (unsigned long c = 0; c < phi; ++c) red[c] += row[c];
      }
      for (unsigned long c = 0; c < phi; ++c)
        if (red[c] != 0) return false;
    }
  return true;
}

struct RationalBasis {
  long long n1 = 0, n2 = 0;  // fundamental torus for the whole family
  std::vector<TorusArray<mpq_class>> arrays;
  std::vector<std::pair<LatticePoint, LatticePoint>> periods;  // per array
  std::vector<std::vector<TorusPoint>> orbits;                 // Galois orbits of the locus
};

namespace bounded_detail {

inline std::vector<std::vector<TorusPoint>> galois_orbits(const std::vector<TorusPoint>& locus) {
  std::set<TorusPoint> remaining(locus.begin(), locus.end());
  std::vector<std::vector<TorusPoint>> orbits;
  while (!remaining.empty()) {
    TorusPoint rep = *remaining.begin();
    unsigned long l = std::lcm(rep.x.order, rep.y.order);
    std::set<TorusPoint> orbit;
    for (unsigned long s = 1; s <= l; ++s) {
      if (std::gcd(s, l) != 1) continue;
      orbit.insert(TorusPoint{rep.x.pow(static_cast<long long>(s)),
                              rep.y.pow(static_cast<long long>(s))});
    }
    orbits.emplace_back(orbit.begin(), orbit.end());
    for (const TorusPoint& q : orbit) remaining.erase(q);
  }
  return orbits;
}

}  // namespace bounded_detail

// Rational arrays spanning the bounded solution space over Q: for each
// Galois orbit the orbit-sum array (entries are full sums over the orbit,
// hence rational integers of Z[zeta]-traces) together with its first m-1
// horizontal translates, m = orbit size. Every emitted array is checked to
// be rational and annihilated by the punctured window; the family must have
// rational rank equal to the locus size, otherwise construction_failure is
// raised for investigation rather than padded over. Translates of an orbit
// sum separate the orbit exactly when the x-coordinates within the orbit
// are pairwise distinct (a Vandermonde condition); width 5 already violates
// it, via the orbit {(-1, i), (-1, -i)}, and is reported.
inline RationalBasis rational_basis(long long n) {
  const std::vector<TorusPoint> locus = square_zero_locus(n);
  const Window punctured = puncture(square_window(n));
  RationalBasis out;
  long long l1 = 1, l2 = 1;
  for (const TorusPoint& p : locus) {
    l1 = std::lcm(l1, static_cast<long long>(p.x.order));
    l2 = std::lcm(l2, static_cast<long long>(p.y.order));
  }
  out.n1 = l1;
  out.n2 = l2;
  out.orbits = bounded_detail::galois_orbits(locus);
  for (const auto& orbit : out.orbits) {
    // orbit sum, evaluated once per cell of the fundamental torus
    TorusArray<mpq_class> sum(l1, l2, mpq_class(0));
    for (long long j = 0; j < l2; ++j)
      for (long long i = 0; i < l1; ++i) {
        CycElem acc;
        for (const TorusPoint& p : orbit) acc = acc + p.x.pow(i).value() * p.y.pow(j).value();
        if (!acc.is_rational())
          throw verification_error("rational_basis: orbit sum is not rational");
        sum.at(i, j) = acc.rational_value();
      }
    long long px = 1, qy = 1;
    for (const TorusPoint& p : orbit) {
      px = std::lcm(px, static_cast<long long>(p.x.order));
      qy = std::lcm(qy, static_cast<long long>(p.y.order));
    }
    for (std::size_t t = 0; t < orbit.size(); ++t) {
      TorusArray<mpq_class> arr = translate(sum, {static_cast<long long>(t), 0});
      if (!all_zero(delta(punctured, arr)))
        throw verification_error("rational_basis: array is not annihilated by the window");
      out.arrays.push_back(std::move(arr));
      out.periods.emplace_back(LatticePoint{px, 0}, LatticePoint{0, qy});
    }
  }
  std::vector<std::vector<mpq_class>> rows;
  rows.reserve(out.arrays.size());
  for (const auto& a : out.arrays) rows.push_back(a.values());
  if (row_rank(std::move(rows)) != locus.size())
    throw construction_failure("rational_basis: translate family is rank deficient");
  return out;
}

}  // namespace tomofix
