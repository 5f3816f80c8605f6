// Seeded randomized self-checks: operator linearity, translation
// equivariance, the fixed-point/kernel equivalence, fixedness invariance
// under window translation, ring axioms, and cyclotomic canonical-zero
// detection. Shared by the test suite and the verify subcommand.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tomofix/arrays.hpp"
#include "tomofix/cyclotomic.hpp"

namespace tomofix {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

namespace selfcheck_detail {

using Rng = std::mt19937_64;

inline long long draw(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Window random_window(Rng& rng, bool with_origin) {
  std::vector<LatticePoint> pts;
  if (with_origin) pts.push_back(kOrigin);
  long long extra = draw(rng, 1, 5);
  for (long long t = 0; t < extra; ++t) pts.push_back({draw(rng, -2, 2), draw(rng, -2, 2)});
  Window w{std::move(pts)};
  return w;
}

template <class R, class Gen>
TorusArray<R> random_array(Rng& rng, Gen gen, long long n1, long long n2) {
  TorusArray<R> a(n1, n2, gen(rng));
  for (long long j = 0; j < n2; ++j)
    for (long long i = 0; i < n1; ++i) a.at(i, j) = gen(rng);
  return a;
}

// One batch of the three operator properties plus the translation
// invariance of fixedness, for a single ring instance.
template <class R, class Gen>
PropertyResult operator_properties(const std::string& ring_name, Rng& rng, Gen gen,
                                   std::size_t cases) {
  PropertyResult res{"core/" + ring_name, cases, 0};
  for (std::size_t c = 0; c < cases; ++c) {
    long long n1 = draw(rng, 2, 5), n2 = draw(rng, 2, 5);
    TorusArray<R> a = random_array<R>(rng, gen, n1, n2);
    TorusArray<R> b = random_array<R>(rng, gen, n1, n2);
    R alpha = gen(rng), beta = gen(rng);
    Window w = random_window(rng, true);

    // linearity
    TorusArray<R> combo(n1, n2, RingTraits<R>::zero(alpha));
    for (long long j = 0; j < n2; ++j)
      for (long long i = 0; i < n1; ++i) combo.at(i, j) = alpha * a.at(i, j) + beta * b.at(i, j);
    TorusArray<R> lhs = delta(w, combo);
    TorusArray<R> da = delta(w, a), db = delta(w, b);
    bool ok = true;
    for (long long j = 0; j < n2 && ok; ++j)
      for (long long i = 0; i < n1; ++i)
        if (!(lhs.at(i, j) == alpha * da.at(i, j) + beta * db.at(i, j))) {
          ok = false;
          break;
        }

    // translation equivariance
    LatticePoint shift{draw(rng, -4, 4), draw(rng, -4, 4)};
    if (!(delta(w, translate(a, shift)) == translate(delta(w, a), shift))) ok = false;

    // fixed-point set = kernel of the punctured operator
    bool direct = (delta(w, a) == a);
    bool through_kernel = all_zero(delta(puncture(w), a));
    if (direct != through_kernel) ok = false;

    // fixedness depends only on the translation class of the window
    if (is_fixed(w, a) != is_fixed(translate(w, shift), a)) ok = false;

    if (!ok) ++res.failures;
  }
  return res;
}

// Ring axioms on random triples: associativity, commutativity,
// distributivity, additive inverse, identities.
template <class R, class Gen>
PropertyResult ring_axioms(const std::string& ring_name, Rng& rng, Gen gen, std::size_t cases) {
  PropertyResult res{"ring-axioms/" + ring_name, cases, 0};
  for (std::size_t c = 0; c < cases; ++c) {
    R a = gen(rng), b = gen(rng), d = gen(rng);
    R zero = RingTraits<R>::zero(a), one = RingTraits<R>::one(a);
    bool ok = ((a + b) + d == a + (b + d)) && ((a * b) * d == a * (b * d)) &&
              (a + b == b + a) && (a * b == b * a) && (a * (b + d) == a * b + a * d) &&
              (a + (-a) == zero) && (a * one == a) && (a + zero == a);
    if (!ok) ++res.failures;
  }
  return res;
}

// Random cyclotomic expression trees built from small rationals and roots
// of unity under +, -, *. Leaf conductors divide 60 so that every
// intermediate lcm stays far below the conductor cap.
inline CycElem random_cyc_tree(Rng& rng, int depth) {
  static constexpr unsigned long kConductors[] = {1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60};
  if (depth == 0 || draw(rng, 0, 3) == 0) {
    if (draw(rng, 0, 1) == 0) return CycElem::from_rational(make_rational(draw(rng, -3, 3), draw(rng, 1, 4)));
    unsigned long n = kConductors[draw(rng, 0, 11)];
    return root_of_unity(n, draw(rng, 0, 119));
  }
  CycElem lhs = random_cyc_tree(rng, depth - 1);
  CycElem rhs = random_cyc_tree(rng, depth - 1);
  switch (draw(rng, 0, 2)) {
    case 0: return lhs + rhs;
    case 1: return lhs - rhs;
    default: return lhs * rhs;
  }
}

}  // namespace selfcheck_detail

// Core operator properties for every required ring instance.
inline std::vector<PropertyResult> core_property_suite(std::uint64_t seed, std::size_t cases) {
  using namespace selfcheck_detail;
  Rng rng(seed);
  std::vector<PropertyResult> out;

  auto gen_z = [](Rng& r) { return mpz_class(static_cast<long>(draw(r, -9, 9))); };
  auto gen_q = [](Rng& r) { return make_rational(draw(r, -9, 9), draw(r, 1, 9)); };
  auto gen_m12 = [](Rng& r) { return Mod(draw(r, 0, 11), 12); };
  auto gen_f7 = [](Rng& r) { return Mod(draw(r, 0, 6), 7); };
  auto gen_cyc = [](Rng& r) {
    return CycElem::from_rational(make_rational(draw(r, -3, 3), draw(r, 1, 3))) +
           CycElem::from_rational(make_rational(draw(r, -2, 2), 1)) * root_of_unity(12, draw(r, 0, 11));
  };

  out.push_back(operator_properties<mpz_class>("Z", rng, gen_z, cases));
  out.push_back(operator_properties<mpq_class>("Q", rng, gen_q, cases));
  out.push_back(operator_properties<Mod>("Zmod12", rng, gen_m12, cases));
  out.push_back(operator_properties<Mod>("F7", rng, gen_f7, cases));
  out.push_back(operator_properties<CycElem>("Qcyc", rng, gen_cyc, cases));

  out.push_back(ring_axioms<mpz_class>("Z", rng, gen_z, cases));
  out.push_back(ring_axioms<mpq_class>("Q", rng, gen_q, cases));
  out.push_back(ring_axioms<Mod>("Zmod12", rng, gen_m12, cases));
  out.push_back(ring_axioms<Mod>("F7", rng, gen_f7, cases));
  out.push_back(ring_axioms<CycElem>("Qcyc", rng, gen_cyc, cases));
  return out;
}

// Canonical-zero detection: x - x reduces to the all-zero coefficient
// vector for random expression trees.
inline PropertyResult cyclotomic_zero_suite(std::uint64_t seed, std::size_t cases) {
  using namespace selfcheck_detail;
  Rng rng(seed);
  PropertyResult res{"cyclotomic/canonical-zero", cases, 0};
  for (std::size_t c = 0; c < cases; ++c) {
    CycElem x = random_cyc_tree(rng, 3);
    if (!(x - x).is_zero()) ++res.failures;
    CycElem y = random_cyc_tree(rng, 2);
    CycElem z = random_cyc_tree(rng, 2);
    if (!(x * (y + z) == x * y + x * z)) ++res.failures;
  }
  return res;
}

}  // namespace tomofix
