#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "tomofix/serialize.hpp"
#include "tomofix/zero_locus.hpp"

using namespace tomofix;

namespace {

// locus sizes confirmed by the exhaustive oracle
constexpr std::size_t kLocusSizes[] = {2, 7, 16, 29, 46, 67, 92};  // n = 2..8

}  // namespace

TEST_CASE("characteristic polynomials of windows", "[spectra]") {
  LaurentPoly2 f = char_poly(square_window(2));
  LaurentPoly2 expect;
  for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) expect.add_term(a, b, 1);
  CHECK(f == expect);

  LaurentPoly2 fs = char_poly(puncture(square_window(2)));
  CHECK(fs.terms().size() == 3);
  CHECK(fs.terms().count({0, 0}) == 0);
  CHECK(char_poly(Window{{0, 0}}) == LaurentPoly2::constant(1));
}

TEST_CASE("star substitutes inverse coordinates", "[spectra]") {
  LaurentPoly2 f = char_poly(puncture(square_window(2)));
  LaurentPoly2 expect;
  expect.add_term(-1, 0, 1);
  expect.add_term(0, -1, 1);
  expect.add_term(-1, -1, 1);
  CHECK(star(f) == expect);
  CHECK(star(LaurentPoly2::constant(1)) == LaurentPoly2::constant(1));

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    LaurentPoly2 g;
    for (int t = 0; t < 6; ++t)
      g.add_term(static_cast<long long>(rng() % 11) - 5, static_cast<long long>(rng() % 11) - 5,
                 static_cast<long long>(rng() % 9) - 4);
    CHECK(star(star(g)) == g);
  }
}

TEST_CASE("exact evaluation at torus points", "[spectra]") {
  LaurentPoly2 f2 = char_poly(puncture(square_window(2)));
  CHECK(eval(f2, root_of_unity(3, 1), root_of_unity(3, 2)).is_zero());
  CHECK(eval(f2, root_of_unity(3, 2), root_of_unity(3, 1)).is_zero());
  LaurentPoly2 f3 = char_poly(puncture(square_window(3)));
  CHECK(eval(f3, CycElem::from_integer(-1), CycElem::from_integer(-1)).is_zero());
  CHECK(eval(f2, CycElem::from_integer(1), CycElem::from_integer(1)) == CycElem::from_integer(3));
  // negative exponents evaluate through inverses
  CHECK(eval(star(f2), root_of_unity(3, 1), root_of_unity(3, 2)).is_zero());
}

TEST_CASE("closed-form zero locus matches the worked cases", "[spectra]") {
  auto v2 = square_zero_locus(2);
  REQUIRE(v2.size() == 2);
  CHECK(v2[0] == TorusPoint{{3, 1}, {3, 2}});
  CHECK(v2[1] == TorusPoint{{3, 2}, {3, 1}});

  auto v3 = square_zero_locus(3);
  const std::vector<TorusPoint> expect3 = {{{2, 1}, {2, 1}}, {{4, 1}, {4, 3}}, {{4, 3}, {4, 1}},
                                           {{8, 1}, {8, 3}}, {{8, 3}, {8, 1}}, {{8, 5}, {8, 7}},
                                           {{8, 7}, {8, 5}}};
  CHECK(v3 == expect3);
  CHECK_THROWS_AS(square_zero_locus(1), std::invalid_argument);
}

TEST_CASE("oracle equivalence across widths", "[spectra][oracle]") {
  for (long long n = 2; n <= 8; ++n) {
    auto closed = square_zero_locus(n);
    auto oracle = zero_locus_oracle(n);
    INFO("width " << n);
    CHECK(closed == oracle);
    CHECK(closed.size() == kLocusSizes[n - 2]);
    CHECK(closed.size() ==
          static_cast<std::size_t>((n - 2) * (n - 2) + n * n - n));
  }
}

TEST_CASE("oracle is deterministic across worker counts", "[spectra]") {
  CHECK(zero_locus_oracle(5, 1) == zero_locus_oracle(5, 8));
}

TEST_CASE("locus symmetries", "[spectra]") {
  for (long long n = 2; n <= 6; ++n) {
    auto v = square_zero_locus(n);
    std::set<TorusPoint> s(v.begin(), v.end());
    CHECK(s.size() == v.size());  // deduplicated
    for (const TorusPoint& p : v) {
      CHECK(s.count(TorusPoint{p.x.conj(), p.y.conj()}) == 1);
      CHECK(s.count(TorusPoint{p.y, p.x}) == 1);
      // every point obeys the root-of-unity bound (xy)^{n-1} = 1
      RootOfUnity xy = p.x * p.y;
      CHECK(xy.pow(n - 1).order == 1);
    }
  }
}

TEST_CASE("every locus point really vanishes", "[spectra]") {
  for (long long n = 2; n <= 5; ++n) {
    LaurentPoly2 f = char_poly(puncture(square_window(n)));
    for (const TorusPoint& p : square_zero_locus(n)) CHECK(eval(f, p).is_zero());
  }
}

TEST_CASE("torus point JSON encoding", "[spectra][serialize]") {
  TorusPoint p{{8, 3}, {8, 1}};
  json j = to_json(p);
  CHECK(j.at("x").at("N") == 8);
  CHECK(j.at("x").at("k") == 3);
  CHECK(point_from_json(j) == p);
}

// Non-gating numeric scan: a uniform grid over the torus finds no deep
// minimum of |m| away from the exact locus. Hidden by default.
TEST_CASE("numeric grid scan stays consistent with the exact locus", "[.scan]") {
  for (long long n : {2ll, 3ll}) {
    auto locus = square_zero_locus(n);
    std::vector<std::complex<double>> lx, ly;
    for (const TorusPoint& p : locus) {
      lx.push_back(p.x.value().approx());
      ly.push_back(p.y.value().approx());
    }
    const int grid = 2000;
    const double tau = 2.0 * 3.14159265358979323846;
    for (int a = 0; a < grid; ++a)
      for (int b = 0; b < grid; ++b) {
        std::complex<double> x = std::polar(1.0, tau * a / grid);
        std::complex<double> y = std::polar(1.0, tau * b / grid);
        std::complex<double> gx = 0, gy = 0, xp = 1, yp = 1;
        for (long long k = 0; k < n; ++k) {
          gx += xp;
          gy += yp;
          xp *= x;
          yp *= y;
        }
        double m = std::abs(gx * gy - 1.0);
        if (m < 1e-6) {
          double best = 1e9;
          for (std::size_t k = 0; k < lx.size(); ++k)
            best = std::min(best, std::abs(x - lx[k]) + std::abs(y - ly[k]));
          CHECK(best < 1e-3);
        }
      }
  }
}
