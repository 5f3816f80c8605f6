#include <catch2/catch_amalgamated.hpp>

#include "tomofix/selfcheck.hpp"
#include "tomofix/serialize.hpp"

using namespace tomofix;

TEST_CASE("roots of unity", "[cyclotomic]") {
  CHECK((root_of_unity(3, 1) + root_of_unity(3, 2) + CycElem::from_integer(1)).is_zero());
  CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) == CycElem::from_integer(-1));
  CHECK(root_of_unity(8, 1).pow(4) == CycElem::from_integer(-1));
  CHECK(root_of_unity(5, 0) == CycElem::from_integer(1));
  CHECK(root_of_unity(5, 7) == root_of_unity(5, 2));
  CHECK(root_of_unity(5, -1) == root_of_unity(5, 4));
  CHECK_THROWS_AS(root_of_unity(0, 1), std::invalid_argument);
}

TEST_CASE("field arithmetic is exact and canonical", "[cyclotomic]") {
  CHECK(root_of_unity(3, 1).inv() == root_of_unity(3, 2));
  CHECK(root_of_unity(8, 1) * root_of_unity(8, 3) == CycElem::from_integer(-1));
  CHECK_THROWS_AS(CycElem().inv(), std::domain_error);

  CycElem x = CycElem::from_integer(1) + root_of_unity(5, 1);
  CHECK(x * x.inv() == CycElem::from_integer(1));
  CHECK(x.pow(-2) == (x * x).inv());
  CHECK(x.pow(0) == CycElem::from_integer(1));

  // mixed conductors embed into the lcm
  CHECK(root_of_unity(2, 1) * root_of_unity(3, 1) == root_of_unity(6, 5));
  CHECK(root_of_unity(3, 1).embed(24) == root_of_unity(24, 8));
  CHECK_THROWS_AS(root_of_unity(3, 1).embed(7), std::invalid_argument);
}

TEST_CASE("conductor cap guards the lcm embedding", "[cyclotomic]") {
  unsigned long old_cap = conductor_cap();
  set_conductor_cap(30);
  CHECK_THROWS_AS(root_of_unity(31, 1), conductor_cap_error);
  CHECK_THROWS_AS(root_of_unity(7, 1) * root_of_unity(11, 1), conductor_cap_error);
  CHECK_NOTHROW(root_of_unity(5, 1) * root_of_unity(6, 1));
  set_conductor_cap(old_cap);
}

TEST_CASE("conjugation inverts roots of unity", "[cyclotomic]") {
  CHECK(root_of_unity(3, 1).conjugate() == root_of_unity(3, 2));
  CHECK(CycElem::from_integer(1).conjugate() == CycElem::from_integer(1));
  CHECK(root_of_unity(8, 3).conjugate() == root_of_unity(8, 5));
  for (unsigned long n : {3ul, 5ul, 8ul, 12ul})
    for (long long k = 0; k < static_cast<long long>(n); ++k) {
      CycElem u = root_of_unity(n, k);
      CHECK(u.conjugate() * u == CycElem::from_integer(1));
    }
  // conjugation is a ring map
  CycElem a = root_of_unity(12, 5) + CycElem::from_integer(2);
  CycElem b = root_of_unity(12, 7) - CycElem::from_integer(1);
  CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
}

TEST_CASE("orders of roots of unity", "[cyclotomic]") {
  CHECK(order_of(root_of_unity(3, 1)) == 3);
  CHECK(order_of(root_of_unity(8, 4)) == 2);
  CHECK(order_of(root_of_unity(8, 6)) == 4);
  CHECK(order_of(CycElem::from_integer(1)) == 1);
  CHECK(order_of(-root_of_unity(3, 1)) == 6);
  CHECK_THROWS_AS(order_of(CycElem::from_integer(1) + root_of_unity(5, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(order_of(CycElem::from_integer(2)), std::invalid_argument);
}

TEST_CASE("floating approximation for display", "[cyclotomic]") {
  auto near = [](std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) < 1e-12;
  };
  CHECK(near(root_of_unity(4, 1).approx(), {0.0, 1.0}));
  CHECK(near((root_of_unity(3, 1) + root_of_unity(3, 2) + CycElem::from_integer(1)).approx(),
             {0.0, 0.0}));
  const double s = std::sqrt(2.0) / 2.0;
  CHECK(near(root_of_unity(8, 1).approx(), {s, s}));
  for (unsigned long n : {7ul, 12ul, 30ul})
    for (long long k = 0; k < static_cast<long long>(n); ++k) {
      double angle = 2.0 * 3.14159265358979323846 * static_cast<double>(k) / static_cast<double>(n);
      CHECK(near(root_of_unity(n, k).approx(), std::polar(1.0, angle)));
    }
}

TEST_CASE("full root sums vanish exactly", "[cyclotomic]") {
  for (unsigned long n = 2; n <= 60; ++n) {
    CycElem acc;
    for (unsigned long k = 0; k < n; ++k) acc = acc + root_of_unity(n, static_cast<long long>(k));
    INFO("conductor " << n);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("geometric sums over nontrivial roots vanish", "[cyclotomic]") {
  for (long long n = 3; n <= 20; ++n) {
    for (long long a = 1; a < n - 1; ++a) {
      CycElem c = root_of_unity(static_cast<unsigned long>(n - 1), a);
      CycElem acc;
      CycElem power = CycElem::from_integer(1);
      for (long long k = 0; k <= n - 2; ++k) {
        acc = acc + power;
        power = power * c;
      }
      INFO("n " << n << " exponent " << a);
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("canonical zero detection over random expression trees", "[cyclotomic][properties]") {
  PropertyResult r = cyclotomic_zero_suite(4242, 200);
  CHECK(r.failures == 0);
}

TEST_CASE("rational detection and values", "[cyclotomic]") {
  CHECK(root_of_unity(6, 3).is_rational());
  CHECK(root_of_unity(6, 3).rational_value() == -1);
  CHECK_FALSE(root_of_unity(8, 1).is_rational());
  CHECK_THROWS_AS(root_of_unity(8, 1).rational_value(), std::domain_error);
  CycElem sum = root_of_unity(5, 1) + root_of_unity(5, 2) + root_of_unity(5, 3) + root_of_unity(5, 4);
  CHECK(sum.is_rational());
  CHECK(sum.rational_value() == -1);
}

TEST_CASE("cyclotomic serialization shape", "[cyclotomic][serialize]") {
  CycElem x = root_of_unity(8, 3) + CycElem::from_rational(make_rational(1, 2));
  json j = to_json(x);
  CHECK(j.at("conductor") == 8);
  CHECK(j.at("coeffs").size() == 4);
  CHECK(j.at("coeffs").at(0).get<std::string>() == "1/2");
  CHECK(j.at("coeffs").at(3).get<std::string>() == "1");
}
