#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tomofix/linalg.hpp"
#include "tomofix/modp.hpp"
#include "tomofix/serialize.hpp"

using namespace tomofix;

namespace {

constexpr int kPrinted[9][9] = {
    {0, 1, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 1, 0, 0, 0}, {1, 0, 0, 1, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 1, 1}, {0, 0, 0, 1, 0, 0, 1, 0, 1},
    {1, 1, 0, 0, 0, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 0, 0, 0, 1}, {1, 0, 1, 0, 0, 0, 1, 0, 0}};
constexpr int kPrintedRref[9][9] = {
    {1, 0, 0, 0, 0, 0, 2, 2, 1}, {0, 1, 0, 0, 0, 0, 1, 2, 2}, {0, 0, 1, 0, 0, 0, 2, 1, 2},
    {0, 0, 0, 1, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}};

std::vector<Mod> flatten(const TorusArray<Mod>& a) {
  return a.values();
}

bool in_mod_span(const std::vector<TorusArray<Mod>>& basis, const TorusArray<Mod>& v) {
  std::vector<std::vector<Mod>> rows;
  for (const auto& b : basis) rows.push_back(flatten(b));
  std::size_t base_rank = row_rank(rows);
  rows.push_back(flatten(v));
  return row_rank(std::move(rows)) == base_rank;
}

}  // namespace

TEST_CASE("representation matrix matches the printed 9x9", "[modp]") {
  FpMatrix m = rep_matrix(2, 3);
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) CHECK(static_cast<int>(m.at(r, c)) == kPrinted[r][c]);
  CHECK_THROWS_AS(rep_matrix(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(rep_matrix(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(rep_matrix(1, 3), std::invalid_argument);
}

TEST_CASE("matrix shape facts", "[modp]") {
  FpMatrix m25 = rep_matrix(2, 5);
  CHECK(m25.size() == 25);
  for (std::size_t c = 0; c < 25; ++c) {
    unsigned long ones = 0;
    for (std::size_t r = 0; r < 25; ++r) ones += m25.at(r, c);
    CHECK(ones == 3);
  }
  for (auto [n, p] : {std::pair<long long, unsigned long>{2, 3}, {3, 5}, {4, 5}, {3, 7}}) {
    FpMatrix m = rep_matrix(n, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      unsigned long sum = 0;
      for (std::size_t c = 0; c < m.size(); ++c) sum += m.at(r, c);
      CHECK(sum % p == static_cast<unsigned long>((n * n - 1) % static_cast<long long>(p)));
    }
  }
}

TEST_CASE("row reduction matches the printed form", "[modp]") {
  RrefResult r = rref_mod_p(rep_matrix(2, 3));
  CHECK(r.rank == 6);
  for (int i = 0; i < 9; ++i)
    for (int c = 0; c < 9; ++c) CHECK(static_cast<int>(r.rref.at(i, c)) == kPrintedRref[i][c]);

  FpMatrix id(5, 6);
  for (int i = 0; i < 6; ++i) id.at(i, i) = 1;
  RrefResult ri = rref_mod_p(id);
  CHECK(ri.rank == 6);
  CHECK(ri.rref == id);

  FpMatrix z(3, 4);
  RrefResult rz = rref_mod_p(z);
  CHECK(rz.rank == 0);
  CHECK(rz.rref == z);
}

TEST_CASE("matrix action equals the operator on random arrays", "[modp]") {
  std::mt19937_64 rng(31);
  for (auto [n, p] : {std::pair<long long, unsigned long>{2, 3}, {2, 5}, {3, 5}, {4, 5}, {3, 7}}) {
    FpMatrix m = rep_matrix(n, p);
    const Window w = puncture(square_window(n));
    for (int rep = 0; rep < 10; ++rep) {
      TorusArray<Mod> v(static_cast<long long>(p), static_cast<long long>(p), Mod(0, p));
      for (long long j = 0; j < static_cast<long long>(p); ++j)
        for (long long i = 0; i < static_cast<long long>(p); ++i)
          v.at(i, j) = Mod(static_cast<long long>(rng() % p), p);
      TorusArray<Mod> dv = delta(w, v);
      for (std::size_t r = 0; r < m.size(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < m.size(); ++c)
          acc += static_cast<std::uint64_t>(m.at(r, c)) * v.values()[c].value();
        CHECK(acc % p == dv.values()[r].value());
      }
    }
  }
}

TEST_CASE("kernels across widths and primes", "[modp]") {
  KernelReport k23 = kernel(2, 3);
  CHECK(k23.dimension == 3);
  CHECK(k23.basis.size() == 3);
  const Window w = puncture(square_window(2));
  for (const auto& b : k23.basis) CHECK(all_zero(delta(w, b)));

  // the kernel is translation invariant, and three translates of one
  // generator span it
  const TorusArray<Mod>& g = k23.basis[0];
  TorusArray<Mod> tg = translate(g, {1, 0});
  TorusArray<Mod> t2g = translate(g, {2, 0});
  CHECK(in_mod_span(k23.basis, tg));
  CHECK(in_mod_span(k23.basis, translate(g, {0, 1})));
  CHECK(in_mod_span({g, tg, t2g}, k23.basis[1]));
  CHECK(in_mod_span({g, tg, t2g}, k23.basis[2]));
  // with first-nonzero pivoting the free-column basis is literally a
  // translate family
  CHECK(k23.basis[1] == tg);
  CHECK(k23.basis[2] == t2g);

  for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) CHECK(kernel(2, p).dimension == 0);

  KernelReport k45 = kernel(4, 5);
  CHECK(k45.dimension > 0);
  TorusArray<Mod> ones(5, 5, Mod(1, 5));
  CHECK(all_zero(delta(puncture(square_window(4)), ones)));
  CHECK(in_mod_span(k45.basis, ones));
}

TEST_CASE("group determinant congruence", "[modp]") {
  GroupDetCheck g25 = group_det_check(2, 5);
  CHECK(g25.direct == 3);
  CHECK(g25.formula == 3);
  CHECK(g25.equal);
  GroupDetCheck g45 = group_det_check(4, 5);
  CHECK(g45.direct == 0);
  CHECK(g45.equal);
  GroupDetCheck g37 = group_det_check(3, 7);
  CHECK(g37.direct == 1);
  CHECK(g37.equal);
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
    for (long long n = 2; n < static_cast<long long>(p); ++n) {
      INFO("n " << n << " p " << p);
      CHECK(group_det_check(n, p).equal);
    }
  }
}

TEST_CASE("invertibility sweep", "[modp]") {
  auto s3 = invertibility_sweep(3);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].kernel_dim == 3);

  for (unsigned long p : {5ul, 7ul, 11ul}) {
    auto rows = invertibility_sweep(p);
    REQUIRE(rows.size() == p - 2);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      INFO("p " << p << " n " << rows[i].n);
      CHECK(rows[i].kernel_dim == 0);
    }
    CHECK(rows.back().kernel_dim > 0);
    // rank-nullity on every row
    for (const auto& row : rows) {
      RrefResult r = rref_mod_p(rep_matrix(row.n, p));
      CHECK(r.rank + row.kernel_dim == p * p);
    }
  }
  CHECK_THROWS_AS(invertibility_sweep(4), std::invalid_argument);
  CHECK_THROWS_AS(invertibility_sweep(37), std::invalid_argument);
}

TEST_CASE("rational arrays reduce into the kernel", "[modp]") {
  TorusArray<mpq_class> b1(3, 3, mpq_class(0));
  TorusArray<mpq_class> b2(3, 3, mpq_class(0));
  for (long long j = 0; j < 3; ++j)
    for (long long i = 0; i < 3; ++i) {
      long long r = ((i - j) % 3 + 3) % 3;
      b1.at(i, j) = r == 0 ? 2 : -1;
      b2.at(i, j) = r == 0 ? 0 : (r == 1 ? 1 : -1);
    }
  KernelReport k23 = kernel(2, 3);
  TorusArray<Mod> b1r = reduce_rational_array(b1, 3);
  TorusArray<Mod> b2r = reduce_rational_array(b2, 3);
  CHECK(in_mod_span(k23.basis, b1r));
  CHECK(in_mod_span(k23.basis, b2r));

  const TorusArray<Mod>& g = k23.basis[0];
  TorusArray<Mod> tg = translate(g, {1, 0});
  TorusArray<Mod> t2g = translate(g, {2, 0});
  for (long long j = 0; j < 3; ++j)
    for (long long i = 0; i < 3; ++i) {
      CHECK(b1r.at(i, j) == Mod(2, 3) * (g.at(i, j) + tg.at(i, j) + t2g.at(i, j)));
      CHECK(b2r.at(i, j) == g.at(i, j) - tg.at(i, j));
    }

  TorusArray<mpq_class> third(2, 2, make_rational(1, 3));
  CHECK(reduce_rational_array(third, 5).at(0, 0) == Mod(2, 5));
  CHECK_THROWS_AS(reduce_rational_array(third, 3), std::invalid_argument);

  TorusArray<mpq_class> z(3, 3, mpq_class(0));
  TorusArray<Mod> zr = reduce_rational_array(z, 3);
  CHECK(all_zero(zr));
}

TEST_CASE("kernel report serialization includes the reduced matrix", "[modp][serialize]") {
  KernelReport k = kernel(2, 3);
  json j = to_json(k);
  CHECK(j.at("p") == 3);
  CHECK(j.at("dimension") == 3);
  CHECK(j.at("basis").size() == 3);
  REQUIRE(j.at("rref").size() == 9);
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) CHECK(j.at("rref").at(r).at(c).get<int>() == kPrintedRref[r][c]);
}
