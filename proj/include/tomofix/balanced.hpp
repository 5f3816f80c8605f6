// Balanced zero-sum arrays on the n-torus: the exhaustive n=3 search, the
// permutation-group action on its solutions, the explicit balanced
// zero-sum construction for every n, line-sum identities behind it, kernel
// nonexistence certificates, and a budgeted probe for composite n.
#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tomofix/modp.hpp"

namespace tomofix {

// Z_{n^2}-valued array on the n-torus, row vector order k = i + n*j.
class ZnArray {
 public:
  ZnArray(long long n, TorusArray<Mod> values) : n_(n), a_(std::move(values)) {
    if (n < 3) throw std::invalid_argument("ZnArray: n must be >= 3");
    if (a_.n1() != n || a_.n2() != n)
      throw std::invalid_argument("ZnArray: dims must equal n");
    if (a_.values().front().modulus() != static_cast<std::uint64_t>(n) * n)
      throw std::invalid_argument("ZnArray: modulus must be n^2");
  }

  static ZnArray from_row_vector(long long n, const std::vector<long long>& row) {
    if (row.size() != static_cast<std::size_t>(n) * n)
      throw std::invalid_argument("ZnArray: row vector must have n^2 entries");
    std::vector<Mod> vals;
    vals.reserve(row.size());
    for (long long v : row) vals.push_back(Mod(v, static_cast<std::uint64_t>(n) * n));
    return ZnArray(n, TorusArray<Mod>::from_values(n, n, std::move(vals)));
  }

  long long n() const { return n_; }
  const TorusArray<Mod>& torus() const { return a_; }
  Mod at(long long i, long long j) const { return a_.at(i, j); }

  std::vector<long long> row_vector() const {
    std::vector<long long> out;
    out.reserve(a_.values().size());
    for (const Mod& v : a_.values()) out.push_back(static_cast<long long>(v.value()));
    return out;
  }

  friend bool operator==(const ZnArray& a, const ZnArray& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator<(const ZnArray& a, const ZnArray& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.row_vector() < b.row_vector();
  }

 private:
  long long n_;
  TorusArray<Mod> a_;
};

// Balanced: the n^2 values are exactly 0..n^2-1 with no repetition.
inline bool is_balanced(const ZnArray& a) {
  std::vector<bool> seen(static_cast<std::size_t>(a.n()) * a.n(), false);
  for (const Mod& v : a.torus().values()) {
    if (seen[v.value()]) return false;
    seen[v.value()] = true;
  }
  return true;
}

struct TranslateSums {
  Window window;
  std::vector<std::pair<LatticePoint, std::uint64_t>> sums;  // translate order k = i + n*j
  bool all_zero = true;
};

inline TranslateSums window_translate_sums(const ZnArray& a, const Window& w) {
  TranslateSums out;
  out.window = w;
  for (long long j = 0; j < a.n(); ++j)
    for (long long i = 0; i < a.n(); ++i) {
      Mod s = degree(w, a.torus(), {i, j});
      out.sums.emplace_back(LatticePoint{i, j}, s.value());
      if (s.value() != 0) out.all_zero = false;
    }
  return out;
}

inline bool is_zero_sum(const ZnArray& a, const Window& w) {
  return window_translate_sums(a, w).all_zero;
}

// The nine translate supports of the punctured width-2 square on the
// 3-torus, as sorted triples of flattened cell indices, in translate order.
inline std::vector<std::array<int, 3>> support_triples() {
  const Window w = puncture(square_window(2));
  std::vector<std::array<int, 3>> out;
  for (long long j = 0; j < 3; ++j)
    for (long long i = 0; i < 3; ++i) {
      std::array<int, 3> t{};
      std::size_t idx = 0;
      for (LatticePoint q : w) {
        long long ci = (i + q.i1) % 3, cj = (j + q.i2) % 3;
        t[idx++] = static_cast<int>(ci + 3 * cj);
      }
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
  return out;
}

// Exhaustive backtracking over x1..x8 (distinct values 1..8, x0 = 0),
// pruned by every translate sum that is fully assigned. Children are
// expanded in increasing value order, so the output is lexicographically
// sorted by construction; it is sorted once more for safety.
inline std::vector<ZnArray> search_balanced_3torus() {
  const auto triples = support_triples();
  // triples checkable once their largest cell is assigned
  std::array<std::vector<std::array<int, 3>>, 9> complete_at{};
  for (const auto& t : triples) complete_at[static_cast<std::size_t>(t[2])].push_back(t);

  std::array<long long, 9> x{};
  std::array<bool, 9> used{};
  x[0] = 0;
  std::vector<ZnArray> out;
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == 9) {
      std::vector<long long> row(x.begin(), x.end());
      ZnArray a = ZnArray::from_row_vector(3, row);
      if (!is_balanced(a) || !is_zero_sum(a, puncture(square_window(2))))
        throw std::logic_error("search_balanced_3torus: leaf fails the predicates");
      out.push_back(std::move(a));
      return;
    }
    for (long long v = 1; v <= 8; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      x[static_cast<std::size_t>(cell)] = v;
      used[static_cast<std::size_t>(v)] = true;
      bool ok = true;
      for (const auto& t : complete_at[static_cast<std::size_t>(cell)])
        if ((x[static_cast<std::size_t>(t[0])] + x[static_cast<std::size_t>(t[1])] +
             x[static_cast<std::size_t>(t[2])]) %
                9 !=
            0) {
          ok = false;
          break;
        }
      if (ok) self(self, cell + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

// Permutation of the eight non-origin cells of the 3-torus (cell 0 fixed),
// acting on arrays by (x_0, x_1, ..., x_8) -> (x_0, x_{pi^{-1}(1)}, ...).
class CellPermutation {
 public:
  CellPermutation() {
    for (int i = 0; i < 9; ++i) img_[static_cast<std::size_t>(i)] = i;
  }

  // images of 1..8 in order
  static CellPermutation from_images(const std::array<int, 8>& images) {
    CellPermutation p;
    std::array<bool, 9> seen{};
    for (int i = 1; i <= 8; ++i) {
      int v = images[static_cast<std::size_t>(i - 1)];
      if (v < 1 || v > 8 || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("CellPermutation: not a permutation of 1..8");
      seen[static_cast<std::size_t>(v)] = true;
      p.img_[static_cast<std::size_t>(i)] = v;
    }
    return p;
  }

  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

  CellPermutation inverse() const {
    CellPermutation p;
    for (int i = 0; i < 9; ++i) p.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return p;
  }

  // (a*b)(i) = a(b(i))
  friend CellPermutation operator*(const CellPermutation& a, const CellPermutation& b) {
    CellPermutation p;
    for (int i = 0; i < 9; ++i)
      p.img_[static_cast<std::size_t>(i)] = a.img_[static_cast<std::size_t>(b.img_[static_cast<std::size_t>(i)])];
    return p;
  }

  std::size_t order() const {
    CellPermutation acc = *this;
    std::size_t k = 1;
    while (!(acc == CellPermutation())) {
      acc = acc * *this;
      ++k;
    }
    return k;
  }

  friend bool operator==(const CellPermutation&, const CellPermutation&) = default;
  friend bool operator<(const CellPermutation& a, const CellPermutation& b) {
    return a.img_ < b.img_;
  }

 private:
  std::array<int, 9> img_;
};

inline ZnArray permutation_action(const CellPermutation& pi, const ZnArray& a) {
  if (a.n() != 3)
    throw std::invalid_argument("permutation_action: only the 3-torus is supported");
  const CellPermutation inv = pi.inverse();
  std::vector<long long> x = a.row_vector(), y(9);
  y[0] = x[0];
  for (int k = 1; k <= 8; ++k) y[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(inv(k))];
  return ZnArray::from_row_vector(3, y);
}

// The two generators printed as two-row tables.
inline CellPermutation perm_p() {
  return CellPermutation::from_images({3, 1, 6, 8, 2, 7, 5, 4});
}
inline CellPermutation perm_q() {
  return CellPermutation::from_images({3, 6, 1, 4, 7, 2, 5, 8});
}

inline std::vector<CellPermutation> generate_group(std::vector<CellPermutation> gens) {
  std::set<CellPermutation> seen(gens.begin(), gens.end());
  seen.insert(CellPermutation());
  std::vector<CellPermutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<CellPermutation> next;
    for (const auto& g : frontier)
      for (const auto& h : gens) {
        CellPermutation gh = g * h;
        if (seen.insert(gh).second) next.push_back(gh);
      }
    frontier = std::move(next);
  }
  return std::vector<CellPermutation>(seen.begin(), seen.end());
}

inline bool preserves_support_triples(const CellPermutation& pi) {
  const auto triples = support_triples();
  std::set<std::array<int, 3>> tset(triples.begin(), triples.end());
  for (const auto& t : triples) {
    std::array<int, 3> im{pi(t[0]), pi(t[1]), pi(t[2])};
    std::sort(im.begin(), im.end());
    if (!tset.count(im)) return false;
  }
  return true;
}

struct DihedralReport {
  std::size_t order_p = 0, order_q = 0;
  bool conjugation_inverts = false;  // q p q = p^{-1}
  std::size_t group_size = 0;
  bool preserves_triples = false;
  bool transitive = false;
  bool faithful = false;
  bool words_match = false;
  std::vector<ZnArray> orbit;  // orbit of the lexicographically first solution

  bool all_good() const {
    return order_p == 6 && order_q == 2 && conjugation_inverts && group_size == 12 &&
           preserves_triples && transitive && faithful && words_match;
  }
};

// Checks every printed property of the group generated by the two cell
// permutations: element orders, the conjugation relation, the dihedral
// size, invariance of the translate supports, and the transitive faithful
// action reproducing all twelve solutions by the printed words.
inline DihedralReport dihedral_group_check() {
  DihedralReport rep;
  const CellPermutation p = perm_p(), q = perm_q();
  rep.order_p = p.order();
  rep.order_q = q.order();
  rep.conjugation_inverts = (q * p * q == p.inverse());
  const auto group = generate_group({p, q});
  rep.group_size = group.size();
  rep.preserves_triples = true;
  for (const auto& g : group)
    if (!preserves_support_triples(g)) rep.preserves_triples = false;

  const std::vector<ZnArray> solutions = search_balanced_3torus();
  const ZnArray& base = solutions.front();
  std::set<std::vector<long long>> orbit_rows;
  for (const auto& g : group) {
    ZnArray img = permutation_action(g, base);
    orbit_rows.insert(img.row_vector());
    rep.orbit.push_back(std::move(img));
  }
  std::set<std::vector<long long>> solution_rows;
  for (const auto& a : solutions) solution_rows.insert(a.row_vector());
  rep.transitive = (orbit_rows == solution_rows);
  rep.faithful = (orbit_rows.size() == group.size());

  // printed words: powers of p and q*p^e reproducing the twelve arrays
  auto pw = [&](int e) {
    CellPermutation acc;
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
  };
  const std::vector<std::pair<std::size_t, CellPermutation>> words = {
      {0, CellPermutation()}, {1, q * pw(1)}, {2, q * pw(2)}, {3, pw(1)},
      {4, q * pw(3)},         {5, pw(2)},     {6, pw(5)},     {7, q},
      {8, pw(4)},             {9, q * pw(5)}, {10, q * pw(4)}, {11, pw(3)}};
  rep.words_match = true;
  for (const auto& [idx, w] : words)
    if (!(permutation_action(w, base) == solutions[idx])) rep.words_match = false;
  return rep;
}

// All permutations of the eight letters fixing cell 0 that map the support
// triples onto themselves, by brute force over 8! candidates.
inline std::vector<CellPermutation> hypergraph_automorphisms() {
  std::array<int, 8> images{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<CellPermutation> out;
  do {
    CellPermutation pi = CellPermutation::from_images(images);
    if (preserves_support_triples(pi)) out.push_back(pi);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// The balanced zero-sum construction: g_n(i,j) = i - j (+ n when i < j),
// f_n(i,j) = g_n(i,j) + n*j, valued in Z_{n^2}. Balanced and zero-sum for
// the punctured width-(n-1) square; both properties are verified.
inline ZnArray construct_fn(long long n) {
  if (n < 3) throw std::invalid_argument("construct_fn: n must be >= 3");
  std::uint64_t mod = static_cast<std::uint64_t>(n) * n;
  TorusArray<Mod> vals(n, n, Mod(0, mod));
  for (long long j = 0; j < n; ++j)
    for (long long i = 0; i < n; ++i) {
      long long g = i >= j ? i - j : i - j + n;
      vals.at(i, j) = Mod(g + n * j, mod);
    }
  ZnArray f(n, std::move(vals));
  if (!is_balanced(f)) throw verification_error("construct_fn: array is not balanced");
  if (!is_zero_sum(f, puncture(square_window(n - 1))))
    throw verification_error("construct_fn: array is not zero-sum");
  return f;
}

struct ProofIdentities {
  long long n = 0;
  bool row_value_sets = false;       // values of f_n along row j0 are [n j0, n j0 + n - 1]
  bool diagonal_constancy = false;   // g_n(i,j) = g_n(i+1,j+1)
  bool horizontal_sums = false;      // n(n-1)/2 for every horizontal line
  bool vertical_sums = false;        // n(n-1)/2 + n^2(n-1)/2 for every vertical line
  bool complement_decomposition = false;  // complement = H + V + one extra cell, H and V meeting once
  bool complement_sums = false;      // n(n-1)(n+2)/2 + n on every complement translate
  bool window_sums = false;          // n^2(n+1)(n-2)/2 = 0 on every window translate
  bool parity = false;               // (n+1)(n-2) is even

  bool all_good() const {
    return row_value_sets && diagonal_constancy && horizontal_sums && vertical_sums &&
           complement_decomposition && complement_sums && window_sums && parity;
  }
};

// Line-by-line verification of the sum identities behind the construction,
// at every translate.
inline ProofIdentities proof_identities_check(long long n) {
  if (n < 3) throw std::invalid_argument("proof_identities_check: n must be >= 3");
  ProofIdentities rep;
  rep.n = n;
  const long long mod = n * n;
  auto gval = [&](long long i, long long j) {
    long long ii = ((i % n) + n) % n, jj = ((j % n) + n) % n;
    return ii >= jj ? ii - jj : ii - jj + n;
  };
  auto fval = [&](long long i, long long j) {
    long long jj = ((j % n) + n) % n;
    return (gval(i, j) + n * jj) % mod;
  };

  rep.row_value_sets = true;
  for (long long j0 = 0; j0 < n; ++j0) {
    std::set<long long> vals;
    for (long long i = 0; i < n; ++i) vals.insert(fval(i, j0));
    std::set<long long> expect;
    for (long long v = n * j0; v < n * j0 + n; ++v) expect.insert(v);
    if (vals != expect) rep.row_value_sets = false;
  }

  rep.diagonal_constancy = true;
  for (long long j = 0; j < n; ++j)
    for (long long i = 0; i < n; ++i)
      if (gval(i, j) != gval(i + 1, j + 1)) rep.diagonal_constancy = false;

  const long long hsum = (n * (n - 1) / 2) % mod;
  const long long vsum = (n * (n - 1) / 2 + n * n * (n - 1) / 2) % mod;
  rep.horizontal_sums = rep.vertical_sums = true;
  for (long long c = 0; c < n; ++c) {
    long long h = 0, v = 0;
    for (long long t = 0; t < n; ++t) {
      h += fval(t, c);
      v += fval(c, t);
    }
    if (h % mod != hsum) rep.horizontal_sums = false;
    if (v % mod != vsum) rep.vertical_sums = false;
  }

  // complement of the translated punctured window inside the torus
  const Window shifted = translate(puncture(square_window(n - 1)), {1, 1});
  std::set<std::pair<long long, long long>> window_cells;
  for (LatticePoint q : shifted) window_cells.emplace(q.i1 % n, q.i2 % n);
  std::vector<std::pair<long long, long long>> complement;
  for (long long j = 0; j < n; ++j)
    for (long long i = 0; i < n; ++i)
      if (!window_cells.count({i, j})) complement.emplace_back(i, j);

  rep.complement_decomposition = true;
  rep.complement_sums = true;
  rep.window_sums = true;
  const long long csum = (n * (n - 1) * (n + 2) / 2 + n) % mod;
  const long long wsum = (n * n * (n + 1) * (n - 2) / 2) % mod;
  for (long long j0 = 0; j0 < n; ++j0)
    for (long long i0 = 0; i0 < n; ++i0) {
      std::set<std::pair<long long, long long>> cells;
      long long sum = 0;
      for (auto [ci, cj] : complement) {
        long long ti = (ci + i0) % n, tj = (cj + j0) % n;
        cells.emplace(ti, tj);
        sum += fval(ti, tj);
      }
      // expected decomposition: row j0, column i0, and the cell (i0+1, j0+1)
      std::set<std::pair<long long, long long>> expect;
      for (long long t = 0; t < n; ++t) {
        expect.emplace(t, j0);
        expect.emplace(i0, t);
      }
      std::size_t hv_size = expect.size();
      if (hv_size != static_cast<std::size_t>(2 * n - 1)) rep.complement_decomposition = false;
      expect.emplace((i0 + 1) % n, (j0 + 1) % n);
      if (cells != expect) rep.complement_decomposition = false;
      if (sum % mod != csum) rep.complement_sums = false;

      long long ws = 0;
      for (LatticePoint q : shifted) ws += fval(q.i1 + i0, q.i2 + j0);
      if (ws % mod != wsum || wsum != 0) rep.window_sums = false;
    }

  rep.parity = ((n + 1) * (n - 2)) % 2 == 0;
  return rep;
}

struct NonexistenceCertificate {
  unsigned long p = 0;
  long long k = 0;
  bool applicable = false;  // kernel over F_p is trivial
  std::size_t kernel_dim = 0;
  std::string statement;
};

// Nonexistence of balanced zero-sum arrays without search: a balanced
// array on the p-torus contains the value 1, so its reduction mod p is a
// nonzero F_p-array, and zero sums mod p^2 reduce to zero sums mod p. If
// the mod-p kernel is trivial this is a contradiction.
inline NonexistenceCertificate nonexistence_certificate(unsigned long p, long long k) {
  if (!is_odd_prime(p) || p < 5)
    throw std::invalid_argument("nonexistence_certificate: p must be an odd prime >= 5");
  if (k < 2 || k > static_cast<long long>(p) - 2)
    throw std::invalid_argument("nonexistence_certificate: k must lie in 2..p-2");
  NonexistenceCertificate cert;
  cert.p = p;
  cert.k = k;
  cert.kernel_dim = kernel(k, p).dimension;
  cert.applicable = (cert.kernel_dim == 0);
  if (cert.applicable)
    cert.statement =
        "no balanced zero-sum array exists: any such array reduces mod " + std::to_string(p) +
        " to a nonzero kernel element, but the kernel is trivial";
  else
    cert.statement = "certificate not applicable: the mod-p kernel is nontrivial";
  return cert;
}

enum class ProbeStatus { Found, ExhaustedNone, Budget };

struct ProbeReport {
  long long n = 0, k = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  ProbeStatus status = ProbeStatus::Budget;
  bool exhausted = false;
  bool seeded_witness = false;
  std::vector<ZnArray> found;
};

inline const char* to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::Found: return "FOUND";
    case ProbeStatus::ExhaustedNone: return "EXHAUSTED-NONE";
    case ProbeStatus::Budget: return "BUDGET";
  }
  return "?";
}

// Budgeted backtracking probe for balanced zero-sum arrays on a composite
// torus. Symmetry is reduced by pinning value 0 at the origin; cells are
// visited in a static order that completes window translates as early as
// possible, and every completed translate prunes. When k = n-1 the known
// construction is verified first as a witness (the blind search cannot
// reach the first completed translate for moderate n). The probe never
// reports nonexistence unless the whole space was exhausted.
inline ProbeReport composite_probe(long long n, long long k, std::uint64_t budget,
                                   bool seed_witness = true) {
  if (n < 4 || is_prime(static_cast<unsigned long>(n)))
    throw std::invalid_argument("composite_probe: n must be composite");
  if (k < 2 || k > n - 1) throw std::invalid_argument("composite_probe: k must lie in 2..n-1");
  ProbeReport rep;
  rep.n = n;
  rep.k = k;
  rep.budget = budget;

  const Window w = puncture(square_window(k));
  const long long cells = n * n;
  const long long mod = n * n;

  std::set<ZnArray> found;
  if (seed_witness && k == n - 1) {
    ZnArray f = construct_fn(n);
    if (is_balanced(f) && is_zero_sum(f, w) && f.at(0, 0).value() == 0) {
      found.insert(f);
      rep.seeded_witness = true;
    }
  }

  // translates as flat cell lists
  std::vector<std::vector<int>> translates;
  for (long long j = 0; j < n; ++j)
    for (long long i = 0; i < n; ++i) {
      std::vector<int> t;
      for (LatticePoint q : w)
        t.push_back(static_cast<int>(((i + q.i1) % n) + n * ((j + q.i2) % n)));
      std::sort(t.begin(), t.end());
      translates.push_back(std::move(t));
    }

  // static cell order: origin first, then greedily finish the translate
  // that is closest to completion
  std::vector<int> order;
  std::vector<bool> chosen(static_cast<std::size_t>(cells), false);
  order.push_back(0);
  chosen[0] = true;
  while (order.size() < static_cast<std::size_t>(cells)) {
    int best_translate = -1;
    long long best_remaining = cells + 1;
    for (std::size_t t = 0; t < translates.size(); ++t) {
      long long rem = 0;
      for (int c : translates[t])
        if (!chosen[static_cast<std::size_t>(c)]) ++rem;
      if (rem > 0 && rem < best_remaining) {
        best_remaining = rem;
        best_translate = static_cast<int>(t);
      }
    }
    if (best_translate < 0) {
      for (int c = 0; c < cells; ++c)
        if (!chosen[static_cast<std::size_t>(c)]) {
          order.push_back(c);
          chosen[static_cast<std::size_t>(c)] = true;
          break;
        }
      continue;
    }
    for (int c : translates[static_cast<std::size_t>(best_translate)])
      if (!chosen[static_cast<std::size_t>(c)]) {
        order.push_back(c);
        chosen[static_cast<std::size_t>(c)] = true;
      }
  }

  // position of each cell in the order; translates complete at their
  // latest cell
  std::vector<int> pos(static_cast<std::size_t>(cells));
  for (std::size_t d = 0; d < order.size(); ++d) pos[static_cast<std::size_t>(order[d])] = static_cast<int>(d);
  std::vector<std::vector<std::size_t>> complete_at(static_cast<std::size_t>(cells));
  for (std::size_t t = 0; t < translates.size(); ++t) {
    int last = 0;
    for (int c : translates[t]) last = std::max(last, pos[static_cast<std::size_t>(c)]);
    complete_at[static_cast<std::size_t>(last)].push_back(t);
  }

  std::vector<long long> x(static_cast<std::size_t>(cells), -1);
  std::vector<bool> used(static_cast<std::size_t>(cells), false);
  x[0] = 0;
  used[0] = true;
  bool out_of_budget = false;

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (out_of_budget) return;
    if (depth == order.size()) {
      ZnArray a = ZnArray::from_row_vector(n, x);
      if (is_balanced(a) && is_zero_sum(a, w)) found.insert(std::move(a));
      return;
    }
    const int cell = order[depth];
    for (long long v = 1; v < cells; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (rep.nodes >= budget) {
        out_of_budget = true;
        return;
      }
      ++rep.nodes;
      x[static_cast<std::size_t>(cell)] = v;
      used[static_cast<std::size_t>(v)] = true;
      bool ok = true;
      for (std::size_t t : complete_at[depth]) {
        long long s = 0;
        for (int c : translates[t]) s += x[static_cast<std::size_t>(c)];
        if (s % mod != 0) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
      used[static_cast<std::size_t>(v)] = false;
      x[static_cast<std::size_t>(cell)] = -1;
      if (out_of_budget) return;
    }
  };
  rec(rec, 1);

  rep.exhausted = !out_of_budget;
  rep.found.assign(found.begin(), found.end());
  if (!rep.found.empty())
    rep.status = ProbeStatus::Found;
  else if (rep.exhausted)
    rep.status = ProbeStatus::ExhaustedNone;
  else
    rep.status = ProbeStatus::Budget;
  return rep;
}

}  // namespace tomofix
