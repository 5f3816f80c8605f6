// Finite-field analysis on the p-torus: the representation matrix of the
// punctured-window operator, its kernel, and the group-determinant
// congruence det M = n^2 - 1 (mod p) that decides invertibility.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tomofix/arrays.hpp"

namespace tomofix {

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_odd_prime(unsigned long n) { return n > 2 && is_prime(n); }

// Square matrix over F_p, entries reduced mod p.
class FpMatrix {
 public:
  FpMatrix(unsigned long p, std::size_t size)
      : p_(p), size_(size), a_(size * size, 0) {
    if (!is_odd_prime(p)) throw std::invalid_argument("FpMatrix: modulus must be an odd prime");
  }

  unsigned long p() const { return p_; }
  std::size_t size() const { return size_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * size_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * size_ + c]; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  unsigned long p_;
  std::size_t size_;
  std::vector<std::uint32_t> a_;
};

namespace modp_detail {

inline std::uint32_t inv_mod(std::uint32_t a, unsigned long p) {
  return static_cast<std::uint32_t>(Mod(a, p).inv().value());
}

// Basis array e_k with a single one at the cell k = i + p*j.
inline TorusArray<Mod> basis_array(unsigned long p, std::size_t k) {
  TorusArray<Mod> e(static_cast<long long>(p), static_cast<long long>(p), Mod(0, p));
  e.at(static_cast<long long>(k % p), static_cast<long long>(k / p)) = Mod(1, p);
  return e;
}

inline std::size_t flat_index(const LatticePoint& q, unsigned long p) {
  long long i = ((q.i1 % static_cast<long long>(p)) + p) % p;
  long long j = ((q.i2 % static_cast<long long>(p)) + p) % p;
  return static_cast<std::size_t>(i) + p * static_cast<std::size_t>(j);
}

}  // namespace modp_detail

// Representation matrix of the operator a -> window sums of a for S(n)* on
// the p-torus, in the flattened basis e_k, k = i + p*j: column k holds the
// coordinates of the image of e_k.
inline FpMatrix rep_matrix(long long n, unsigned long p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("rep_matrix: p must be an odd prime");
  if (n < 2) throw std::invalid_argument("rep_matrix: n must be >= 2");
  const Window punctured = puncture(square_window(n));
  const std::size_t size = static_cast<std::size_t>(p) * p;
  FpMatrix m(p, size);
  for (std::size_t k = 0; k < size; ++k) {
    TorusArray<Mod> image = delta(punctured, modp_detail::basis_array(p, k));
    for (long long j = 0; j < static_cast<long long>(p); ++j)
      for (long long i = 0; i < static_cast<long long>(p); ++i) {
        std::size_t r = static_cast<std::size_t>(i) + p * static_cast<std::size_t>(j);
        m.at(r, k) = static_cast<std::uint32_t>(image.at(i, j).value());
      }
  }
  return m;
}

struct RrefResult {
  FpMatrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, ascending
};

// Reduced row echelon form over F_p with deterministic first-nonzero
// pivoting.
inline RrefResult rref_mod_p(FpMatrix m) {
  const unsigned long p = m.p();
  const std::size_t size = m.size();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < size && row < size; ++col) {
    std::size_t sel = row;
    while (sel < size && m.at(sel, col) == 0) ++sel;
    if (sel == size) continue;
    if (sel != row)
      for (std::size_t c = 0; c < size; ++c) std::swap(m.at(row, c), m.at(sel, c));
    std::uint64_t inv = modp_detail::inv_mod(m.at(row, col), p);
    for (std::size_t c = 0; c < size; ++c)
      m.at(row, c) = static_cast<std::uint32_t>((m.at(row, c) * inv) % p);
    for (std::size_t r = 0; r < size; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      std::uint64_t f = m.at(r, col);
      for (std::size_t c = 0; c < size; ++c) {
        std::uint64_t v = m.at(r, c) + (p - (f * m.at(row, c)) % p);
        m.at(r, c) = static_cast<std::uint32_t>(v % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(m), row, std::move(pivots)};
}

// Determinant mod p by Gaussian elimination with partial (first-nonzero)
// pivoting.
inline unsigned long det_mod_p(FpMatrix m) {
  const unsigned long p = m.p();
  const std::size_t size = m.size();
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t sel = col;
    while (sel < size && m.at(sel, col) == 0) ++sel;
    if (sel == size) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < size; ++c) std::swap(m.at(col, c), m.at(sel, c));
      det = (det * (p - 1)) % p;
    }
    det = (det * m.at(col, col)) % p;
    std::uint64_t inv = modp_detail::inv_mod(m.at(col, col), p);
    for (std::size_t r = col + 1; r < size; ++r) {
      if (m.at(r, col) == 0) continue;
      std::uint64_t f = (m.at(r, col) * inv) % p;
      for (std::size_t c = col; c < size; ++c) {
        std::uint64_t v = m.at(r, c) + (p - (f * m.at(col, c)) % p);
        m.at(r, c) = static_cast<std::uint32_t>(v % p);
      }
    }
  }
  return static_cast<unsigned long>(det);
}

struct KernelReport {
  unsigned long p = 0;
  long long n = 0;
  std::size_t dimension = 0;
  std::vector<TorusArray<Mod>> basis;
  FpMatrix rref;
};

// Kernel of the representation matrix: one basis array per free column of
// the RREF, unflattened back onto the torus.
inline KernelReport kernel(long long n, unsigned long p) {
  RrefResult r = rref_mod_p(rep_matrix(n, p));
  const std::size_t size = r.rref.size();
  std::vector<bool> is_pivot(size, false);
  for (std::size_t col : r.pivot_cols) is_pivot[col] = true;
  KernelReport out{p, n, size - r.rank, {}, r.rref};
  for (std::size_t free_col = 0; free_col < size; ++free_col) {
    if (is_pivot[free_col]) continue;
    TorusArray<Mod> v(static_cast<long long>(p), static_cast<long long>(p), Mod(0, p));
    v.at(static_cast<long long>(free_col % p), static_cast<long long>(free_col / p)) = Mod(1, p);
    for (std::size_t row = 0; row < r.pivot_cols.size(); ++row) {
      std::uint32_t c = r.rref.at(row, free_col);
      if (c != 0)
        v.at(static_cast<long long>(r.pivot_cols[row] % p),
             static_cast<long long>(r.pivot_cols[row] / p)) = Mod(-static_cast<std::int64_t>(c), p);
    }
    out.basis.push_back(std::move(v));
  }
  if (out.basis.size() != out.dimension)
    throw std::logic_error("kernel: basis size does not match the nullity");
  return out;
}

struct GroupDetCheck {
  unsigned long direct;   // determinant of the representation matrix mod p
  unsigned long formula;  // (n^2 - 1) mod p, from the character-product factorization
  bool equal;
};

inline GroupDetCheck group_det_check(long long n, unsigned long p) {
  unsigned long direct = det_mod_p(rep_matrix(n, p));
  unsigned long formula =
      static_cast<unsigned long>(((static_cast<long long>(n) * n - 1) % static_cast<long long>(p) +
                                  static_cast<long long>(p)) %
                                 static_cast<long long>(p));
  return GroupDetCheck{direct, formula, direct == formula};
}

struct SweepRow {
  long long n;
  std::size_t kernel_dim;
  unsigned long det;
};

// Kernel dimension and determinant across all window widths 2..p-1; the
// operator is invertible exactly when n is not p-1.
inline std::vector<SweepRow> invertibility_sweep(unsigned long p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("invertibility_sweep: p must be an odd prime");
  if (p > 31) throw std::invalid_argument("invertibility_sweep: p capped at 31");
  std::vector<SweepRow> out;
  for (long long n = 2; n < static_cast<long long>(p); ++n) {
    KernelReport k = kernel(n, p);
    out.push_back(SweepRow{n, k.dimension, det_mod_p(rep_matrix(n, p))});
  }
  return out;
}

// Entrywise reduction of a rational array mod p; denominators must be
// units.
inline TorusArray<Mod> reduce_rational_array(const TorusArray<mpq_class>& a, unsigned long p) {
  TorusArray<Mod> out(a.n1(), a.n2(), Mod(0, p));
  for (long long j = 0; j < a.n2(); ++j)
    for (long long i = 0; i < a.n1(); ++i) {
      const mpq_class& q = a.at(i, j);
      mpz_class num = q.get_num() % static_cast<long>(p);
      mpz_class den = q.get_den() % static_cast<long>(p);
      if (den == 0)
        throw std::invalid_argument("reduce_rational_array: denominator divisible by p");
      Mod numm(num.get_si(), p), denm(den.get_si(), p);
      out.at(i, j) = numm * denm.inv();
    }
  return out;
}

}  // namespace tomofix
