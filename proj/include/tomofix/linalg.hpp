// Dense exact linear algebra over a field (rationals or a cyclotomic
// field): reduced row echelon form, rank, kernel bases. Pivoting is
// deterministic (first nonzero entry in column order).
#pragma once

#include <cstddef>
#include <vector>

#include "tomofix/cyclotomic.hpp"
#include "tomofix/rings.hpp"

namespace tomofix {

inline bool field_is_zero(const mpq_class& q) { return q == 0; }
inline mpq_class field_inv(const mpq_class& q) { return mpq_class(1) / q; }
inline bool field_is_zero(const CycElem& x) { return x.is_zero(); }
inline CycElem field_inv(const CycElem& x) { return x.inv(); }
inline bool field_is_zero(const Mod& x) { return x.value() == 0; }
inline Mod field_inv(const Mod& x) { return x.inv(); }

template <class F>
struct Rref {
  std::vector<std::vector<F>> rows;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, ascending
  std::size_t rank() const { return pivot_cols.size(); }
};

template <class F>
Rref<F> rref(std::vector<std::vector<F>> m) {
  Rref<F> out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && field_is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    F inv = field_inv(m[row][col]);
    for (std::size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || field_is_zero(m[r][col])) continue;
      F factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - factor * m[row][c];
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rows = std::move(m);
  return out;
}

template <class F>
std::size_t row_rank(std::vector<std::vector<F>> m) {
  return rref(std::move(m)).rank();
}

// Kernel basis in column coordinates: one vector per free column, the free
// coordinate set to one.
template <class F>
std::vector<std::vector<F>> kernel_from_rref(const Rref<F>& r, std::size_t cols,
                                             const F& zero, const F& one) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<F> v(cols, zero);
    v[free_col] = one;
    for (std::size_t rr = 0; rr < r.pivot_cols.size(); ++rr)
      v[r.pivot_cols[rr]] = zero - r.rows[rr][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Reduces a row against an RREF; returns true when the row lies in the span.
template <class F>
bool in_row_span(const Rref<F>& r, std::vector<F> row) {
  for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
    std::size_t c = r.pivot_cols[k];
    if (field_is_zero(row[c])) continue;
    F factor = row[c];
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = row[j] - factor * r.rows[k][j];
  }
  for (const F& v : row)
    if (!field_is_zero(v)) return false;
  return true;
}

}  // namespace tomofix
