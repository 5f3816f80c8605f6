// Text-grid rendering of arrays. Orientation is declared in the output
// rather than assumed: row j = 0 prints first and j increases downward,
// i increases to the right.
#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "tomofix/arrays.hpp"
#include "tomofix/cyclotomic.hpp"

namespace tomofix {

inline std::string grid_legend() {
  return "# rows: j = 0,1,... downward; columns: i = 0,1,... rightward\n";
}

inline std::string value_text(const mpz_class& v) { return v.get_str(); }
inline std::string value_text(const mpq_class& v) { return v.get_str(); }
inline std::string value_text(const Mod& v) { return std::to_string(v.value()); }
inline std::string value_text(const CycElem& v) { return v.str(); }

template <RingValue R>
std::string render_grid(const TorusArray<R>& a, bool legend = true) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (long long j = 0; j < a.n2(); ++j)
    for (long long i = 0; i < a.n1(); ++i) {
      cells.push_back(value_text(a.at(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream out;
  if (legend) out << grid_legend();
  for (long long j = 0; j < a.n2(); ++j) {
    for (long long i = 0; i < a.n1(); ++i) {
      const std::string& s = cells[static_cast<std::size_t>(i + a.n1() * j)];
      out << std::string(width - s.size(), ' ') << s << (i + 1 < a.n1() ? " " : "");
    }
    out << "\n";
  }
  return out.str();
}

template <RingValue R>
std::string render_grid(const PatchArray<R>& a, bool legend = true) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  const Rect& r = a.rect();
  for (long long j = r.jmin; j <= r.jmax; ++j)
    for (long long i = r.imin; i <= r.imax; ++i) {
      cells.push_back(value_text(a.at(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream out;
  if (legend)
    out << "# patch [" << r.imin << ".." << r.imax << "] x [" << r.jmin << ".." << r.jmax
        << "]; " << grid_legend();
  std::size_t idx = 0;
  for (long long j = r.jmin; j <= r.jmax; ++j) {
    for (long long i = r.imin; i <= r.imax; ++i, ++idx) {
      const std::string& s = cells[idx];
      out << std::string(width - s.size(), ' ') << s << (i < r.imax ? " " : "");
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tomofix
