// Walks the full pipeline for the width-2 square window: zero locus,
// bounded character arrays, a rational basis, and a linearly growing fixed
// array synthesized from a degree-1 polynomial solution.
#include <iostream>

#include "tomofix/bounded.hpp"
#include "tomofix/grid_text.hpp"
#include "tomofix/polygrowth.hpp"

using namespace tomofix;

int main() {
  const long long n = 2;
  const Window window = square_window(n);
  const Window punctured = puncture(window);

  std::cout << "zero locus of the punctured width-" << n << " square:\n";
  for (const TorusPoint& p : square_zero_locus(n))
    std::cout << "  x = zeta_" << p.x.order << "^" << p.x.exp << ", y = zeta_" << p.y.order
              << "^" << p.y.exp << "\n";

  std::cout << "\nrational basis on the fundamental torus:\n";
  RationalBasis rb = rational_basis(n);
  for (std::size_t k = 0; k < rb.arrays.size(); ++k) {
    std::cout << "array " << k << ":\n" << render_grid(rb.arrays[k], k == 0);
    std::cout << "fixed for the full window: " << std::boolalpha
              << is_fixed(window, rb.arrays[k]) << "\n";
  }

  const TorusPoint p = square_zero_locus(n).front();
  DiffOp2 op = window_operator(punctured, p);
  SolutionSpace sols = sol_space(op, 1);
  std::cout << "\npolynomial solutions of degree <= 1: dimension " << sols.dimension()
            << " (formula " << dim_formula(op, 1) << ")\n";
  PatchArray<CycElem> grown = array_from_solution(punctured, p, sols.basis.back(), Rect{0, 7, 0, 7});
  std::cout << "a linearly growing fixed array (window sums vanish on the interior):\n"
            << render_grid(grown);
  return 0;
}
