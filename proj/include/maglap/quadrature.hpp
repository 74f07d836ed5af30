#pragma once

// Gauss-Legendre rules on [-1,1], generated by Newton iteration on the
// Legendre recurrence (machine accurate for the small orders used here).

#include <utility>
#include <vector>

namespace maglap {

struct QuadratureRule {
  std::vector<double> nodes;    // in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

// n-point rule, n >= 1 (std::invalid_argument otherwise).
QuadratureRule gauss_legendre(int n);

}  // namespace maglap
