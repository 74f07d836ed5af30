#pragma once

#include <complex>

namespace maglap {

using cplx = std::complex<double>;

// Axis-aligned rectangle [a1,a2] x [b1,b2].
struct Rect {
  double a1 = 0.0;
  double b1 = 0.0;
  double a2 = 1.0;
  double b2 = 1.0;
};

}  // namespace maglap
