#include "maglap/grid.hpp"

#include <cmath>
#include <string>

namespace maglap {

GridSpec::GridSpec(int n, int m, const Rect& box) : n_(n), m_(m), box_(box) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("GridSpec: need at least one cell per axis");
  }
  if (!(box.a1 < box.a2) || !(box.b1 < box.b2)) {
    throw std::invalid_argument("GridSpec: degenerate rectangle");
  }
  const double hx = (box.a2 - box.a1) / n;
  const double hy = (box.b2 - box.b1) / m;
  if (std::abs(hx - hy) > 1e-12 * std::max(hx, hy)) {
    throw std::invalid_argument(
        "GridSpec: mesh scale mismatch, (a2-a1)/N = " + std::to_string(hx) +
        " but (b2-b1)/M = " + std::to_string(hy));
  }
  h_ = hx;
}

GridSpec GridSpec::lattice(int n, int m) {
  return GridSpec(n, m, Rect{0.0, 0.0, static_cast<double>(n),
                             static_cast<double>(m)});
}

GridSpec GridSpec::unit_square(int n) {
  return GridSpec(n, n, Rect{0.0, 0.0, 1.0, 1.0});
}

bool GridSpec::same_as(const GridSpec& other) const noexcept {
  const double scale = std::max(std::abs(h_), std::abs(other.h_));
  auto close = [scale](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, scale);
  };
  return n_ == other.n_ && m_ == other.m_ && close(box_.a1, other.box_.a1) &&
         close(box_.b1, other.box_.b1) && close(box_.a2, other.box_.a2) &&
         close(box_.b2, other.box_.b2);
}

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!a.same_as(b)) {
    throw std::invalid_argument("operands live on different grids");
  }
}

}  // namespace maglap
