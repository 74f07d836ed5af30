#pragma once

// Lattice dimensions and rectangle geometry shared by every discrete form.

#include <stdexcept>

#include "maglap/types.hpp"

namespace maglap {

// N x M cells over [a1,a2] x [b1,b2] with a single mesh scale h that must
// match in both directions.  Cell (k,s), k = 1..N, s = 1..M, covers
// [a1+(k-1)h, a1+kh] x [b1+(s-1)h, b1+sh].  All cochain indices follow this
// 1-based interior convention; reads outside it are ghost zeros.
class GridSpec {
 public:
  GridSpec(int n, int m, const Rect& box);

  // Pure combinatorial lattice: [0,N] x [0,M], h = 1.
  static GridSpec lattice(int n, int m);
  // [0,1]^2 with n cells per side.
  static GridSpec unit_square(int n);

  int N() const noexcept { return n_; }
  int M() const noexcept { return m_; }
  double h() const noexcept { return h_; }
  const Rect& box() const noexcept { return box_; }

  int cells() const noexcept { return n_ * m_; }
  bool inside(int k, int s) const noexcept {
    return k >= 1 && k <= n_ && s >= 1 && s <= m_;
  }
  // Row-major unknown ordering, k fastest: (k,s) -> (s-1)*N + (k-1).
  int index(int k, int s) const noexcept { return (s - 1) * n_ + (k - 1); }

  // Lattice lines x = a1 + k h, y = b1 + s h.
  double x_line(int k) const noexcept { return box_.a1 + k * h_; }
  double y_line(int s) const noexcept { return box_.b1 + s * h_; }

  bool same_as(const GridSpec& other) const noexcept;

 private:
  int n_;
  int m_;
  Rect box_;
  double h_;
};

// Throws std::invalid_argument unless both operands live on the same grid.
void require_same_grid(const GridSpec& a, const GridSpec& b);

}  // namespace maglap
