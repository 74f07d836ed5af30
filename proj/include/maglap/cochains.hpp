#pragma once

// Complex-valued discrete forms on the rectangular lattice.
//
// Storage conventions (fixed, relied on throughout):
//   Cochain0, Cochain2 : components at k = 1..N, s = 1..M.
//   Cochain1           : components (u, v) at k = 0..N, s = 0..M.  The k = 0
//                        and s = 0 layers carry the coboundary of a 0-form
//                        next to the lower-left boundary; inner products and
//                        norms read interior indices 1..N x 1..M only.
// Reads outside the stored range return exactly zero (homogeneous Dirichlet
// boundary encoded as ghost zeros); writes outside it throw std::out_of_range.

#include <span>
#include <vector>

#include "maglap/grid.hpp"

namespace maglap {

namespace detail {

// Dense complex array over the interior index range 1..N x 1..M.
class CellArray {
 public:
  explicit CellArray(const GridSpec& g) : grid_(g), a_(g.cells(), cplx{}) {}

  const GridSpec& grid() const noexcept { return grid_; }

  cplx at(int k, int s) const noexcept {
    return grid_.inside(k, s) ? a_[grid_.index(k, s)] : cplx{};
  }
  cplx& ref(int k, int s);
  void set(int k, int s, cplx value) { ref(k, s) = value; }

  std::span<const cplx> data() const noexcept { return a_; }
  std::span<cplx> data() noexcept { return a_; }

 private:
  GridSpec grid_;
  std::vector<cplx> a_;
};

}  // namespace detail

class Cochain0 {
 public:
  explicit Cochain0(const GridSpec& g) : a_(g) {}

  const GridSpec& grid() const noexcept { return a_.grid(); }
  cplx at(int k, int s) const noexcept { return a_.at(k, s); }
  cplx& ref(int k, int s) { return a_.ref(k, s); }
  void set(int k, int s, cplx value) { a_.set(k, s, value); }
  std::span<const cplx> data() const noexcept { return a_.data(); }
  std::span<cplx> data() noexcept { return a_.data(); }

 private:
  detail::CellArray a_;
};

class Cochain2 {
 public:
  explicit Cochain2(const GridSpec& g) : a_(g) {}

  const GridSpec& grid() const noexcept { return a_.grid(); }
  cplx at(int k, int s) const noexcept { return a_.at(k, s); }
  cplx& ref(int k, int s) { return a_.ref(k, s); }
  void set(int k, int s, cplx value) { a_.set(k, s, value); }
  std::span<const cplx> data() const noexcept { return a_.data(); }
  std::span<cplx> data() noexcept { return a_.data(); }

 private:
  detail::CellArray a_;
};

// 1-form with an x-edge component u and a y-edge component v on the extended
// range 0..N x 0..M.
class Cochain1 {
 public:
  explicit Cochain1(const GridSpec& g);

  const GridSpec& grid() const noexcept { return grid_; }

  cplx u(int k, int s) const noexcept {
    return stored(k, s) ? u_[idx(k, s)] : cplx{};
  }
  cplx v(int k, int s) const noexcept {
    return stored(k, s) ? v_[idx(k, s)] : cplx{};
  }
  cplx& ref_u(int k, int s);
  cplx& ref_v(int k, int s);
  void set_u(int k, int s, cplx value) { ref_u(k, s) = value; }
  void set_v(int k, int s, cplx value) { ref_v(k, s) = value; }

  bool stored(int k, int s) const noexcept {
    return k >= 0 && k <= grid_.N() && s >= 0 && s <= grid_.M();
  }

 private:
  int idx(int k, int s) const noexcept { return s * (grid_.N() + 1) + k; }

  GridSpec grid_;
  std::vector<cplx> u_;
  std::vector<cplx> v_;
};

// Sup norms and componentwise distances over the stored ranges.
double sup_norm(const Cochain0& a);
double sup_norm(const Cochain1& a);
double sup_norm(const Cochain2& a);
double max_abs_diff(const Cochain0& a, const Cochain0& b);
double max_abs_diff(const Cochain1& a, const Cochain1& b);
double max_abs_diff(const Cochain2& a, const Cochain2& b);

}  // namespace maglap
