#include "maglap/cochains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace maglap {

namespace detail {

cplx& CellArray::ref(int k, int s) {
  if (!grid_.inside(k, s)) {
    throw std::out_of_range("cochain write outside 1.." +
                            std::to_string(grid_.N()) + " x 1.." +
                            std::to_string(grid_.M()) + " at (" +
                            std::to_string(k) + "," + std::to_string(s) + ")");
  }
  return a_[grid_.index(k, s)];
}

}  // namespace detail

Cochain1::Cochain1(const GridSpec& g)
    : grid_(g),
      u_(static_cast<std::size_t>(g.N() + 1) * (g.M() + 1), cplx{}),
      v_(static_cast<std::size_t>(g.N() + 1) * (g.M() + 1), cplx{}) {}

cplx& Cochain1::ref_u(int k, int s) {
  if (!stored(k, s)) {
    throw std::out_of_range("1-form write outside 0.." +
                            std::to_string(grid_.N()) + " x 0.." +
                            std::to_string(grid_.M()));
  }
  return u_[idx(k, s)];
}

cplx& Cochain1::ref_v(int k, int s) {
  if (!stored(k, s)) {
    throw std::out_of_range("1-form write outside 0.." +
                            std::to_string(grid_.N()) + " x 0.." +
                            std::to_string(grid_.M()));
  }
  return v_[idx(k, s)];
}

namespace {

double span_sup(std::span<const cplx> a) {
  double m = 0;
  for (const cplx& z : a) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

double sup_norm(const Cochain0& a) { return span_sup(a.data()); }
double sup_norm(const Cochain2& a) { return span_sup(a.data()); }

double sup_norm(const Cochain1& a) {
  double m = 0;
  for (int s = 0; s <= a.grid().M(); ++s) {
    for (int k = 0; k <= a.grid().N(); ++k) {
      m = std::max({m, std::abs(a.u(k, s)), std::abs(a.v(k, s))});
    }
  }
  return m;
}

double max_abs_diff(const Cochain0& a, const Cochain0& b) {
  require_same_grid(a.grid(), b.grid());
  double m = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

double max_abs_diff(const Cochain2& a, const Cochain2& b) {
  require_same_grid(a.grid(), b.grid());
  double m = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

double max_abs_diff(const Cochain1& a, const Cochain1& b) {
  require_same_grid(a.grid(), b.grid());
  double m = 0;
  for (int s = 0; s <= a.grid().M(); ++s) {
    for (int k = 0; k <= a.grid().N(); ++k) {
      m = std::max({m, std::abs(a.u(k, s) - b.u(k, s)),
                    std::abs(a.v(k, s) - b.v(k, s))});
    }
  }
  return m;
}

}  // namespace maglap
