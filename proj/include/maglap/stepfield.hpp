#pragma once

// Piecewise-constant realization of lattice 0-forms: one complex value per
// cell, zero outside the rectangle.

#include <utility>

#include "maglap/cochains.hpp"

namespace maglap {

class StepField {
 public:
  explicit StepField(const GridSpec& g) : values_(g) {}
  static StepField from_cochain(const Cochain0& phi);

  const GridSpec& grid() const noexcept { return values_.grid(); }
  Cochain0 to_cochain() const { return values_; }

  cplx value(int k, int s) const noexcept { return values_.at(k, s); }
  cplx& ref(int k, int s) { return values_.ref(k, s); }

  // Point evaluation; zero outside the rectangle.  On a cell line the cell
  // to the upper right wins (measure-zero choice).
  cplx eval(double x, double y) const noexcept;

  // L2 norm over the rectangle: h * sqrt(sum |values|^2).
  double l2_norm() const;

 private:
  Cochain0 values_;
};

// Mean of the step field over the window [x, x+h] x [y, y+h], computed in
// closed form from the (at most 2x2) overlapped cells with zero extension.
cplx steklov_eval(const StepField& f, double x, double y);

// Forward difference quotients (f(x+h,y)-f(x,y))/h and (f(x,y+h)-f(x,y))/h
// as step fields on the same cells, using the zero continuation.  The pair
// (u, v) satisfies h * u_{k,s} = (d phi).u_{k,s} on interior indices, and
// likewise for v.
std::pair<StepField, StepField> difference_d(const StepField& f);

}  // namespace maglap
