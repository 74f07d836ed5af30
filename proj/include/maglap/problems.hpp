#pragma once

// Continuum Dirichlet problems fed to the difference scheme: right side,
// magnetic potential components and (optionally) the exact solution used for
// error columns.

#include <functional>
#include <string>
#include <vector>

#include "maglap/types.hpp"

namespace maglap {

struct ContinuumProblem {
  std::string name;
  Rect domain;
  std::function<cplx(double, double)> rhs;
  std::function<double(double, double)> pot_x;  // dx component of A
  std::function<double(double, double)> pot_y;  // dy component of A
  std::function<cplx(double, double)> exact;    // may be empty

  bool has_exact() const noexcept { return static_cast<bool>(exact); }

  // When an exact solution is present it must vanish on the boundary:
  // sampled at 64 points per side, |exact| <= 1e-10, else
  // std::invalid_argument.
  void validate() const;
};

// Built-in problems (std::invalid_argument on unknown name):
//   "sine-product"             A = 0
//   "sine-product-constant-A"  A = (1, 2)
//   "sine-product-linear-A"    A = (y, x)
// all with exact solution sin(pi x) sin(pi y), defined on any rectangle with
// integer corners (default [0,1]^2).
ContinuumProblem catalog_problem(const std::string& name);
ContinuumProblem catalog_problem(const std::string& name, const Rect& domain);
std::vector<std::string> catalog_names();

}  // namespace maglap
