#include "maglap/stepfield.hpp"

#include <cmath>

namespace maglap {

StepField StepField::from_cochain(const Cochain0& phi) {
  StepField f(phi.grid());
  f.values_ = phi;
  return f;
}

cplx StepField::eval(double x, double y) const noexcept {
  const GridSpec& g = grid();
  const int k = static_cast<int>(std::floor((x - g.box().a1) / g.h())) + 1;
  const int s = static_cast<int>(std::floor((y - g.box().b1) / g.h())) + 1;
  return values_.at(k, s);
}

double StepField::l2_norm() const {
  double acc = 0;
  for (const cplx& z : values_.data()) acc += std::norm(z);
  return grid().h() * std::sqrt(acc);
}

cplx steklov_eval(const StepField& f, double x, double y) {
  const GridSpec& g = f.grid();
  const double xi = (x - g.box().a1) / g.h();
  const double yj = (y - g.box().b1) / g.h();
  const double fx = std::floor(xi);
  const double fy = std::floor(yj);
  const int k0 = static_cast<int>(fx) + 1;
  const int s0 = static_cast<int>(fy) + 1;
  const double tx = xi - fx;
  const double ty = yj - fy;
  // The window is one cell wide, so it meets at most two cells per axis with
  // overlap fractions (1-t, t); the mean is exact, no quadrature involved.
  return (1 - tx) * (1 - ty) * f.value(k0, s0) +
         tx * (1 - ty) * f.value(k0 + 1, s0) +
         (1 - tx) * ty * f.value(k0, s0 + 1) +
         tx * ty * f.value(k0 + 1, s0 + 1);
}

std::pair<StepField, StepField> difference_d(const StepField& f) {
  const GridSpec& g = f.grid();
  StepField u(g);
  StepField v(g);
  const double inv_h = 1.0 / g.h();
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      u.ref(k, s) = inv_h * (f.value(k + 1, s) - f.value(k, s));
      v.ref(k, s) = inv_h * (f.value(k, s + 1) - f.value(k, s));
    }
  }
  return {u, v};
}

}  // namespace maglap
