#include "maglap/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace maglap {

void ContinuumProblem::validate() const {
  if (!rhs) throw std::invalid_argument("problem '" + name + "' has no rhs");
  if (!(domain.a1 < domain.a2) || !(domain.b1 < domain.b2)) {
    throw std::invalid_argument("problem '" + name + "': bad domain");
  }
  if (!exact) return;
  const int samples = 64;
  for (int i = 0; i < samples; ++i) {
    const double t = (i + 0.5) / samples;
    const double x = domain.a1 + t * (domain.a2 - domain.a1);
    const double y = domain.b1 + t * (domain.b2 - domain.b1);
    for (const cplx z : {exact(x, domain.b1), exact(x, domain.b2),
                         exact(domain.a1, y), exact(domain.a2, y)}) {
      if (std::abs(z) > 1e-10) {
        throw std::invalid_argument(
            "problem '" + name + "': exact solution does not vanish on the boundary");
      }
    }
  }
}

namespace {

constexpr double kPi = 3.14159265358979323846;

cplx sine_product(double x, double y) {
  return {std::sin(kPi * x) * std::sin(kPi * y), 0.0};
}

double sp_dx(double x, double y) {
  return kPi * std::cos(kPi * x) * std::sin(kPi * y);
}

double sp_dy(double x, double y) {
  return kPi * std::sin(kPi * x) * std::cos(kPi * y);
}

// Right side of the continuum problem for phi = sine_product and potential
// A = (ax, ay) with div A = 0:
//   f = -Lap phi + |A|^2 phi - 2 i (ax dphi/dx + ay dphi/dy).
cplx manufactured_rhs(double x, double y, double ax, double ay) {
  const double phi = sine_product(x, y).real();
  const double lap = 2.0 * kPi * kPi * phi;
  const double drift = ax * sp_dx(x, y) + ay * sp_dy(x, y);
  return {lap + (ax * ax + ay * ay) * phi, -2.0 * drift};
}

}  // namespace

ContinuumProblem catalog_problem(const std::string& name, const Rect& domain) {
  ContinuumProblem p;
  p.name = name;
  p.domain = domain;
  p.exact = sine_product;
  if (name == "sine-product") {
    p.pot_x = [](double, double) { return 0.0; };
    p.pot_y = [](double, double) { return 0.0; };
    p.rhs = [](double x, double y) { return manufactured_rhs(x, y, 0, 0); };
  } else if (name == "sine-product-constant-A") {
    p.pot_x = [](double, double) { return 1.0; };
    p.pot_y = [](double, double) { return 2.0; };
    p.rhs = [](double x, double y) { return manufactured_rhs(x, y, 1, 2); };
  } else if (name == "sine-product-linear-A") {
    // A = (y, x) is divergence free, so the same rhs formula applies with
    // the pointwise potential values.
    p.pot_x = [](double, double y) { return y; };
    p.pot_y = [](double x, double) { return x; };
    p.rhs = [](double x, double y) { return manufactured_rhs(x, y, y, x); };
  } else {
    throw std::invalid_argument("unknown problem '" + name + "'");
  }
  return p;
}

ContinuumProblem catalog_problem(const std::string& name) {
  return catalog_problem(name, Rect{0.0, 0.0, 1.0, 1.0});
}

std::vector<std::string> catalog_names() {
  return {"sine-product", "sine-product-constant-A", "sine-product-linear-A"};
}

}  // namespace maglap
