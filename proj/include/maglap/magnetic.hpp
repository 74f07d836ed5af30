#pragma once

// Magnetically deformed operators: a real potential 1-form A enters the
// coboundary as d_A = d + i A(.), its formal adjoint as
// delta_A = codifferential - i A*, and the two compose into the positive
// self-adjoint operator delta_A d_A.

#include <vector>

#include "maglap/calculus.hpp"

namespace maglap {

// Real 1-form (ax, ay) with interior components k = 1..N, s = 1..M; reads
// outside return zero.  Realness is enforced by the type.
class MagneticPotential {
 public:
  explicit MagneticPotential(const GridSpec& g);

  const GridSpec& grid() const noexcept { return grid_; }

  double ax(int k, int s) const noexcept {
    return grid_.inside(k, s) ? ax_[grid_.index(k, s)] : 0.0;
  }
  double ay(int k, int s) const noexcept {
    return grid_.inside(k, s) ? ay_[grid_.index(k, s)] : 0.0;
  }
  double& ref_ax(int k, int s);
  double& ref_ay(int k, int s);
  void set_ax(int k, int s, double value) { ref_ax(k, s) = value; }
  void set_ay(int k, int s, double value) { ref_ay(k, s) = value; }

  // Same potential with both components multiplied by `factor` (used to form
  // the h-scaled potential of the difference scheme).
  MagneticPotential scaled(double factor) const;

  // The potential viewed as a complex 1-form: interior components equal
  // (ax, ay), the extended layer is zero.
  Cochain1 as_cochain1() const;

  static MagneticPotential zero(const GridSpec& g) {
    return MagneticPotential(g);
  }
  static MagneticPotential constant(const GridSpec& g, double ax, double ay);

 private:
  GridSpec grid_;
  std::vector<double> ax_;
  std::vector<double> ay_;
};

// phi cup A: 1-form (phi*ax, phi*ay) with zero extended layer.
Cochain1 mul_potential(const Cochain0& phi, const MagneticPotential& A);

// A* omega: 0-form ax*u + ay*v on interior indices.
Cochain0 adjoint_potential(const Cochain1& omega, const MagneticPotential& A);

// d_A phi = d phi + i (phi cup A).
Cochain1 d_magnetic(const Cochain0& phi, const MagneticPotential& A);

// delta_A omega = codifferential(omega) - i A* omega.
Cochain0 delta_magnetic(const Cochain1& omega, const MagneticPotential& A);

// -Laplace_A phi = delta_A(d_A phi), the literal composition.
Cochain0 magnetic_laplacian(const Cochain0& phi, const MagneticPotential& A);

// The same operator assembled term by term:
// laplace0(phi) - i A* d phi + i codifferential(phi cup A) + A*(phi cup A).
// Kept permanently alongside the composition; their agreement is a tested
// identity.
Cochain0 magnetic_laplacian_expanded(const Cochain0& phi,
                                     const MagneticPotential& A);

}  // namespace maglap
