#include "maglap/magnetic.hpp"

#include <stdexcept>

namespace maglap {

MagneticPotential::MagneticPotential(const GridSpec& g)
    : grid_(g), ax_(g.cells(), 0.0), ay_(g.cells(), 0.0) {}

double& MagneticPotential::ref_ax(int k, int s) {
  if (!grid_.inside(k, s)) {
    throw std::out_of_range("potential write outside the interior range");
  }
  return ax_[grid_.index(k, s)];
}

double& MagneticPotential::ref_ay(int k, int s) {
  if (!grid_.inside(k, s)) {
    throw std::out_of_range("potential write outside the interior range");
  }
  return ay_[grid_.index(k, s)];
}

MagneticPotential MagneticPotential::scaled(double factor) const {
  MagneticPotential r(grid_);
  for (std::size_t i = 0; i < ax_.size(); ++i) {
    r.ax_[i] = factor * ax_[i];
    r.ay_[i] = factor * ay_[i];
  }
  return r;
}

Cochain1 MagneticPotential::as_cochain1() const {
  Cochain1 r(grid_);
  for (int s = 1; s <= grid_.M(); ++s) {
    for (int k = 1; k <= grid_.N(); ++k) {
      r.ref_u(k, s) = ax(k, s);
      r.ref_v(k, s) = ay(k, s);
    }
  }
  return r;
}

MagneticPotential MagneticPotential::constant(const GridSpec& g, double ax,
                                              double ay) {
  MagneticPotential r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.set_ax(k, s, ax);
      r.set_ay(k, s, ay);
    }
  }
  return r;
}

Cochain1 mul_potential(const Cochain0& phi, const MagneticPotential& A) {
  const GridSpec& g = phi.grid();
  require_same_grid(g, A.grid());
  Cochain1 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref_u(k, s) = phi.at(k, s) * A.ax(k, s);
      r.ref_v(k, s) = phi.at(k, s) * A.ay(k, s);
    }
  }
  return r;
}

Cochain0 adjoint_potential(const Cochain1& omega, const MagneticPotential& A) {
  const GridSpec& g = omega.grid();
  require_same_grid(g, A.grid());
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = A.ax(k, s) * omega.u(k, s) + A.ay(k, s) * omega.v(k, s);
    }
  }
  return r;
}

Cochain1 d_magnetic(const Cochain0& phi, const MagneticPotential& A) {
  require_same_grid(phi.grid(), A.grid());
  const cplx i{0.0, 1.0};
  const GridSpec& g = phi.grid();
  Cochain1 r = d(phi);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref_u(k, s) += i * phi.at(k, s) * A.ax(k, s);
      r.ref_v(k, s) += i * phi.at(k, s) * A.ay(k, s);
    }
  }
  return r;
}

Cochain0 delta_magnetic(const Cochain1& omega, const MagneticPotential& A) {
  require_same_grid(omega.grid(), A.grid());
  const cplx i{0.0, 1.0};
  const GridSpec& g = omega.grid();
  Cochain0 r = codifferential(omega);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) -= i * (A.ax(k, s) * omega.u(k, s) +
                          A.ay(k, s) * omega.v(k, s));
    }
  }
  return r;
}

Cochain0 magnetic_laplacian(const Cochain0& phi, const MagneticPotential& A) {
  return delta_magnetic(d_magnetic(phi, A), A);
}

Cochain0 magnetic_laplacian_expanded(const Cochain0& phi,
                                     const MagneticPotential& A) {
  require_same_grid(phi.grid(), A.grid());
  const cplx i{0.0, 1.0};
  const GridSpec& g = phi.grid();

  Cochain0 r = laplace0(phi);
  const Cochain0 t1 = adjoint_potential(d(phi), A);
  const Cochain1 aphi = mul_potential(phi, A);
  const Cochain0 t2 = codifferential(aphi);
  const Cochain0 t3 = adjoint_potential(aphi, A);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) += -i * t1.at(k, s) + i * t2.at(k, s) + t3.at(k, s);
    }
  }
  return r;
}

}  // namespace maglap
