#include "maglap/identities.hpp"

#include <algorithm>
#include <cmath>

#include "maglap/calculus.hpp"
#include "maglap/chains.hpp"
#include "maglap/magnetic.hpp"
#include "maglap/rng.hpp"

namespace maglap {

namespace {

constexpr double kTiny = 1e-300;

double rel(double diff, double scale) { return diff / std::max(scale, kTiny); }

// sum_s a_{1,s} conj(b_{1,s}) + sum_k a_{k,1} conj(b_{k,1}); the corner term
// appears in both sums by construction.
cplx boundary_sum(const Cochain0& a, const Cochain0& b) {
  const GridSpec& g = a.grid();
  cplx acc{};
  for (int s = 1; s <= g.M(); ++s) acc += a.at(1, s) * std::conj(b.at(1, s));
  for (int k = 1; k <= g.N(); ++k) acc += a.at(k, 1) * std::conj(b.at(k, 1));
  return acc;
}

Cochain1 scaled1(const Cochain1& a, cplx factor) {
  Cochain1 r(a.grid());
  for (int s = 0; s <= a.grid().M(); ++s) {
    for (int k = 0; k <= a.grid().N(); ++k) {
      r.ref_u(k, s) = factor * a.u(k, s);
      r.ref_v(k, s) = factor * a.v(k, s);
    }
  }
  return r;
}

double boundary_of_boundary(const GridSpec& g) {
  double worst = 0;
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const Chain bb =
          boundary(boundary(Chain::basis({CellKind::square, k, s})));
      for (const auto& [e, coef] : bb.terms()) {
        (void)e;
        worst = std::max(worst, std::abs(coef));
      }
    }
  }
  return worst;
}

double pairing_duality(const GridSpec& g, const Cochain0& phi,
                       const Cochain1& omega) {
  double worst = 0;
  const double scale0 = sup_norm(phi);
  const Cochain1 dphi = d(phi);
  for (int s = -1; s <= g.M() + 1; ++s) {
    for (int k = -1; k <= g.N() + 1; ++k) {
      for (CellKind kind : {CellKind::edge_x, CellKind::edge_y}) {
        const Chain a = Chain::basis({kind, k, s});
        const cplx lhs = pairing(boundary(a), phi);
        const cplx rhs = pairing(a, dphi);
        worst = std::max(worst, rel(std::abs(lhs - rhs), scale0));
      }
    }
  }
  const double scale1 = sup_norm(omega);
  const Cochain2 domega = d(omega);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const Chain a = Chain::basis({CellKind::square, k, s});
      const cplx lhs = pairing(boundary(a), omega);
      const cplx rhs = pairing(a, domega);
      worst = std::max(worst, rel(std::abs(lhs - rhs), scale1));
    }
  }
  return worst;
}

double star_definition(const GridSpec& g) {
  // pairing(V_{k,s}, e cup star(e)) = 1 for each basis cochain e whose star
  // image stays inside the stored component range.
  double worst = 0;
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const Chain cell = Chain::basis({CellKind::square, k, s});
      {
        Cochain0 e(g);
        e.ref(k, s) = 1.0;
        worst = std::max(worst, std::abs(pairing(cell, cup(e, star(e))) - 1.0));
      }
      if (k + 1 <= g.N()) {
        Cochain1 e(g);
        e.ref_u(k, s) = 1.0;
        worst = std::max(worst, std::abs(pairing(cell, cup(e, star(e))) - 1.0));
      }
      if (s + 1 <= g.M()) {
        Cochain1 e(g);
        e.ref_v(k, s) = 1.0;
        worst = std::max(worst, std::abs(pairing(cell, cup(e, star(e))) - 1.0));
      }
      if (k + 1 <= g.N() && s + 1 <= g.M()) {
        Cochain2 e(g);
        e.ref(k, s) = 1.0;
        worst = std::max(worst, std::abs(pairing(cell, cup(e, star(e))) - 1.0));
      }
    }
  }
  return worst;
}

double dd_zero(const Cochain0& phi) {
  return rel(sup_norm(d(d(phi))), sup_norm(phi));
}

double cup_leibniz_00(const Cochain0& a, const Cochain0& b) {
  const GridSpec& g = a.grid();
  const Cochain1 lhs = d(cup(a, b));
  const Cochain1 r1 = cup(d(a), b);
  const Cochain1 r2 = cup(a, d(b));
  double diff = 0;
  for (int s = 0; s <= g.M(); ++s) {
    for (int k = 0; k <= g.N(); ++k) {
      diff = std::max({diff,
                       std::abs(lhs.u(k, s) - r1.u(k, s) - r2.u(k, s)),
                       std::abs(lhs.v(k, s) - r1.v(k, s) - r2.v(k, s))});
    }
  }
  return rel(diff, sup_norm(a) * sup_norm(b));
}

double cup_leibniz_01(const Cochain0& a, const Cochain1& b) {
  const GridSpec& g = a.grid();
  const Cochain2 lhs = d(cup(a, b));
  const Cochain2 r1 = cup(d(a), b);
  const Cochain2 r2 = cup(a, d(b));
  double diff = 0;
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      diff = std::max(diff,
                      std::abs(lhs.at(k, s) - r1.at(k, s) - r2.at(k, s)));
    }
  }
  return rel(diff, sup_norm(a) * sup_norm(b));
}

double cup_leibniz_10(const Cochain1& a, const Cochain0& b) {
  const GridSpec& g = b.grid();
  const Cochain2 lhs = d(cup(a, b));
  const Cochain2 r1 = cup(d(a), b);
  const Cochain2 r2 = cup(a, d(b));  // enters with the odd-degree sign
  double diff = 0;
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      diff = std::max(diff,
                      std::abs(lhs.at(k, s) - r1.at(k, s) + r2.at(k, s)));
    }
  }
  return rel(diff, sup_norm(a) * sup_norm(b));
}

double star_roundtrip_deg0(const Cochain0& phi) {
  return rel(max_abs_diff(star_inv(star(phi)), phi), sup_norm(phi));
}

double star_roundtrip_deg1(const Cochain1& omega) {
  const GridSpec& g = omega.grid();
  const Cochain1 r = star_inv(star(omega));
  double diff = 0;
  for (int s = 0; s <= g.M(); ++s) {
    for (int k = 0; k <= g.N(); ++k) {
      const cplx eu = k + 1 <= g.N() ? omega.u(k, s) : cplx{};
      const cplx ev = s + 1 <= g.M() ? omega.v(k, s) : cplx{};
      diff = std::max(
          {diff, std::abs(r.u(k, s) - eu), std::abs(r.v(k, s) - ev)});
    }
  }
  return rel(diff, sup_norm(omega));
}

double star_roundtrip_deg2(const Cochain2& eta) {
  const GridSpec& g = eta.grid();
  const Cochain2 r = star_inv(star(eta));
  double diff = 0;
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const cplx expected =
          (k + 1 <= g.N() && s + 1 <= g.M()) ? eta.at(k, s) : cplx{};
      diff = std::max(diff, std::abs(r.at(k, s) - expected));
    }
  }
  return rel(diff, sup_norm(eta));
}

double delta_routes_1form(const Cochain1& omega) {
  return rel(
      max_abs_diff(codifferential(omega), codifferential_star_route(omega)),
      sup_norm(omega));
}

double potential_adjoint(const Cochain0& phi, const Cochain1& omega,
                         const MagneticPotential& A) {
  const cplx lhs = inner_product(mul_potential(phi, A), omega);
  const cplx rhs = inner_product(phi, adjoint_potential(omega, A));
  return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

double magnetic_adjoint(const Cochain0& phi, const Cochain1& omega_interior,
                        const MagneticPotential& A) {
  const cplx lhs = inner_product(d_magnetic(phi, A), omega_interior);
  const cplx rhs =
      inner_product(phi, delta_magnetic(omega_interior, A));
  return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

double laplacian_paths(const Cochain0& phi, const MagneticPotential& A) {
  return rel(max_abs_diff(magnetic_laplacian(phi, A),
                          magnetic_laplacian_expanded(phi, A)),
             sup_norm(phi));
}

double laplacian_self_adjoint(const Cochain0& phi, const Cochain0& psi,
                              const MagneticPotential& A) {
  const cplx lhs = inner_product(magnetic_laplacian(phi, A), psi);
  const cplx rhs = inner_product(phi, magnetic_laplacian(psi, A));
  return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

double energy_identity(const Cochain0& phi, const MagneticPotential& A) {
  const Cochain1 da = d_magnetic(phi, A);
  const cplx lhs = inner_product(da, da) + boundary_sum(phi, phi);
  const cplx rhs = inner_product(phi, magnetic_laplacian(phi, A));
  return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

double boundary_terms(const Cochain0& phi, const Cochain0& psi,
                      const MagneticPotential& A) {
  const cplx lhs =
      inner_product(d_magnetic(phi, A), d_magnetic(psi, A));
  const cplx rhs = -boundary_sum(phi, psi) +
                   inner_product(phi, magnetic_laplacian(psi, A));
  return rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs)));
}

double delta_leibniz(const Cochain0& phi, const Cochain1& omega,
                     const MagneticPotential& A) {
  const GridSpec& g = phi.grid();
  const Cochain0 lhs = delta_magnetic(cup(phi, omega), A);
  const Cochain0 t = delta_magnetic(omega, A);
  double diff = 0;
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const cplx correction =
          (phi.at(k, s) - phi.at(k - 1, s)) * omega.u(k - 1, s) +
          (phi.at(k, s) - phi.at(k, s - 1)) * omega.v(k, s - 1);
      const cplx rhs = phi.at(k, s) * t.at(k, s) - correction;
      diff = std::max(diff, std::abs(lhs.at(k, s) - rhs));
    }
  }
  return rel(diff, sup_norm(phi) * sup_norm(omega));
}

double sum_of_squares(const Cochain0& phi, const MagneticPotential& A) {
  const GridSpec& g = phi.grid();
  const Cochain1 da = d_magnetic(phi, A);
  const cplx energy = inner_product(da, da);
  double expansion = 0;
  auto sq = [](double x) { return x * x; };
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const cplx dk = phi.at(k + 1, s) - phi.at(k, s);
      const cplx ds = phi.at(k, s + 1) - phi.at(k, s);
      const double re = phi.at(k, s).real();
      const double im = phi.at(k, s).imag();
      expansion += sq(dk.real() - A.ax(k, s) * im) +
                   sq(dk.imag() + A.ax(k, s) * re) +
                   sq(ds.real() - A.ay(k, s) * im) +
                   sq(ds.imag() + A.ay(k, s) * re);
    }
  }
  const double scale = std::max(std::abs(energy), expansion);
  double worst = rel(std::abs(energy - expansion), scale);
  worst = std::max(worst, rel(std::max(0.0, -energy.real()), scale));
  worst = std::max(worst, rel(std::abs(energy.imag()), scale));
  return worst;
}

double real_cross_term(const Cochain0& phi_real, const MagneticPotential& A) {
  const Cochain1 dphi = d(phi_real);
  const Cochain1 i_a_phi = scaled1(mul_potential(phi_real, A), cplx{0, 1});
  const cplx value =
      inner_product(dphi, i_a_phi) + inner_product(i_a_phi, dphi);
  return rel(std::abs(value),
             std::max(sup_norm(dphi), sup_norm(i_a_phi)));
}

}  // namespace

std::vector<IdentityResult> run_identity_suite(const GridSpec& g, int trials,
                                               std::uint64_t seed) {
  CounterRng rng(seed);

  std::vector<IdentityResult> out = {
      {"boundary_of_boundary", 0, 1e-13}, {"pairing_duality", 0, 1e-13},
      {"dd_zero", 0, 1e-13},              {"cup_leibniz_00", 0, 1e-12},
      {"cup_leibniz_01", 0, 1e-12},       {"cup_leibniz_10", 0, 1e-12},
      {"star_definition", 0, 1e-12},      {"star_roundtrip_deg0", 0, 1e-13},
      {"star_roundtrip_deg1", 0, 1e-13},  {"star_roundtrip_deg2", 0, 1e-13},
      {"delta_routes_1form", 0, 1e-12},   {"potential_adjoint", 0, 1e-12},
      {"magnetic_adjoint", 0, 1e-12},     {"laplacian_paths", 0, 1e-13},
      {"laplacian_self_adjoint", 0, 1e-12}, {"energy_identity", 0, 1e-12},
      {"boundary_terms", 0, 1e-12},       {"delta_leibniz", 0, 1e-12},
      {"sum_of_squares", 0, 1e-12},       {"real_cross_term", 0, 1e-13},
  };
  auto track = [&out](const std::string& name, double residual) {
    for (IdentityResult& r : out) {
      if (r.name == name) {
        r.max_residual = std::max(r.max_residual, residual);
        return;
      }
    }
  };

  track("boundary_of_boundary", boundary_of_boundary(g));
  track("star_definition", star_definition(g));

  for (int trial = 0; trial < trials; ++trial) {
    const Cochain0 phi = random_cochain0(g, rng);
    const Cochain0 psi = random_cochain0(g, rng);
    const Cochain1 omega = random_cochain1(g, rng, true);
    const Cochain1 omega_interior = random_cochain1(g, rng, false);
    const Cochain2 eta = random_cochain2(g, rng);
    const MagneticPotential A = random_potential(g, rng);
    const Cochain0 phi_real = random_real_cochain0(g, rng);

    track("pairing_duality", pairing_duality(g, phi, omega));
    track("dd_zero", dd_zero(phi));
    track("cup_leibniz_00", cup_leibniz_00(phi, psi));
    track("cup_leibniz_01", cup_leibniz_01(phi, omega));
    track("cup_leibniz_10", cup_leibniz_10(omega, phi));
    track("star_roundtrip_deg0", star_roundtrip_deg0(phi));
    track("star_roundtrip_deg1", star_roundtrip_deg1(omega));
    track("star_roundtrip_deg2", star_roundtrip_deg2(eta));
    track("delta_routes_1form", delta_routes_1form(omega));
    track("potential_adjoint", potential_adjoint(phi, omega, A));
    track("magnetic_adjoint", magnetic_adjoint(phi, omega_interior, A));
    track("laplacian_paths", laplacian_paths(phi, A));
    track("laplacian_self_adjoint", laplacian_self_adjoint(phi, psi, A));
    track("energy_identity", energy_identity(phi, A));
    track("boundary_terms", boundary_terms(phi, psi, A));
    track("delta_leibniz", delta_leibniz(phi, omega, A));
    track("sum_of_squares", sum_of_squares(phi, A));
    track("real_cross_term", real_cross_term(phi_real, A));
  }
  return out;
}

std::vector<IdentityResult> run_identity_suite(
    const std::vector<GridSpec>& grids, int trials, std::uint64_t seed) {
  std::vector<IdentityResult> merged;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    const std::vector<IdentityResult> one =
        run_identity_suite(grids[i], trials, seed + 1000003ull * i);
    if (merged.empty()) {
      merged = one;
    } else {
      for (std::size_t j = 0; j < merged.size(); ++j) {
        merged[j].max_residual =
            std::max(merged[j].max_residual, one[j].max_residual);
      }
    }
  }
  return merged;
}

}  // namespace maglap
