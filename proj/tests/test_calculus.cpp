#include <cmath>

#include "doctest.h"
#include "maglap/calculus.hpp"
#include "maglap/rng.hpp"

using namespace maglap;

namespace {

// residual of a two-route equality, scaled by the data magnitude
double rel(double diff, double scale) { return diff / std::max(scale, 1.0); }

}  // namespace

TEST_CASE("coboundary of a 0-form, including the extended layer") {
  const GridSpec g = GridSpec::lattice(2, 2);
  Cochain0 phi(g);
  phi.set(1, 1, 1.0);
  phi.set(2, 1, 3.0);
  phi.set(1, 2, 5.0);
  phi.set(2, 2, 7.0);

  const Cochain1 w = d(phi);
  CHECK(w.u(1, 1) == cplx{2.0});   // 3 - 1
  CHECK(w.u(2, 1) == cplx{-3.0});  // ghost beyond k = N
  CHECK(w.u(0, 1) == cplx{1.0});   // extended layer carries phi_{1,s}
  CHECK(w.u(0, 0) == cplx{});
  CHECK(w.v(1, 1) == cplx{4.0});   // 5 - 1
  CHECK(w.v(1, 2) == cplx{-5.0});
  CHECK(w.v(0, 1) == cplx{});
  CHECK(w.v(2, 2) == cplx{-7.0});
}

TEST_CASE("coboundary of a 1-form: curl stencil and ghost columns") {
  const GridSpec g = GridSpec::lattice(3, 3);
  Cochain1 w(g);
  for (int s = 0; s <= 3; ++s) {
    for (int k = 0; k <= 3; ++k) w.set_v(k, s, static_cast<double>(k));
  }
  const Cochain2 dw = d(w);
  for (int s = 1; s <= 3; ++s) {
    CHECK(dw.at(1, s) == cplx{1.0});
    CHECK(dw.at(2, s) == cplx{1.0});
    CHECK(dw.at(3, s) == cplx{-3.0});  // v_{4,s} is a ghost zero
  }
}

TEST_CASE("d of d vanishes") {
  CounterRng rng(3);
  for (int n : {1, 2, 5}) {
    const GridSpec g = GridSpec::lattice(n, n + 1);
    for (int t = 0; t < 10; ++t) {
      const Cochain0 phi = random_cochain0(g, rng);
      CHECK(rel(sup_norm(d(d(phi))), sup_norm(phi)) <= 1e-13);
    }
  }
}

TEST_CASE("cup products: frozen values") {
  const GridSpec g = GridSpec::lattice(3, 3);

  Cochain0 phi(g);
  phi.set(2, 2, 3.0);
  phi.set(2, 1, 4.0);
  Cochain1 w(g);
  w.set_u(2, 2, 5.0);
  w.set_u(1, 1, 2.0);

  // 0 cup 0 is pointwise
  Cochain0 psi(g);
  psi.set(2, 2, {0.0, 2.0});
  CHECK(cup(phi, psi).at(2, 2) == cplx{0.0, 6.0});

  // 0 cup 1 multiplies at the shared corner
  CHECK(cup(phi, w).u(2, 2) == cplx{15.0});
  CHECK(cup(phi, w).u(1, 1) == cplx{});  // phi_{1,1} = 0

  // 1 cup 0 reads the far endpoint
  CHECK(cup(w, phi).u(1, 1) == cplx{8.0});   // u_{1,1} phi_{2,1}
  CHECK(cup(w, phi).u(2, 2) == cplx{});      // phi_{3,2} = 0
  Cochain1 wv(g);
  wv.set_v(2, 1, 6.0);
  CHECK(cup(wv, phi).v(2, 1) == cplx{18.0});  // v_{2,1} phi_{2,2}

  // 0 cup 2 is pointwise
  Cochain2 eta(g);
  eta.set(1, 1, 3.0);
  CHECK(cup(phi, eta).at(1, 1) == cplx{});  // phi_{1,1} = 0
  eta.set(2, 2, 2.0);
  CHECK(cup(phi, eta).at(2, 2) == cplx{6.0});
}

TEST_CASE("2 cup 0 reads the opposite corner") {
  const GridSpec g = GridSpec::lattice(2, 2);
  Cochain2 eta(g);
  eta.set(1, 1, 3.0);
  eta.set(2, 2, 2.0);
  Cochain0 phi(g);
  phi.set(2, 2, 5.0);
  CHECK(cup(eta, phi).at(1, 1) == cplx{15.0});  // eta_{1,1} phi_{2,2}
  CHECK(cup(eta, phi).at(2, 2) == cplx{});      // phi_{3,3} is a ghost zero
}

TEST_CASE("1 cup 1 antisymmetric combination") {
  const GridSpec g = GridSpec::lattice(2, 2);
  Cochain1 a(g), b(g);
  a.set_u(1, 1, 1.0);
  a.set_v(1, 1, 3.0);
  b.set_v(2, 1, 2.0);
  b.set_u(1, 2, 1.0);
  // u_{1,1} b.v_{2,1} - v_{1,1} b.u_{1,2}
  CHECK(cup(a, b).at(1, 1) == cplx{-1.0});
}

TEST_CASE("cup with the interior constant 1 is the identity away from the top lines") {
  const GridSpec g = GridSpec::lattice(3, 2);
  Cochain0 one(g);
  for (int s = 1; s <= g.M(); ++s)
    for (int k = 1; k <= g.N(); ++k) one.set(k, s, 1.0);
  CounterRng rng(5);
  const Cochain1 w = random_cochain1(g, rng);

  const Cochain1 left = cup(one, w);   // zero on the extended layer
  const Cochain1 right = cup(w, one);  // zero on the k = N / s = M lines
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      CHECK(left.u(k, s) == w.u(k, s));
      CHECK(left.v(k, s) == w.v(k, s));
      if (k < g.N()) CHECK(right.u(k, s) == w.u(k, s));
      if (s < g.M()) CHECK(right.v(k, s) == w.v(k, s));
    }
  }
  CHECK(left.u(0, 1) == cplx{});
  CHECK(right.u(g.N(), 1) == cplx{});
  CHECK(right.v(1, g.M()) == cplx{});
}

TEST_CASE("cup Leibniz across degrees") {
  CounterRng rng(17);
  const GridSpec g = GridSpec::lattice(4, 3);
  for (int t = 0; t < 20; ++t) {
    const Cochain0 a = random_cochain0(g, rng);
    const Cochain0 b = random_cochain0(g, rng);
    const Cochain1 w = random_cochain1(g, rng);
    const double scale = 1.0;

    const Cochain1 l00 = d(cup(a, b));
    const Cochain1 r1 = cup(d(a), b);
    const Cochain1 r2 = cup(a, d(b));
    double diff = 0;
    for (int s = 0; s <= g.M(); ++s) {
      for (int k = 0; k <= g.N(); ++k) {
        diff = std::max({diff,
                         std::abs(l00.u(k, s) - r1.u(k, s) - r2.u(k, s)),
                         std::abs(l00.v(k, s) - r1.v(k, s) - r2.v(k, s))});
      }
    }
    CHECK(rel(diff, scale) <= 1e-12);

    const Cochain2 l01 = d(cup(a, w));
    const Cochain2 q1 = cup(d(a), w);
    const Cochain2 q2 = cup(a, d(w));
    const Cochain2 l10 = d(cup(w, a));
    const Cochain2 p1 = cup(d(w), a);
    const Cochain2 p2 = cup(w, d(a));
    for (int s = 1; s <= g.M(); ++s) {
      for (int k = 1; k <= g.N(); ++k) {
        CHECK(std::abs(l01.at(k, s) - q1.at(k, s) - q2.at(k, s)) <= 1e-12);
        CHECK(std::abs(l10.at(k, s) - p1.at(k, s) + p2.at(k, s)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("hodge star: frozen component moves") {
  const GridSpec g = GridSpec::lattice(3, 3);

  Cochain0 phi(g);
  phi.set(2, 3, {1.0, 1.0});
  CHECK(star(phi).at(2, 3) == cplx{1.0, 1.0});  // degree 0: copy

  Cochain1 w(g);
  w.set_u(1, 1, 7.0);
  w.set_v(2, 2, 4.0);
  const Cochain1 sw = star(w);
  CHECK(sw.v(2, 1) == cplx{7.0});    // u_{k,s} lands at v_{k+1,s}
  CHECK(sw.u(2, 3) == cplx{-4.0});   // v_{k,s} lands at -u_{k,s+1}
  CHECK(sw.u(1, 1) == cplx{});
  CHECK(sw.v(1, 1) == cplx{});

  Cochain2 eta(g);
  eta.set(1, 1, 9.0);
  CHECK(star(eta).at(2, 2) == cplx{9.0});
  CHECK(star(eta).at(1, 1) == cplx{});  // eta_{0,0} is a ghost zero

  // inverse star moves the other way
  Cochain0 p2(g);
  p2.set(2, 2, 6.0);
  CHECK(star_inv(p2).at(1, 1) == cplx{6.0});
  Cochain1 rho(g);
  rho.set_v(2, 1, 3.0);
  rho.set_u(1, 2, 5.0);
  CHECK(star_inv(rho).u(1, 1) == cplx{3.0});
  CHECK(star_inv(rho).v(1, 1) == cplx{-5.0});
  Cochain2 e2(g);
  e2.set(3, 2, 4.0);
  CHECK(star_inv(e2).at(3, 2) == cplx{4.0});  // degree 2: copy
}

TEST_CASE("star components shifted outside the stored range are dropped") {
  const GridSpec g = GridSpec::lattice(2, 2);
  Cochain1 w(g);
  w.set_u(2, 1, 1.0);  // would land at v_{3,1}, beyond k = N
  w.set_v(1, 2, 1.0);  // would land at -u_{1,3}, beyond s = M
  CHECK(sup_norm(star(w)) == 0.0);
}

TEST_CASE("star roundtrips: exact on degree 0, masked on degrees 1 and 2") {
  CounterRng rng(23);
  const GridSpec g = GridSpec::lattice(4, 3);
  for (int t = 0; t < 10; ++t) {
    const Cochain0 phi = random_cochain0(g, rng);
    CHECK(max_abs_diff(star_inv(star(phi)), phi) == 0.0);

    const Cochain1 w = random_cochain1(g, rng);
    const Cochain1 r = star_inv(star(w));
    for (int s = 0; s <= g.M(); ++s) {
      for (int k = 0; k <= g.N(); ++k) {
        const cplx eu = k + 1 <= g.N() ? w.u(k, s) : cplx{};
        const cplx ev = s + 1 <= g.M() ? w.v(k, s) : cplx{};
        CHECK(r.u(k, s) == eu);
        CHECK(r.v(k, s) == ev);
      }
    }

    const Cochain2 eta = random_cochain2(g, rng);
    const Cochain2 q = star_inv(star(eta));
    for (int s = 1; s <= g.M(); ++s) {
      for (int k = 1; k <= g.N(); ++k) {
        const cplx expected =
            (k + 1 <= g.N() && s + 1 <= g.M()) ? eta.at(k, s) : cplx{};
        CHECK(q.at(k, s) == expected);
      }
    }
  }
}

TEST_CASE("codifferential closed form equals the star route") {
  CounterRng rng(29);
  for (int n : {1, 3, 6}) {
    const GridSpec g = GridSpec::lattice(n, 7 - n);
    for (int t = 0; t < 10; ++t) {
      const Cochain1 w = random_cochain1(g, rng);
      CHECK(rel(max_abs_diff(codifferential(w), codifferential_star_route(w)),
                sup_norm(w)) <= 1e-13);
    }
  }
}

TEST_CASE("codifferential of a 1-form: frozen stencil") {
  const GridSpec g = GridSpec::lattice(3, 3);
  Cochain1 w(g);
  w.set_u(2, 2, 1.0);
  const Cochain0 dl = codifferential(w);
  CHECK(dl.at(2, 2) == cplx{-1.0});  // -(u_{k,s} - u_{k-1,s})
  CHECK(dl.at(3, 2) == cplx{1.0});
  CHECK(dl.at(1, 2) == cplx{});
}

TEST_CASE("codifferential of a 2-form against its closed form") {
  CounterRng rng(31);
  const GridSpec g = GridSpec::lattice(4, 4);
  for (int t = 0; t < 10; ++t) {
    const Cochain2 eta = random_cochain2(g, rng);
    const Cochain1 r = codifferential(eta);
    for (int s = 0; s <= g.M(); ++s) {
      for (int k = 0; k <= g.N(); ++k) {
        const cplx eu = eta.at(k, s) - eta.at(k, s - 1);
        const cplx ev = -(eta.at(k, s) - eta.at(k - 1, s));
        CHECK(std::abs(r.u(k, s) - eu) <= 1e-14);
        CHECK(std::abs(r.v(k, s) - ev) <= 1e-14);
      }
    }
  }
}

TEST_CASE("adjointness of d and the codifferential on interior 1-forms") {
  CounterRng rng(37);
  const GridSpec g = GridSpec::lattice(5, 4);
  for (int t = 0; t < 20; ++t) {
    const Cochain0 phi = random_cochain0(g, rng);
    const Cochain1 w = random_cochain1(g, rng, /*extended_layer=*/false);
    const cplx lhs = inner_product(d(phi), w);
    const cplx rhs = inner_product(phi, codifferential(w));
    CHECK(rel(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs))) <=
          1e-12);
  }
}

TEST_CASE("inner products: frozen values and conjugate symmetry") {
  const GridSpec g = GridSpec::lattice(2, 2);
  Cochain0 ones(g);
  for (int s = 1; s <= 2; ++s)
    for (int k = 1; k <= 2; ++k) ones.set(k, s, 1.0);
  CHECK(inner_product(ones, ones) == cplx{4.0});

  Cochain0 phi(g);
  phi.set(1, 1, 3.0);
  phi.set(2, 1, 4.0);
  CHECK(inner_product(phi, phi) == cplx{25.0});

  Cochain1 w(g);
  w.set_u(0, 0, 100.0);  // extended layer must not contribute
  w.set_u(1, 1, {0.0, 1.0});
  w.set_v(2, 2, {2.0, 0.0});
  CHECK(inner_product(w, w) == cplx{5.0});

  CounterRng rng(41);
  const Cochain0 a = random_cochain0(g, rng);
  const Cochain0 b = random_cochain0(g, rng);
  CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) <=
        1e-15);
  // sesquilinearity: (i a, b) = i (a, b)
  Cochain0 ia(g);
  for (int s = 1; s <= 2; ++s)
    for (int k = 1; k <= 2; ++k) ia.set(k, s, cplx{0, 1} * a.at(k, s));
  CHECK(std::abs(inner_product(ia, b) - cplx{0, 1} * inner_product(a, b)) <=
        1e-15);
}

TEST_CASE("five-point laplacian: stencil and factorization through d") {
  const GridSpec g = GridSpec::lattice(3, 3);
  Cochain0 delta(g);
  delta.set(2, 2, 1.0);
  const Cochain0 l = laplace0(delta);
  CHECK(l.at(2, 2) == cplx{4.0});
  CHECK(l.at(1, 2) == cplx{-1.0});
  CHECK(l.at(3, 2) == cplx{-1.0});
  CHECK(l.at(2, 1) == cplx{-1.0});
  CHECK(l.at(2, 3) == cplx{-1.0});
  CHECK(l.at(1, 1) == cplx{});

  // the Dirichlet condition is the ghost zero: corners keep the full 4
  Cochain0 corner(g);
  corner.set(1, 1, 1.0);
  CHECK(laplace0(corner).at(1, 1) == cplx{4.0});

  CounterRng rng(43);
  for (int t = 0; t < 10; ++t) {
    const Cochain0 phi = random_cochain0(g, rng);
    CHECK(rel(max_abs_diff(laplace0(phi), codifferential(d(phi))),
              sup_norm(phi)) <= 1e-13);
  }
}
