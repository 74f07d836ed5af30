#include <stdexcept>

#include "doctest.h"
#include "maglap/calculus.hpp"
#include "maglap/chains.hpp"
#include "maglap/rng.hpp"

using namespace maglap;

TEST_CASE("grid geometry and indexing") {
  const GridSpec g = GridSpec::lattice(3, 2);
  CHECK(g.N() == 3);
  CHECK(g.M() == 2);
  CHECK(g.h() == 1.0);
  CHECK(g.cells() == 6);
  CHECK(g.index(1, 1) == 0);
  CHECK(g.index(2, 1) == 1);  // k fastest
  CHECK(g.index(1, 2) == 3);
  CHECK(g.inside(3, 2));
  CHECK(!g.inside(0, 1));
  CHECK(!g.inside(4, 1));

  const GridSpec u = GridSpec::unit_square(4);
  CHECK(u.h() == doctest::Approx(0.25));
  CHECK(u.x_line(0) == doctest::Approx(0.0));
  CHECK(u.x_line(4) == doctest::Approx(1.0));
  CHECK(u.y_line(2) == doctest::Approx(0.5));

  const GridSpec r(4, 2, Rect{0, 0, 2, 1});
  CHECK(r.h() == doctest::Approx(0.5));
  CHECK(r.same_as(GridSpec(4, 2, Rect{0, 0, 2, 1})));
  CHECK(!r.same_as(u));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(GridSpec(0, 1, Rect{0, 0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(1, 0, Rect{0, 0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec(1, 1, Rect{1, 0, 0, 1}), std::invalid_argument);
  // non-square cells: hx = 0.5, hy = 1
  CHECK_THROWS_AS(GridSpec(2, 1, Rect{0, 0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(
      require_same_grid(GridSpec::lattice(2, 2), GridSpec::lattice(3, 2)),
      std::invalid_argument);
}

TEST_CASE("ghost-zero reads, checked writes") {
  const GridSpec g = GridSpec::lattice(2, 3);
  Cochain0 phi(g);
  phi.set(1, 1, {2.0, -1.0});
  CHECK(phi.at(1, 1) == cplx{2.0, -1.0});
  CHECK(phi.at(0, 1) == cplx{});
  CHECK(phi.at(3, 1) == cplx{});
  CHECK(phi.at(1, 4) == cplx{});
  CHECK_THROWS_AS(phi.ref(0, 1), std::out_of_range);
  CHECK_THROWS_AS(phi.ref(3, 1), std::out_of_range);

  Cochain2 eta(g);
  CHECK_THROWS_AS(eta.set(1, 0, 1.0), std::out_of_range);

  Cochain1 omega(g);
  omega.set_u(0, 0, 5.0);  // extended layer is stored
  omega.set_v(2, 3, 7.0);
  CHECK(omega.u(0, 0) == cplx{5.0});
  CHECK(omega.v(2, 3) == cplx{7.0});
  CHECK(omega.u(3, 0) == cplx{});  // k = N+1 is not
  CHECK(omega.v(0, 4) == cplx{});
  CHECK_THROWS_AS(omega.ref_u(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(omega.ref_v(0, 4), std::out_of_range);
}

TEST_CASE("sup norms and distances cover the stored ranges") {
  const GridSpec g = GridSpec::lattice(2, 2);
  Cochain1 a(g);
  a.set_u(0, 0, {3.0, 4.0});  // extended layer counts
  CHECK(sup_norm(a) == doctest::Approx(5.0));
  Cochain1 b(g);
  CHECK(max_abs_diff(a, b) == doctest::Approx(5.0));

  Cochain0 c(g);
  c.set(2, 2, {0.0, -2.0});
  CHECK(sup_norm(c) == doctest::Approx(2.0));
}

TEST_CASE("chains: homogeneity, zero dropping, arithmetic") {
  Chain c = Chain::basis({CellKind::point, 1, 1});
  c.add({CellKind::point, 2, 1}, 2.5);
  CHECK(c.degree() == 0);
  CHECK(c.terms().size() == 2);
  CHECK_THROWS_AS(c.add({CellKind::edge_x, 1, 1}, 1.0), std::invalid_argument);

  c.add({CellKind::point, 1, 1}, -1.0);  // cancels the basis term exactly
  CHECK(c.terms().size() == 1);

  Chain z;
  CHECK(z.empty());
  CHECK(!z.degree().has_value());
  z += c;
  z *= 2.0;
  CHECK(z.terms().at({CellKind::point, 2, 1}) == doctest::Approx(5.0));
  z *= 0.0;
  CHECK(z.empty());
}

TEST_CASE("boundary of edges and cells") {
  const Chain ex = boundary(Chain::basis({CellKind::edge_x, 2, 3}));
  CHECK(ex.terms().size() == 2);
  CHECK(ex.terms().at({CellKind::point, 3, 3}) == doctest::Approx(1.0));
  CHECK(ex.terms().at({CellKind::point, 2, 3}) == doctest::Approx(-1.0));

  const Chain sq = boundary(Chain::basis({CellKind::square, 1, 1}));
  CHECK(sq.terms().size() == 4);
  CHECK(sq.terms().at({CellKind::edge_x, 1, 1}) == doctest::Approx(1.0));
  CHECK(sq.terms().at({CellKind::edge_y, 2, 1}) == doctest::Approx(1.0));
  CHECK(sq.terms().at({CellKind::edge_x, 1, 2}) == doctest::Approx(-1.0));
  CHECK(sq.terms().at({CellKind::edge_y, 1, 1}) == doctest::Approx(-1.0));

  CHECK(boundary(Chain::basis({CellKind::point, 4, 4})).empty());
}

TEST_CASE("boundary of boundary vanishes exactly") {
  for (int s = 1; s <= 4; ++s) {
    for (int k = 1; k <= 4; ++k) {
      CHECK(boundary(boundary(Chain::basis({CellKind::square, k, s}))).empty());
    }
  }
}

TEST_CASE("pairing evaluates coefficients against components") {
  const GridSpec g = GridSpec::lattice(4, 4);
  Cochain0 phi(g);
  phi.set(2, 3, {1.5, -0.5});
  const Chain x23 = Chain::basis({CellKind::point, 2, 3});
  CHECK(pairing(x23, phi) == cplx{1.5, -0.5});

  // outside the stored range the pairing reads ghost zeros
  CHECK(pairing(Chain::basis({CellKind::point, 99, 1}), phi) == cplx{});

  Cochain1 omega(g);
  omega.set_u(1, 2, {0.0, 2.0});
  Chain mix = Chain::basis({CellKind::edge_x, 1, 2});
  mix.add({CellKind::edge_y, 1, 2}, 3.0);
  CHECK(pairing(mix, omega) == cplx{0.0, 2.0});

  CHECK_THROWS_AS(pairing(x23, omega), std::invalid_argument);
  Cochain2 eta(g);
  eta.set(4, 4, 7.0);
  CHECK(pairing(Chain::basis({CellKind::square, 4, 4}), eta) == cplx{7.0});
  CHECK_THROWS_AS(pairing(mix, eta), std::invalid_argument);
}

TEST_CASE("duality <boundary a, alpha> = <a, d alpha> across the margins") {
  const GridSpec g = GridSpec::lattice(3, 4);
  CounterRng rng(11);
  const Cochain0 phi = random_cochain0(g, rng);
  const Cochain1 omega = random_cochain1(g, rng);
  const Cochain1 dphi = d(phi);
  const Cochain2 domega = d(omega);

  for (int s = -1; s <= g.M() + 1; ++s) {
    for (int k = -1; k <= g.N() + 1; ++k) {
      for (CellKind kind : {CellKind::edge_x, CellKind::edge_y}) {
        const Chain a = Chain::basis({kind, k, s});
        CHECK(std::abs(pairing(boundary(a), phi) - pairing(a, dphi)) <= 1e-13);
      }
    }
  }
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const Chain a = Chain::basis({CellKind::square, k, s});
      CHECK(std::abs(pairing(boundary(a), omega) - pairing(a, domega)) <=
            1e-13);
    }
  }
}
