#include "maglap/rng.hpp"

namespace maglap {

Cochain0 random_cochain0(const GridSpec& g, CounterRng& rng) {
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = rng.complex_box();
    }
  }
  return r;
}

Cochain1 random_cochain1(const GridSpec& g, CounterRng& rng,
                         bool extended_layer) {
  Cochain1 r(g);
  const int k0 = extended_layer ? 0 : 1;
  const int s0 = extended_layer ? 0 : 1;
  for (int s = s0; s <= g.M(); ++s) {
    for (int k = k0; k <= g.N(); ++k) {
      r.ref_u(k, s) = rng.complex_box();
      r.ref_v(k, s) = rng.complex_box();
    }
  }
  return r;
}

Cochain2 random_cochain2(const GridSpec& g, CounterRng& rng) {
  Cochain2 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = rng.complex_box();
    }
  }
  return r;
}

Cochain0 random_real_cochain0(const GridSpec& g, CounterRng& rng) {
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = cplx{rng.symmetric(), 0.0};
    }
  }
  return r;
}

MagneticPotential random_potential(const GridSpec& g, CounterRng& rng) {
  MagneticPotential r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref_ax(k, s) = rng.symmetric();
      r.ref_ay(k, s) = rng.symmetric();
    }
  }
  return r;
}

}  // namespace maglap
