#include "maglap/calculus.hpp"

#include <vector>

namespace maglap {

Cochain1 d(const Cochain0& phi) {
  const GridSpec& g = phi.grid();
  Cochain1 r(g);
  for (int s = 0; s <= g.M(); ++s) {
    for (int k = 0; k <= g.N(); ++k) {
      r.ref_u(k, s) = phi.at(k + 1, s) - phi.at(k, s);
      r.ref_v(k, s) = phi.at(k, s + 1) - phi.at(k, s);
    }
  }
  return r;
}

Cochain2 d(const Cochain1& omega) {
  const GridSpec& g = omega.grid();
  Cochain2 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = (omega.v(k + 1, s) - omega.v(k, s)) -
                    (omega.u(k, s + 1) - omega.u(k, s));
    }
  }
  return r;
}

Cochain0 cup(const Cochain0& a, const Cochain0& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = a.at(k, s) * b.at(k, s);
    }
  }
  return r;
}

Cochain1 cup(const Cochain0& a, const Cochain1& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  Cochain1 r(g);
  for (int s = 0; s <= g.M(); ++s) {
    for (int k = 0; k <= g.N(); ++k) {
      r.ref_u(k, s) = a.at(k, s) * b.u(k, s);
      r.ref_v(k, s) = a.at(k, s) * b.v(k, s);
    }
  }
  return r;
}

Cochain1 cup(const Cochain1& a, const Cochain0& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  Cochain1 r(g);
  for (int s = 0; s <= g.M(); ++s) {
    for (int k = 0; k <= g.N(); ++k) {
      r.ref_u(k, s) = a.u(k, s) * b.at(k + 1, s);
      r.ref_v(k, s) = a.v(k, s) * b.at(k, s + 1);
    }
  }
  return r;
}

Cochain2 cup(const Cochain0& a, const Cochain2& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  Cochain2 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = a.at(k, s) * b.at(k, s);
    }
  }
  return r;
}

Cochain2 cup(const Cochain2& a, const Cochain0& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  Cochain2 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = a.at(k, s) * b.at(k + 1, s + 1);
    }
  }
  return r;
}

Cochain2 cup(const Cochain1& a, const Cochain1& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  Cochain2 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = a.u(k, s) * b.v(k + 1, s) - a.v(k, s) * b.u(k, s + 1);
    }
  }
  return r;
}

Cochain2 star(const Cochain0& phi) {
  const GridSpec& g = phi.grid();
  Cochain2 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = phi.at(k, s);
    }
  }
  return r;
}

Cochain1 star(const Cochain1& omega) {
  const GridSpec& g = omega.grid();
  Cochain1 r(g);
  for (int s = 0; s <= g.M(); ++s) {
    for (int k = 0; k <= g.N(); ++k) {
      r.ref_u(k, s) = -omega.v(k, s - 1);
      r.ref_v(k, s) = omega.u(k - 1, s);
    }
  }
  return r;
}

Cochain0 star(const Cochain2& eta) {
  const GridSpec& g = eta.grid();
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = eta.at(k - 1, s - 1);
    }
  }
  return r;
}

Cochain2 star_inv(const Cochain0& phi) {
  const GridSpec& g = phi.grid();
  Cochain2 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = phi.at(k + 1, s + 1);
    }
  }
  return r;
}

Cochain1 star_inv(const Cochain1& omega) {
  const GridSpec& g = omega.grid();
  Cochain1 r(g);
  for (int s = 0; s <= g.M(); ++s) {
    for (int k = 0; k <= g.N(); ++k) {
      r.ref_u(k, s) = omega.v(k + 1, s);
      r.ref_v(k, s) = -omega.u(k, s + 1);
    }
  }
  return r;
}

Cochain0 star_inv(const Cochain2& eta) {
  const GridSpec& g = eta.grid();
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = eta.at(k, s);
    }
  }
  return r;
}

Cochain0 codifferential(const Cochain1& omega) {
  const GridSpec& g = omega.grid();
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = -(omega.u(k, s) - omega.u(k - 1, s)) -
                    (omega.v(k, s) - omega.v(k, s - 1));
    }
  }
  return r;
}

namespace {

// Dense complex array over an explicit index window with ghost-zero reads;
// lets the star/coboundary stages of the codifferential compositions keep
// components that the fixed cochain storage would clip.
struct Window {
  int klo, khi, slo, shi;
  std::vector<cplx> a;

  Window(int klo, int khi, int slo, int shi)
      : klo(klo),
        khi(khi),
        slo(slo),
        shi(shi),
        a(static_cast<std::size_t>(khi - klo + 1) * (shi - slo + 1), cplx{}) {}

  cplx at(int k, int s) const {
    if (k < klo || k > khi || s < slo || s > shi) return cplx{};
    return a[static_cast<std::size_t>(s - slo) * (khi - klo + 1) + (k - klo)];
  }
  void set(int k, int s, cplx value) {
    a[static_cast<std::size_t>(s - slo) * (khi - klo + 1) + (k - klo)] = value;
  }
};

}  // namespace

Cochain0 codifferential_star_route(const Cochain1& omega) {
  const GridSpec& g = omega.grid();
  const int N = g.N();
  const int M = g.M();

  // Star of a 1-form; components shift up by one index, hence the window.
  Window p(0, N + 1, 0, M + 1);  // x-edge components of star(omega)
  Window q(0, N + 1, 0, M + 1);  // y-edge components
  for (int s = 0; s <= M + 1; ++s) {
    for (int k = 0; k <= N + 1; ++k) {
      p.set(k, s, -omega.v(k, s - 1));
      q.set(k, s, omega.u(k - 1, s));
    }
  }

  // Coboundary of the starred form followed by the inverse star (a plain
  // copy for 2-forms) and the odd-degree sign.
  Cochain0 r(g);
  for (int s = 1; s <= M; ++s) {
    for (int k = 1; k <= N; ++k) {
      const cplx dd =
          (q.at(k + 1, s) - q.at(k, s)) - (p.at(k, s + 1) - p.at(k, s));
      r.ref(k, s) = -dd;
    }
  }
  return r;
}

Cochain1 codifferential(const Cochain2& eta) {
  const GridSpec& g = eta.grid();
  const int N = g.N();
  const int M = g.M();

  // Star of a 2-form lives one index up; keep the full window.
  Window f(1, N + 1, 1, M + 1);
  for (int s = 1; s <= M + 1; ++s) {
    for (int k = 1; k <= N + 1; ++k) {
      f.set(k, s, eta.at(k - 1, s - 1));
    }
  }

  // Coboundary of the starred 0-form on the window, then the inverse star
  // pulls the components back into the stored 1-form range (even degree,
  // positive sign).
  Window du(0, N + 1, 0, M + 1);
  Window dv(0, N + 1, 0, M + 1);
  for (int s = 0; s <= M + 1; ++s) {
    for (int k = 0; k <= N + 1; ++k) {
      du.set(k, s, f.at(k + 1, s) - f.at(k, s));
      dv.set(k, s, f.at(k, s + 1) - f.at(k, s));
    }
  }

  Cochain1 r(g);
  for (int s = 0; s <= M; ++s) {
    for (int k = 0; k <= N; ++k) {
      r.ref_u(k, s) = dv.at(k + 1, s);
      r.ref_v(k, s) = -du.at(k, s + 1);
    }
  }
  return r;
}

cplx inner_product(const Cochain0& a, const Cochain0& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  cplx acc{};
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      acc += a.at(k, s) * std::conj(b.at(k, s));
    }
  }
  return acc;
}

cplx inner_product(const Cochain1& a, const Cochain1& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  cplx acc{};
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      acc += a.u(k, s) * std::conj(b.u(k, s)) +
             a.v(k, s) * std::conj(b.v(k, s));
    }
  }
  return acc;
}

cplx inner_product(const Cochain2& a, const Cochain2& b) {
  const GridSpec& g = a.grid();
  require_same_grid(g, b.grid());
  cplx acc{};
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      acc += a.at(k, s) * std::conj(b.at(k, s));
    }
  }
  return acc;
}

Cochain0 laplace0(const Cochain0& phi) {
  const GridSpec& g = phi.grid();
  Cochain0 r(g);
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      r.ref(k, s) = 4.0 * phi.at(k, s) - phi.at(k + 1, s) - phi.at(k, s + 1) -
                    phi.at(k - 1, s) - phi.at(k, s - 1);
    }
  }
  return r;
}

}  // namespace maglap
