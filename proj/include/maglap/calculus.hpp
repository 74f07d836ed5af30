#pragma once

// Coboundary, cup product, Hodge star, codifferential, inner product and the
// plain lattice Laplacian.  Degree bookkeeping is carried by the overload
// set: operations that do not exist (d of a 2-form, codifferential of a
// 0-form, cross-degree inner products) do not compile.
//
// Index shift shorthand used below: t(k) = k+1, o(k) = k-1.  All reads obey
// the ghost-zero rule of cochains.hpp.

#include "maglap/cochains.hpp"

namespace maglap {

// Coboundary.  (d phi).u_{k,s} = phi_{t k,s} - phi_{k,s} and
// (d phi).v_{k,s} = phi_{k,t s} - phi_{k,s} on the full extended range;
// (d omega)_{k,s} = (omega.v_{t k,s} - omega.v_{k,s})
//                 - (omega.u_{k,t s} - omega.u_{k,s}) on 1..N x 1..M.
Cochain1 d(const Cochain0& phi);
Cochain2 d(const Cochain1& omega);

// Cup product for every degree pair with p + q <= 2.
Cochain0 cup(const Cochain0& a, const Cochain0& b);
Cochain1 cup(const Cochain0& a, const Cochain1& b);
Cochain1 cup(const Cochain1& a, const Cochain0& b);
Cochain2 cup(const Cochain0& a, const Cochain2& b);
Cochain2 cup(const Cochain2& a, const Cochain0& b);
Cochain2 cup(const Cochain1& a, const Cochain1& b);

// Hodge star and its inverse.  Components shifted outside the stored range
// of the result are dropped; the inverse composed with the star is therefore
// the identity only away from the upper index lines (exact on degree 0).
Cochain2 star(const Cochain0& phi);
Cochain1 star(const Cochain1& omega);
Cochain0 star(const Cochain2& eta);
Cochain2 star_inv(const Cochain0& phi);
Cochain1 star_inv(const Cochain1& omega);
Cochain0 star_inv(const Cochain2& eta);

// Codifferential.  The 1-form overload uses the closed form
// (delta omega)_{k,s} = -(u_{k,s} - u_{o k,s}) - (v_{k,s} - v_{k,o s});
// the 2-form overload evaluates (+1) * star_inv(d(star(eta))) on an
// internally widened index window so no intermediate component is clipped.
Cochain0 codifferential(const Cochain1& omega);
Cochain1 codifferential(const Cochain2& eta);

// (-1) * star_inv(d(star(omega))) for a 1-form, evaluated on the widened
// window.  Agrees with codifferential(omega); kept as an independent route.
Cochain0 codifferential_star_route(const Cochain1& omega);

// Sesquilinear inner product over interior indices 1..N x 1..M, conjugating
// the second argument.  1-forms sum both edge components.
cplx inner_product(const Cochain0& a, const Cochain0& b);
cplx inner_product(const Cochain1& a, const Cochain1& b);
cplx inner_product(const Cochain2& a, const Cochain2& b);

// Five-point Dirichlet Laplacian
// (-L phi)_{k,s} = 4 phi_{k,s} - phi_{t k,s} - phi_{k,t s}
//                - phi_{o k,s} - phi_{k,o s},
// implemented as the direct stencil; equality with
// codifferential(d(phi)) is a tested identity, not an implementation detail.
Cochain0 laplace0(const Cochain0& phi);

}  // namespace maglap
