#pragma once

// Formal chains over the lattice basis (points, edges, cells) together with
// the boundary operator and the chain/cochain pairing.  Mostly test
// scaffolding: the duality that defines the coboundary is checked against
// these objects.

#include <compare>
#include <map>
#include <optional>

#include "maglap/cochains.hpp"

namespace maglap {

enum class CellKind { point, edge_x, edge_y, square };

// Dimension of the basis element carried by each kind.
int kind_degree(CellKind kind) noexcept;

struct BasisElement {
  CellKind kind;
  int k;
  int s;

  int degree() const noexcept { return kind_degree(kind); }
  auto operator<=>(const BasisElement&) const = default;
};

// Homogeneous real linear combination of basis elements.  Terms with a zero
// coefficient are dropped; mixing degrees throws std::invalid_argument.
class Chain {
 public:
  Chain() = default;
  static Chain basis(BasisElement e);

  void add(BasisElement e, double coefficient);
  const std::map<BasisElement, double>& terms() const noexcept {
    return terms_;
  }
  bool empty() const noexcept { return terms_.empty(); }
  // Degree of the (homogeneous) chain; empty for the zero chain.
  std::optional<int> degree() const noexcept;

  Chain& operator+=(const Chain& other);
  Chain& operator*=(double factor);

 private:
  std::map<BasisElement, double> terms_;
};

// Boundary of a chain: points map to zero, edges to endpoint differences,
// cells to their oriented edge loop.
Chain boundary(const Chain& c);

// <chain, cochain> pairing; the cochain degree must match the chain degree
// (std::invalid_argument otherwise).  Indices outside the stored range
// contribute ghost zeros.
cplx pairing(const Chain& c, const Cochain0& alpha);
cplx pairing(const Chain& c, const Cochain1& alpha);
cplx pairing(const Chain& c, const Cochain2& alpha);

}  // namespace maglap
