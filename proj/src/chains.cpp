#include "maglap/chains.hpp"

#include <stdexcept>

namespace maglap {

int kind_degree(CellKind kind) noexcept {
  switch (kind) {
    case CellKind::point:
      return 0;
    case CellKind::edge_x:
    case CellKind::edge_y:
      return 1;
    case CellKind::square:
      return 2;
  }
  return -1;  // unreachable
}

Chain Chain::basis(BasisElement e) {
  Chain c;
  c.add(e, 1.0);
  return c;
}

void Chain::add(BasisElement e, double coefficient) {
  if (coefficient == 0.0) return;
  if (!terms_.empty() && terms_.begin()->first.degree() != e.degree()) {
    throw std::invalid_argument("chain terms must share one degree");
  }
  auto [it, inserted] = terms_.try_emplace(e, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

std::optional<int> Chain::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

Chain& Chain::operator*=(double factor) {
  if (factor == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

Chain boundary(const Chain& c) {
  Chain result;
  for (const auto& [e, coef] : c.terms()) {
    switch (e.kind) {
      case CellKind::point:
        break;
      case CellKind::edge_x:
        result.add({CellKind::point, e.k + 1, e.s}, coef);
        result.add({CellKind::point, e.k, e.s}, -coef);
        break;
      case CellKind::edge_y:
        result.add({CellKind::point, e.k, e.s + 1}, coef);
        result.add({CellKind::point, e.k, e.s}, -coef);
        break;
      case CellKind::square:
        // Oriented loop: bottom, right, top (reversed), left (reversed).
        result.add({CellKind::edge_x, e.k, e.s}, coef);
        result.add({CellKind::edge_y, e.k + 1, e.s}, coef);
        result.add({CellKind::edge_x, e.k, e.s + 1}, -coef);
        result.add({CellKind::edge_y, e.k, e.s}, -coef);
        break;
    }
  }
  return result;
}

namespace {

void require_degree(const Chain& c, int degree) {
  auto d = c.degree();
  if (d.has_value() && *d != degree) {
    throw std::invalid_argument("pairing degree mismatch");
  }
}

}  // namespace

cplx pairing(const Chain& c, const Cochain0& alpha) {
  require_degree(c, 0);
  cplx acc{};
  for (const auto& [e, coef] : c.terms()) acc += coef * alpha.at(e.k, e.s);
  return acc;
}

cplx pairing(const Chain& c, const Cochain1& alpha) {
  require_degree(c, 1);
  cplx acc{};
  for (const auto& [e, coef] : c.terms()) {
    acc += coef * (e.kind == CellKind::edge_x ? alpha.u(e.k, e.s)
                                              : alpha.v(e.k, e.s));
  }
  return acc;
}

cplx pairing(const Chain& c, const Cochain2& alpha) {
  require_degree(c, 2);
  cplx acc{};
  for (const auto& [e, coef] : c.terms()) acc += coef * alpha.at(e.k, e.s);
  return acc;
}

}  // namespace maglap
