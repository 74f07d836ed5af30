#include "maglap/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

namespace maglap {

namespace {

constexpr int kDenseLimit = 4096;
constexpr double kTiny = 1e-300;

// Lattice inner product (phi, psi) = sum phi * conj(psi) on vectors.
cplx ip(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return b.dot(a);  // Eigen conjugates the call target
}

}  // namespace

AssembledOperator::AssembledOperator(const GridSpec& g,
                                     const MagneticPotential& A)
    : grid_(g), matrix_(g.cells(), g.cells()) {
  require_same_grid(g, A.grid());
  const cplx i{0.0, 1.0};
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(5) * g.cells());
  for (int s = 1; s <= g.M(); ++s) {
    for (int k = 1; k <= g.N(); ++k) {
      const int row = g.index(k, s);
      const double ax = A.ax(k, s);
      const double ay = A.ay(k, s);
      trips.emplace_back(row, row, cplx{4.0 + ax * ax + ay * ay, 0.0});
      if (k + 1 <= g.N()) {
        trips.emplace_back(row, g.index(k + 1, s), -1.0 - i * ax);
      }
      if (s + 1 <= g.M()) {
        trips.emplace_back(row, g.index(k, s + 1), -1.0 - i * ay);
      }
      if (k - 1 >= 1) {
        trips.emplace_back(row, g.index(k - 1, s),
                           -1.0 + i * A.ax(k - 1, s));
      }
      if (s - 1 >= 1) {
        trips.emplace_back(row, g.index(k, s - 1),
                           -1.0 + i * A.ay(k, s - 1));
      }
    }
  }
  matrix_.setFromTriplets(trips.begin(), trips.end());
  matrix_.makeCompressed();
}

Eigen::VectorXcd AssembledOperator::apply(const Eigen::VectorXcd& x) const {
  return matrix_ * x;
}

Cochain0 AssembledOperator::apply(const Cochain0& phi) const {
  require_same_grid(grid_, phi.grid());
  return from_vector(grid_, apply(to_vector(phi)));
}

void AssembledOperator::write_coordinate(std::ostream& out) const {
  for (int col = 0; col < matrix_.outerSize(); ++col) {
    for (Eigen::SparseMatrix<cplx>::InnerIterator it(matrix_, col); it; ++it) {
      out << it.row() << ' ' << it.col() << ' ' << it.value().real() << ' '
          << it.value().imag() << '\n';
    }
  }
}

AssembledOperator assemble(const GridSpec& g, const MagneticPotential& A) {
  return AssembledOperator(g, A);
}

Eigen::VectorXcd to_vector(const Cochain0& phi) {
  Eigen::VectorXcd x(phi.grid().cells());
  for (int j = 0; j < x.size(); ++j) x[j] = phi.data()[j];
  return x;
}

Cochain0 from_vector(const GridSpec& g, const Eigen::VectorXcd& x) {
  if (x.size() != g.cells()) {
    throw std::invalid_argument("vector length does not match the grid");
  }
  Cochain0 phi(g);
  for (int j = 0; j < x.size(); ++j) phi.data()[j] = x[j];
  return phi;
}

namespace {

struct CgOutcome {
  Eigen::VectorXcd x;
  int iterations;
  double residual;
};

// Conjugate gradient for the Hermitian positive definite system, optionally
// Jacobi scaled.  Runs in the lattice inner product; the curvature and step
// scalars are real for a Hermitian operator, so only their real parts are
// kept.
CgOutcome cg_solve(const AssembledOperator& L, const Eigen::VectorXcd& b,
                   double tol, bool jacobi, int max_iterations) {
  const double norm_b = b.norm();
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(b.size());
  if (norm_b == 0.0) return {x, 0, 0.0};

  Eigen::VectorXd inv_diag;
  if (jacobi) {
    inv_diag.resize(b.size());
    for (int j = 0; j < b.size(); ++j) {
      inv_diag[j] = 1.0 / L.matrix().coeff(j, j).real();
    }
  }
  auto precondition = [&](const Eigen::VectorXcd& r) -> Eigen::VectorXcd {
    if (!jacobi) return r;
    return inv_diag.cast<cplx>().cwiseProduct(r);
  };

  Eigen::VectorXcd r = b;
  Eigen::VectorXcd z = precondition(r);
  Eigen::VectorXcd p = z;
  double rho = ip(r, z).real();
  double residual = 1.0;

  for (int it = 1; it <= max_iterations; ++it) {
    const Eigen::VectorXcd ap = L.apply(p);
    const double curvature = ip(ap, p).real();
    const double alpha = rho / curvature;
    x += alpha * p;
    r -= alpha * ap;
    residual = r.norm() / norm_b;
    if (residual <= tol) return {x, it, residual};
    z = precondition(r);
    const double rho_next = ip(r, z).real();
    p = z + (rho_next / rho) * p;
    rho = rho_next;
  }
  char msg[128];
  std::snprintf(msg, sizeof msg,
                "cg failed to reach tol %g in %d iterations, last relative "
                "residual %g",
                tol, max_iterations, residual);
  throw SolveError(msg, residual, max_iterations);
}

}  // namespace

SolveReport solve(const AssembledOperator& L, const Cochain0& f,
                  SolveMethod method, double tol, bool jacobi,
                  int max_iterations) {
  require_same_grid(L.grid(), f.grid());
  const Eigen::VectorXcd b = to_vector(f);
  Eigen::VectorXcd x;
  int iterations = 0;

  if (method == SolveMethod::direct) {
    if (L.dim() > kDenseLimit) {
      throw std::invalid_argument(
          "direct path refuses dim > 4096; use SolveMethod::cg");
    }
    const Eigen::MatrixXcd dense(L.matrix());
    x = Eigen::LDLT<Eigen::MatrixXcd>(dense).solve(b);
  } else {
    if (max_iterations < 0) max_iterations = 10 * L.dim();
    CgOutcome out = cg_solve(L, b, tol, jacobi, max_iterations);
    x = std::move(out.x);
    iterations = out.iterations;
  }

  SolveReport report{from_vector(L.grid(), x), method, iterations, 0.0, 0.0};
  const Eigen::VectorXcd lx = L.apply(x);
  report.relative_residual = (lx - b).norm() / std::max(b.norm(), kTiny);
  report.energy = ip(x, lx).real();
  return report;
}

double min_eigenvalue(const AssembledOperator& L) {
  if (L.dim() > kDenseLimit) {
    throw std::invalid_argument("min_eigenvalue: dense path limited to 4096");
  }
  const Eigen::MatrixXcd dense(L.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense,
                                                      Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

std::vector<double> spectrum(const AssembledOperator& L) {
  if (L.dim() > kDenseLimit) {
    throw std::invalid_argument("spectrum: dense path limited to 4096");
  }
  const Eigen::MatrixXcd dense(L.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense,
                                                      Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& vals = eig.eigenvalues();  // ascending
  return {vals.data(), vals.data() + vals.size()};
}

double residual_norm(const AssembledOperator& L, const Cochain0& phi,
                     const Cochain0& f) {
  require_same_grid(phi.grid(), f.grid());
  return (L.apply(to_vector(phi)) - to_vector(f)).norm();
}

}  // namespace maglap
