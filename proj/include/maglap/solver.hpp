#pragma once

// Sparse assembly of the magnetic Laplacian and the Dirichlet solve paths:
// a dense Hermitian factorization for moderate sizes and a hand-rolled
// conjugate gradient in the lattice inner product for everything else.

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "maglap/magnetic.hpp"

namespace maglap {

enum class SolveMethod { direct, cg };

struct SolveReport {
  Cochain0 solution;
  SolveMethod method = SolveMethod::direct;
  int iterations = 0;           // 0 for the direct path
  double relative_residual = 0; // |L phi - f| / max(|f|, tiny)
  double energy = 0;            // Re (phi, L phi)
};

// Thrown when the iterative path fails to reach the requested tolerance.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, double last_residual, int iterations)
      : std::runtime_error(what),
        last_residual(last_residual),
        iterations(iterations) {}

  double last_residual;
  int iterations;
};

// Hermitian sparse matrix of -Laplace_A in the row-major unknown ordering
// (k fastest); at most five nonzeros per row.
class AssembledOperator {
 public:
  AssembledOperator(const GridSpec& g, const MagneticPotential& A);

  const GridSpec& grid() const noexcept { return grid_; }
  int dim() const noexcept { return grid_.cells(); }
  const Eigen::SparseMatrix<cplx>& matrix() const noexcept { return matrix_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
  Cochain0 apply(const Cochain0& phi) const;

  // Coordinate-format text dump, one "row col re im" line per stored entry,
  // for external verification.
  void write_coordinate(std::ostream& out) const;

 private:
  GridSpec grid_;
  Eigen::SparseMatrix<cplx> matrix_;
};

AssembledOperator assemble(const GridSpec& g, const MagneticPotential& A);

// Conversions between cochains and solver vectors (row-major, k fastest).
Eigen::VectorXcd to_vector(const Cochain0& phi);
Cochain0 from_vector(const GridSpec& g, const Eigen::VectorXcd& x);

// Solve L phi = f.  The direct path refuses dimensions above 4096 (use cg);
// cg throws SolveError on non-convergence, carrying the last residual.
// max_iterations < 0 selects the default 10*N*M.
SolveReport solve(const AssembledOperator& L, const Cochain0& f,
                  SolveMethod method, double tol = 1e-10, bool jacobi = false,
                  int max_iterations = -1);

// Smallest eigenvalue via a dense Hermitian eigendecomposition
// (dim <= 4096 only).
double min_eigenvalue(const AssembledOperator& L);

// Full eigenvalue list, ascending (same dense path and size limit).
std::vector<double> spectrum(const AssembledOperator& L);

// |L phi - f| in the lattice norm.
double residual_norm(const AssembledOperator& L, const Cochain0& phi,
                     const Cochain0& f);

}  // namespace maglap
