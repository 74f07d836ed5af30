#pragma once

// Difference-scheme realization of the continuum magnetic Dirichlet problem
// and the h-refinement study around it.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "maglap/problems.hpp"
#include "maglap/solver.hpp"
#include "maglap/stepfield.hpp"

namespace maglap {

// Cell averages by a tensor Gauss-Legendre rule (quad_order points per axis).
// Non-finite samples raise std::invalid_argument naming the offending cell.
Cochain0 discretize_scalar(const std::function<cplx(double, double)>& f,
                           const GridSpec& g, int quad_order = 4);
MagneticPotential discretize_oneform(
    const std::function<double(double, double)>& ax,
    const std::function<double(double, double)>& ay, const GridSpec& g,
    int quad_order = 4);

// Difference energy norm: sqrt of the sum over k = 0..N, s = 0..M of
// |phi_{k+1,s} - phi_{k,s}|^2 + |phi_{k,s+1} - phi_{k,s}|^2 (ghost reads).
// Splits as |d phi|^2 over interior indices plus the two boundary sums
// sum_s |phi_{1,s}|^2 + sum_k |phi_{k,1}|^2.
double w_norm(const Cochain0& phi);

// One level of the scheme: the lattice equation with the h-scaled potential
// h*discretize(A) and right side h^2*discretize(f), solved under ghost-zero
// boundary conditions and wrapped as a step field.
std::pair<StepField, SolveReport> solve_dirichlet_h(const ContinuumProblem& p,
                                                    const GridSpec& g,
                                                    SolveMethod method,
                                                    double tol = 1e-10,
                                                    int quad_order = 4,
                                                    int max_iterations = -1);

// L2 distance between a step field and a smooth function, cell-by-cell
// tensor quadrature.
double l2_error_vs(const StepField& f,
                   const std::function<cplx(double, double)>& exact,
                   int quad_order = 4);

// L2(rect) norm of a scalar function on a fixed 64x64 quadrature
// decomposition (used for the a-priori ratio denominators).
double l2_norm_function(const std::function<double(double, double)>& f,
                        const Rect& rect, int quad_order = 4);

struct ConvergenceRow {
  int N = 0;
  int M = 0;
  double h = 0;
  double l2_error = 0;    // NaN when the problem has no exact solution
  double order = 0;       // log2(previous/current error); NaN on first row
  double w_norm = 0;      // energy norm of the solution
  double ratio_bound = 0; // w_norm / (|Re f| + |Im f|)
  int iterations = 0;
  double residual = 0;
};

struct StudyResult {
  std::vector<ConvergenceRow> rows;
  bool complete = true;
  int failed_level = 0;  // level N at which the study aborted
  std::string error;
};

// One row per level (cells per side, strictly increasing).  A failed level
// aborts the study; rows computed before the failure are returned with
// complete = false.  With parallel = true the levels run concurrently; rows
// are ordered by level either way and the numbers do not depend on the flag.
StudyResult convergence_study(const ContinuumProblem& p,
                              const std::vector<int>& levels,
                              SolveMethod method, double tol = 1e-10,
                              bool parallel = false, int quad_order = 4,
                              int max_iterations = -1);

}  // namespace maglap
