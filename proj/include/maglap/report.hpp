#pragma once

// Deterministic text emission: fixed column order, 17-significant-digit
// floats, LF line endings.  Byte-identical output for identical inputs is a
// tested contract.

#include <string>
#include <vector>

#include "maglap/approximation.hpp"
#include "maglap/identities.hpp"

namespace maglap {

// %.17g with NaN mapped to an empty field (CSV) or null (JSON).
std::string format_double(double x);

// Header exactly: N,h,l2_error,order,w_norm,ratio_bound,iterations,residual
// Throws std::invalid_argument on an empty row set.
std::string emit_study_csv(const std::vector<ConvergenceRow>& rows);
std::string emit_study_json(const std::vector<ConvergenceRow>& rows,
                            const std::string& problem,
                            const std::string& method);

std::string emit_identities_csv(const std::vector<IdentityResult>& results);

struct SolveSummary {
  std::string problem;
  GridSpec grid;
  std::string method;
  double tol = 0;
  int iterations = 0;
  double relative_residual = 0;
  double energy = 0;
  double l2_error = 0;  // NaN when no exact solution
  double w_norm = 0;
  double ratio_bound = 0;
  std::vector<cplx> solution;  // row-major, k fastest
};

std::string emit_solve_json(const SolveSummary& s);

std::string emit_spectrum_csv(const std::vector<double>& eigenvalues);
std::string emit_spectrum_json(int n, int m, double ax, double ay,
                               const std::vector<double>& eigenvalues);

}  // namespace maglap
