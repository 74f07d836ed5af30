#pragma once

// Command line front end.  Exit codes: 0 success, 1 validation or usage
// error, 2 numerical failure (identity residual above tolerance, solver
// non-convergence, aborted study).

namespace maglap {

int run_cli(int argc, const char* const* argv);

}  // namespace maglap
