#pragma once

// Named structural identities of the calculus, each evaluated over seeded
// random trials and reported as a maximum relative residual.  Shared by the
// `identities` CLI subcommand and the acceptance suite.

#include <cstdint>
#include <string>
#include <vector>

#include "maglap/grid.hpp"

namespace maglap {

struct IdentityResult {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;

  bool pass() const noexcept { return max_residual <= tolerance; }
};

// Runs every identity on one grid.  Residuals are sup-norm differences
// divided by the sup norm of the data involved.
std::vector<IdentityResult> run_identity_suite(const GridSpec& g, int trials,
                                               std::uint64_t seed);

// Same suite over several grids, keeping the worst residual per identity.
std::vector<IdentityResult> run_identity_suite(
    const std::vector<GridSpec>& grids, int trials, std::uint64_t seed);

}  // namespace maglap
