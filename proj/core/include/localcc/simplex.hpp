#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "localcc/linear_program.hpp"

namespace localcc {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

std::string_view to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  /// Variable values; filled when status == optimal.
  std::vector<double> values;
  double objective = 0.0;
  std::size_t iterations = 0;
};

struct SimplexOptions {
  /// 0 selects the default cap of 100 * (rows + cols).
  std::size_t max_iterations = 0;
  /// Consecutive dual-degenerate pivots tolerated before the solver switches
  /// permanently to least-index (Bland) pivoting.
  std::size_t degenerate_streak_limit = 2000;
  /// Finite stand-in for an infinite bound on the side a nonbasic variable
  /// must start at.
  double artificial_bound = 1e6;
  /// Honour LinearProgram::Row::lazy. When false every row is loaded up front.
  bool lazy_rows = true;
};

/// Dense bounded-variable dual simplex on a condensed tableau.
///
/// The starting basis is all slacks with every structural variable at the
/// bound its cost sign prefers, which is dual feasible by construction.
/// Rows are priced by largest infeasibility; after a long run of
/// dual-degenerate pivots the solver falls back to Bland's least-index rule,
/// which cannot cycle. Rows flagged lazy are left out until the optimum of
/// the working set violates them, then appended as cuts and re-optimised.
LpSolution solve(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace localcc
