#pragma once

#include <optional>

#include "localcc/clustering.hpp"
#include "localcc/linear_program.hpp"
#include "localcc/objective.hpp"
#include "localcc/signed_graph.hpp"
#include "localcc/simplex.hpp"

namespace localcc {

// Column layout shared by every relaxation: one distance variable per
// unordered pair of the (unified) vertex set, in lexicographic pair order,
// named "x_<u>_<v>"; minimax programs append the bound variable "M" last.
//
// Row layout: for every triple a < b < c the three triangle rows
// x_ac <= x_ab + x_bc, x_ab <= x_ac + x_bc, x_bc <= x_ab + x_ac; then (minimax
// only) one error row per guaranteed vertex.
//
// Bipartite programs include within-side distance variables. They carry no
// cost and exist so that triangle rows form a full metric on V1 ∪ V2, which
// the bipartite rounding reads.

/// Minimise the worst per-vertex fractional error.
LinearProgram build_minimax_lp(const SignedCompleteGraph& g);
/// One-sided: error rows for V1 only.
LinearProgram build_minimax_lp(const SignedBipartiteGraph& g);

/// Minimise the total LP-cost over all edges.
LinearProgram build_l1_lp(const SignedCompleteGraph& g);
LinearProgram build_l1_lp(const SignedBipartiteGraph& g);

/// Reads the pair columns of a solution back as a fractional clustering,
/// clamping into [0, 1].
FractionalClustering fractional_from_solution(std::size_t vertex_count, const LpSolution& s);

struct RelaxationResult {
  LpStatus status = LpStatus::infeasible;
  /// Objective of the program itself (M for minimax, total LP-cost for l1).
  double lp_value = 0.0;
  std::optional<FractionalClustering> fractional;
  /// f(errvec(x)) over the guaranteed vertices, in the same units as the
  /// objective applied to a discrete clustering.
  double objective_value = 0.0;
  std::size_t iterations = 0;
};

/// Builds and solves the relaxation matching `f` (linf -> minimax, l1 -> l1).
/// Throws std::invalid_argument for lp:<p> objectives, which have no linear
/// relaxation here.
RelaxationResult solve_relaxation(const SignedCompleteGraph& g, const Objective& f);
RelaxationResult solve_relaxation(const SignedBipartiteGraph& g, const Objective& f);

}  // namespace localcc
