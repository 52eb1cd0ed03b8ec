#pragma once

#include <cstddef>
#include <cstdint>

#include "localcc/clustering.hpp"
#include "localcc/signed_graph.hpp"

namespace localcc {

/// Random-pivot clustering: repeatedly pick a uniform surviving pivot and
/// emit it together with its surviving + neighbours. Pure function of
/// (g, seed).
Clustering acn_cluster(const SignedCompleteGraph& g, std::uint64_t seed);

struct AcnGapSummary {
  std::size_t trials = 0;
  std::size_t min_worst = 0;
  std::size_t max_worst = 0;
  double mean_worst = 0.0;
};

/// Worst-vertex error statistics of acn_cluster over `trials` runs on the
/// matching instance with parameter t. Trial i uses the i-th split of `seed`.
AcnGapSummary acn_minimax_gap(std::size_t t, std::size_t trials, std::uint64_t seed);

}  // namespace localcc
