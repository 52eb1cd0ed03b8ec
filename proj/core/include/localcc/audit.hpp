#pragma once

#include <cstddef>
#include <vector>

#include "localcc/clustering.hpp"
#include "localcc/rounding.hpp"
#include "localcc/signed_graph.hpp"

namespace localcc {

/// One (Type 2 emission, outside survivor z) pair. The cross-edges of z are
/// its edges into the emitted cluster; the cluster-cost counts the + ones.
struct CrossEdgeCheck {
  std::size_t emission = 0;
  Vertex z = 0;
  std::size_t cluster_cost = 0;
  double lp_cost = 0.0;
  bool violated = false;
};

struct CrossEdgeAudit {
  /// max{1/(1-2 alpha), 2/alpha}
  double bound = 0.0;
  std::vector<CrossEdgeCheck> checks;
  std::size_t violations = 0;
  /// Largest cluster_cost / lp_cost seen among checks with cluster_cost > 0.
  double worst_ratio = 0.0;
};

/// Replays the emissions in `trace` and, after every Type 2 cluster, checks
/// cluster_cost <= bound * lp_cost (+1e-9) for each surviving vertex outside
/// it. Throws std::invalid_argument if `trace` is not the trace rounding
/// produces for (g, x, p).
CrossEdgeAudit audit_cross_edge_bound(const SignedCompleteGraph& g, const FractionalClustering& x,
                                      const RoundingTrace& trace, const RoundingParams& p);

/// Bipartite variant: z ranges over surviving V1 vertices and cross-edges go
/// to the V2 members of the cluster.
CrossEdgeAudit audit_cross_edge_bound(const SignedBipartiteGraph& g,
                                      const FractionalClustering& x, const RoundingTrace& trace,
                                      const RoundingParams& p);

}  // namespace localcc
