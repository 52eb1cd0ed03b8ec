#pragma once

#include <optional>
#include <string>
#include <vector>

#include "localcc/clustering.hpp"
#include "localcc/signed_graph.hpp"

namespace localcc {

/// Slack added to the inclusive threshold tests x_uw <= alpha and x_uw <= gamma.
inline constexpr double kThresholdTolerance = 1e-9;

/// Thresholds for the pivot rounding plus the constants its analysis is
/// parameterised by. k2 and k3 only matter for complete graphs.
struct RoundingParams {
  double alpha = 0.0;
  double gamma = 0.0;
  double k1 = 0.0;
  std::optional<double> k2;
  std::optional<double> k3;
};

enum class GraphKind { complete, bipartite };

/// Numerically optimised defaults for complete graphs (ratio about 47.6).
RoundingParams default_params_complete();
/// Defaults for one-sided bipartite rounding (ratio about 9.84).
RoundingParams default_params_bipartite();

/// Names of the violated invariants; empty when the parameters are admissible
/// for `kind`. Checks 0 < gamma < alpha < 1/2 plus the analysis constraints.
std::vector<std::string> check_params(const RoundingParams& p, GraphKind kind);

/// Throws std::invalid_argument listing every violated invariant.
void require_params(const RoundingParams& p, GraphKind kind);

/// The three per-edge charge bounds whose maximum is the approximation ratio.
struct RatioTerms {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double ratio() const;
};

RatioTerms ratio_terms_complete(const RoundingParams& p);
RatioTerms ratio_terms_bipartite(const RoundingParams& p);
double ratio_constant_complete(const RoundingParams& p);
double ratio_constant_bipartite(const RoundingParams& p);

/// max{1/(1-2 alpha), 2/alpha}: cross-edge charge bound after a Type 2 cluster.
double cross_edge_ratio(double alpha);

enum class EmissionType { type1, type2, leftover };

struct Emission {
  EmissionType type;
  Vertex pivot;
  /// Sorted members of the emitted cluster (pivot included).
  std::vector<Vertex> members;
  /// T_u at emission time, sorted, pivot excluded.
  std::vector<Vertex> ball;
  /// T*_u at emission time, sorted.
  std::vector<Vertex> core;
};

/// Emissions in output order.
struct RoundingTrace {
  std::vector<Emission> emissions;
};

struct RoundingResult {
  Clustering clustering;
  std::optional<RoundingTrace> trace;
};

/// Threshold-pivot rounding for complete graphs. Each round pivots on the
/// surviving vertex with the most survivors within gamma (smallest id on
/// ties), then emits either {u} or u with its alpha-ball depending on the
/// ball's average distance. Requires a valid fractional clustering and
/// 0 < gamma < alpha < 1/2.
RoundingResult round_complete(const SignedCompleteGraph& g, const FractionalClustering& x,
                              const RoundingParams& p, bool keep_trace = false);

/// One-sided rounding for bipartite graphs. x spans the unified vertex set
/// and must include V1-V1 distances. Pivots come from V1 only; the cores
/// count V2 vertices; V2 vertices left at the end become singletons.
RoundingResult round_bipartite(const SignedBipartiteGraph& g, const FractionalClustering& x,
                               const RoundingParams& p, bool keep_trace = false);

/// One line per emission: "type1 pivot=<u>", "type2 pivot=<u> members=<a,b,..>"
/// or "leftover vertex=<v>".
std::string dump_trace(const RoundingTrace& trace);

}  // namespace localcc
