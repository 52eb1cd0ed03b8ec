#pragma once

#include <span>
#include <utility>
#include <vector>

#include "localcc/signed_graph.hpp"

namespace localcc {

/// Multiplier sigma_(u,v,z) >= 0 on the triangle row x_uv <= x_uz + x_zv of
/// the minimax program.
struct TripleMultiplier {
  Vertex u;
  Vertex v;
  Vertex z;
  double value;
};

/// Dual solution of the minimax program, kept in aggregated form: pi per
/// vertex, and per unordered pair the net triangle multiplier
///
///   sigma_hat(u,v) = sum_z ( -s(u,v,z) - s(v,u,z) + s(z,u,v) + s(z,v,u)
///                            + s(u,z,v) + s(v,z,u) ).
///
/// The dual reads: maximise sum_v d-(v) pi_v subject to
///   -pi_u - pi_v + sigma_hat(u,v) <= 0   for + edges,
///    pi_u + pi_v + sigma_hat(u,v) <= 0   for - edges,
///   sum_v pi_v <= 1,  pi >= 0.
struct DualCertificate {
  std::size_t vertex_count = 0;
  std::vector<double> pi;
  /// Indexed by pair_index(u, v, vertex_count).
  std::vector<double> sigma_hat;
  double claimed_objective = 0.0;
};

/// Folds explicit triple multipliers into per-pair sigma_hat values.
std::vector<double> aggregate_sigma(std::size_t vertex_count,
                                    std::span<const TripleMultiplier> sigma);

/// Certificate of value 1 for the matching instance on 2t vertices, built on
/// the matching pair {0, 1}: pi = 1/2 on both ends and
/// sigma_(0,1,z) = 1/(2t-2) for every other z. Requires t >= 2.
DualCertificate matching_dual_certificate(std::size_t t);

/// Certificate of value n/3 for the star instance on n+1 vertices (center 0):
/// pi_0 = 1 - n/(3(n-1)), pi_v = 1/(3(n-1)), and sigma_(v,w,0) = 1/(3(n-1))
/// for every ordered pair of leaves. Requires n >= 2.
DualCertificate star_dual_certificate(std::size_t n);

struct DualVerdict {
  bool feasible = false;
  double objective = 0.0;
  double pi_sum = 0.0;
  /// Largest violation over all dual constraints (<= 0 means strictly inside).
  double max_violation = 0.0;
  /// + edges whose constraint holds with slack > tolerance. Complementary
  /// slackness forces x_uv = 0 on these at every primal optimum.
  std::vector<std::pair<Vertex, Vertex>> slack_positive_edges;
};

/// Checks the certificate against g with tolerance kLpTolerance.
DualVerdict verify_dual_certificate(const SignedCompleteGraph& g, const DualCertificate& cert);

}  // namespace localcc
