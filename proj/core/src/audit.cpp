#include "localcc/audit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace localcc {

namespace {

bool same_emissions(const RoundingTrace& a, const RoundingTrace& b) {
  if (a.emissions.size() != b.emissions.size()) return false;
  for (std::size_t i = 0; i < a.emissions.size(); ++i) {
    const Emission& x = a.emissions[i];
    const Emission& y = b.emissions[i];
    if (x.type != y.type || x.pivot != y.pivot || x.members != y.members) return false;
  }
  return true;
}

template <class Graph, class Outside>
CrossEdgeAudit audit_impl(const Graph& g, const FractionalClustering& x,
                          const RoundingTrace& trace, const RoundingParams& p,
                          Outside is_candidate) {
  const std::size_t n = g.vertex_count();
  CrossEdgeAudit out;
  out.bound = cross_edge_ratio(p.alpha);

  std::vector<bool> alive(n, true);
  for (std::size_t e = 0; e < trace.emissions.size(); ++e) {
    const Emission& em = trace.emissions[e];
    std::vector<bool> in_cluster(n, false);
    for (Vertex v : em.members) {
      if (v >= n || !alive[v]) throw std::invalid_argument("trace does not match the instance");
      in_cluster[v] = true;
    }
    for (Vertex v : em.members) alive[v] = false;
    if (em.type != EmissionType::type2) continue;

    for (Vertex z = 0; z < n; ++z) {
      if (!alive[z] || !is_candidate(z)) continue;
      CrossEdgeCheck check{.emission = e, .z = z};
      for (Vertex w : em.members) {
        const auto s = g.edge_sign(z, w);
        if (!s) continue;
        const double d = x.distance(z, w);
        if (*s == Sign::positive) {
          ++check.cluster_cost;
          check.lp_cost += d;
        } else {
          check.lp_cost += 1.0 - d;
        }
      }
      const double cost = static_cast<double>(check.cluster_cost);
      check.violated = cost > out.bound * check.lp_cost + 1e-9;
      if (check.cluster_cost > 0) {
        const double ratio = check.lp_cost > 0.0 ? cost / check.lp_cost : std::numeric_limits<double>::infinity();
        out.worst_ratio = std::max(out.worst_ratio, ratio);
      }
      if (check.violated) ++out.violations;
      out.checks.push_back(check);
    }
  }
  if (std::find(alive.begin(), alive.end(), true) != alive.end())
    throw std::invalid_argument("trace does not cover every vertex");
  return out;
}

}  // namespace

CrossEdgeAudit audit_cross_edge_bound(const SignedCompleteGraph& g, const FractionalClustering& x,
                                      const RoundingTrace& trace, const RoundingParams& p) {
  const auto replay = round_complete(g, x, p, true);
  if (!same_emissions(*replay.trace, trace))
    throw std::invalid_argument("trace was not produced by rounding this instance");
  return audit_impl(g, x, trace, p, [](Vertex) { return true; });
}

CrossEdgeAudit audit_cross_edge_bound(const SignedBipartiteGraph& g,
                                      const FractionalClustering& x, const RoundingTrace& trace,
                                      const RoundingParams& p) {
  const auto replay = round_bipartite(g, x, p, true);
  if (!same_emissions(*replay.trace, trace))
    throw std::invalid_argument("trace was not produced by rounding this instance");
  const std::size_t n1 = g.left_size();
  return audit_impl(g, x, trace, p, [n1](Vertex z) { return z < n1; });
}

}  // namespace localcc
