#include "localcc/clustering.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace localcc {

Clustering Clustering::from_labels(std::span<const std::size_t> labels) {
  Clustering c;
  c.assignment_.resize(labels.size());
  std::vector<std::pair<std::size_t, std::size_t>> remap;  // (label, canonical id)
  for (std::size_t v = 0; v < labels.size(); ++v) {
    std::size_t id = std::numeric_limits<std::size_t>::max();
    for (const auto& [label, canon] : remap)
      if (label == labels[v]) {
        id = canon;
        break;
      }
    if (id == std::numeric_limits<std::size_t>::max()) {
      id = remap.size();
      remap.emplace_back(labels[v], id);
    }
    c.assignment_[v] = id;
  }
  c.cluster_count_ = remap.size();
  return c;
}

Clustering Clustering::from_clusters(std::size_t n,
                                     const std::vector<std::vector<Vertex>>& clusters) {
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> labels(n, unset);
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (clusters[k].empty()) throw std::invalid_argument("empty cluster");
    for (Vertex v : clusters[k]) {
      if (v >= n) throw std::out_of_range("cluster member out of range");
      if (labels[v] != unset)
        throw std::invalid_argument("vertex " + std::to_string(v) + " in two clusters");
      labels[v] = k;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (labels[v] == unset)
      throw std::invalid_argument("vertex " + std::to_string(v) + " not covered");
  return from_labels(labels);
}

Clustering Clustering::singletons(std::size_t n) {
  Clustering c;
  c.assignment_.resize(n);
  for (std::size_t v = 0; v < n; ++v) c.assignment_[v] = v;
  c.cluster_count_ = n;
  return c;
}

Clustering Clustering::giant(std::size_t n) {
  Clustering c;
  c.assignment_.assign(n, 0);
  c.cluster_count_ = n == 0 ? 0 : 1;
  return c;
}

std::vector<std::vector<Vertex>> Clustering::clusters() const {
  std::vector<std::vector<Vertex>> out(cluster_count_);
  for (Vertex v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

FractionalClustering::FractionalClustering(std::size_t n, double fill)
    : n_(n), distances_(pair_count(n), fill) {}

FractionalClustering::FractionalClustering(std::size_t n, std::vector<double> distances)
    : n_(n), distances_(std::move(distances)) {
  if (distances_.size() != pair_count(n))
    throw std::invalid_argument("distance count does not match C(n, 2)");
}

void FractionalClustering::set_distance(Vertex u, Vertex v, double d) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("x_uu is fixed at 0");
  distances_[pair_index(u, v, n_)] = d;
}

FractionalClustering clustering_to_fractional(const Clustering& c) {
  const std::size_t n = c.size();
  FractionalClustering x(n, 1.0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (c.same_cluster(u, v)) x.set_distance(u, v, 0.0);
  return x;
}

std::vector<FractionalViolation> validate_fractional(const FractionalClustering& x) {
  std::vector<FractionalViolation> out;
  const std::size_t n = x.size();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double d = x.distance(u, v);
      if (d < -kTriangleTolerance)
        out.push_back({FractionalViolation::Kind::box, u, u, v, -d});
      else if (d > 1.0 + kTriangleTolerance)
        out.push_back({FractionalViolation::Kind::box, u, u, v, d - 1.0});
    }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n; ++c) {
      const double direct = x.distance(a, c);
      for (Vertex b = 0; b < n; ++b) {
        if (b == a || b == c) continue;
        const double excess = direct - x.distance(a, b) - x.distance(b, c);
        if (excess > kTriangleTolerance)
          out.push_back({FractionalViolation::Kind::triangle, a, b, c, excess});
      }
    }
  return out;
}

namespace {

template <class Graph>
void check_dimension(const Graph& g, std::size_t n) {
  if (g.vertex_count() != n)
    throw std::invalid_argument("dimension mismatch: graph has " +
                                std::to_string(g.vertex_count()) + " vertices, input has " +
                                std::to_string(n));
}

template <class Graph>
ErrorVector error_vector_impl(const Graph& g, const FractionalClustering& x) {
  const std::size_t n = g.vertex_count();
  check_dimension(g, x.size());
  ErrorVector e(n, 0.0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const auto s = g.edge_sign(u, v);
      if (!s) continue;
      const double d = x.distance(u, v);
      const double cost = *s == Sign::positive ? d : 1.0 - d;
      e[u] += cost;
      e[v] += cost;
    }
  return e;
}

template <class Graph>
std::vector<std::size_t> error_counts_impl(const Graph& g, const Clustering& c) {
  const std::size_t n = g.vertex_count();
  check_dimension(g, c.size());
  std::vector<std::size_t> e(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const auto s = g.edge_sign(u, v);
      if (!s) continue;
      if ((*s == Sign::positive) != c.same_cluster(u, v)) {
        ++e[u];
        ++e[v];
      }
    }
  return e;
}

template <class Graph>
double lp_cost_impl(const Graph& g, const FractionalClustering& x, Vertex u, Vertex v) {
  check_dimension(g, x.size());
  if (u >= x.size() || v >= x.size()) throw std::out_of_range("vertex index out of range");
  const auto s = g.edge_sign(u, v);
  if (!s) throw std::invalid_argument("unknown pair {" + std::to_string(u) + ", " +
                                      std::to_string(v) + "}");
  const double d = x.distance(u, v);
  return *s == Sign::positive ? d : 1.0 - d;
}

ErrorVector to_real(const std::vector<std::size_t>& counts) {
  return ErrorVector(counts.begin(), counts.end());
}

}  // namespace

ErrorVector error_vector(const SignedCompleteGraph& g, const FractionalClustering& x) {
  return error_vector_impl(g, x);
}
ErrorVector error_vector(const SignedBipartiteGraph& g, const FractionalClustering& x) {
  return error_vector_impl(g, x);
}
ErrorVector error_vector(const SignedCompleteGraph& g, const Clustering& c) {
  return to_real(error_counts_impl(g, c));
}
ErrorVector error_vector(const SignedBipartiteGraph& g, const Clustering& c) {
  return to_real(error_counts_impl(g, c));
}

double lp_cost(const SignedCompleteGraph& g, const FractionalClustering& x, Vertex u, Vertex v) {
  return lp_cost_impl(g, x, u, v);
}
double lp_cost(const SignedBipartiteGraph& g, const FractionalClustering& x, Vertex u,
               Vertex v) {
  return lp_cost_impl(g, x, u, v);
}

std::vector<std::size_t> error_counts(const SignedCompleteGraph& g, const Clustering& c) {
  return error_counts_impl(g, c);
}
std::vector<std::size_t> error_counts(const SignedBipartiteGraph& g, const Clustering& c) {
  return error_counts_impl(g, c);
}

}  // namespace localcc
