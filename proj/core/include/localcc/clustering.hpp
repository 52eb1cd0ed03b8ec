#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "localcc/signed_graph.hpp"

namespace localcc {

/// Absolute tolerance for box and triangle checks on fractional clusterings.
inline constexpr double kTriangleTolerance = 1e-9;

/// A partition of [0, n) stored as a dense cluster id per vertex. Ids are
/// canonical: clusters are numbered 0..k-1 in order of their smallest member.
class Clustering {
 public:
  /// Accepts arbitrary labels and renumbers them canonically.
  static Clustering from_labels(std::span<const std::size_t> labels);
  static Clustering from_clusters(std::size_t n, const std::vector<std::vector<Vertex>>& clusters);
  static Clustering singletons(std::size_t n);
  static Clustering giant(std::size_t n);

  std::size_t size() const { return assignment_.size(); }
  std::size_t cluster_count() const { return cluster_count_; }
  std::size_t cluster_of(Vertex v) const { return assignment_.at(v); }
  bool same_cluster(Vertex u, Vertex v) const { return assignment_.at(u) == assignment_.at(v); }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  /// Members of each cluster, ascending, in cluster id order.
  std::vector<std::vector<Vertex>> clusters() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  Clustering() = default;
  std::vector<std::size_t> assignment_;
  std::size_t cluster_count_ = 0;
};

/// Pairwise distances x_uv in [0, 1] over all unordered pairs of n vertices,
/// with x_uu = 0. For bipartite graphs the vertex set is the unified
/// V1 ∪ V2 index space, and within-side distances are present as well.
class FractionalClustering {
 public:
  explicit FractionalClustering(std::size_t n, double fill = 0.0);
  FractionalClustering(std::size_t n, std::vector<double> distances);

  std::size_t size() const { return n_; }
  double distance(Vertex u, Vertex v) const {
    return u == v ? 0.0 : distances_[pair_index(u, v, n_)];
  }
  void set_distance(Vertex u, Vertex v, double d);
  const std::vector<double>& distances() const { return distances_; }

 private:
  std::size_t n_;
  std::vector<double> distances_;
};

/// Per-vertex error weight, indexed like the graph's (unified) vertices.
using ErrorVector = std::vector<double>;

struct FractionalViolation {
  enum class Kind { box, triangle };
  Kind kind;
  /// For triangle violations x_{a c} > x_{a b} + x_{b c}; for box violations
  /// only a and c are meaningful and b == a.
  Vertex a;
  Vertex b;
  Vertex c;
  /// Amount by which the constraint is exceeded (positive).
  double excess;
};

FractionalClustering clustering_to_fractional(const Clustering& c);

/// Box and triangle violations beyond kTriangleTolerance. Empty iff valid.
std::vector<FractionalViolation> validate_fractional(const FractionalClustering& x);

ErrorVector error_vector(const SignedCompleteGraph& g, const FractionalClustering& x);
ErrorVector error_vector(const SignedBipartiteGraph& g, const FractionalClustering& x);
ErrorVector error_vector(const SignedCompleteGraph& g, const Clustering& c);
ErrorVector error_vector(const SignedBipartiteGraph& g, const Clustering& c);

/// x_uv on a + edge, 1 - x_uv on a - edge. Throws when {u, v} is not an edge.
double lp_cost(const SignedCompleteGraph& g, const FractionalClustering& x, Vertex u, Vertex v);
double lp_cost(const SignedBipartiteGraph& g, const FractionalClustering& x, Vertex u, Vertex v);

/// Integral error counts for a discrete clustering.
std::vector<std::size_t> error_counts(const SignedCompleteGraph& g, const Clustering& c);
std::vector<std::size_t> error_counts(const SignedBipartiteGraph& g, const Clustering& c);

}  // namespace localcc
