#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace localcc {

using Vertex = std::size_t;

enum class Sign : std::uint8_t { negative = 0, positive = 1 };

constexpr char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

/// Index of the unordered pair {u, v}, u != v, in a row-major strict upper
/// triangle over n vertices. Pairs are ordered lexicographically.
constexpr std::size_t pair_index(Vertex u, Vertex v, std::size_t n) {
  if (u > v) std::swap(u, v);
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Complete graph on n vertices with a +/- label on every unordered pair.
class SignedCompleteGraph {
 public:
  /// All pairs start with `fill`.
  explicit SignedCompleteGraph(std::size_t n, Sign fill = Sign::positive);

  std::size_t size() const { return n_; }
  std::size_t vertex_count() const { return n_; }
  /// Vertices whose per-vertex error carries a guarantee (all of them).
  std::size_t guaranteed_count() const { return n_; }

  Sign sign(Vertex u, Vertex v) const;
  bool is_positive(Vertex u, Vertex v) const { return sign(u, v) == Sign::positive; }
  void set_sign(Vertex u, Vertex v, Sign s);

  /// Unified accessor shared with the bipartite graph; nullopt for u == v.
  std::optional<Sign> edge_sign(Vertex u, Vertex v) const {
    if (u == v) return std::nullopt;
    return sign(u, v);
  }

  std::size_t positive_degree(Vertex v) const;
  std::size_t negative_degree(Vertex v) const { return n_ - 1 - positive_degree(v); }
  std::size_t positive_edge_count() const;
  std::size_t negative_edge_count() const { return pair_count(n_) - positive_edge_count(); }

  friend bool operator==(const SignedCompleteGraph&, const SignedCompleteGraph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_;
  std::vector<bool> positive_;  // triangular, indexed by pair_index
};

/// Complete bipartite graph between V1 (n1 vertices) and V2 (n2 vertices).
///
/// Side-local accessors take (i in V1, j in V2). The unified accessors use a
/// single index space where V1 is [0, n1) and V2 is [n1, n1 + n2); all
/// clustering, LP and rounding code works in the unified space.
class SignedBipartiteGraph {
 public:
  SignedBipartiteGraph(std::size_t n1, std::size_t n2, Sign fill = Sign::positive);

  std::size_t left_size() const { return n1_; }
  std::size_t right_size() const { return n2_; }
  std::size_t vertex_count() const { return n1_ + n2_; }
  /// Only V1 carries the one-sided guarantee.
  std::size_t guaranteed_count() const { return n1_; }

  Sign sign(Vertex i, Vertex j) const;
  bool is_positive(Vertex i, Vertex j) const { return sign(i, j) == Sign::positive; }
  void set_sign(Vertex i, Vertex j, Sign s);

  bool is_left(Vertex u) const { return u < n1_; }
  Vertex unified_right(Vertex j) const { return n1_ + j; }

  /// nullopt unless u and v lie on opposite sides.
  std::optional<Sign> edge_sign(Vertex u, Vertex v) const;

  /// Degrees in the unified index space.
  std::size_t positive_degree(Vertex u) const;
  std::size_t negative_degree(Vertex u) const;
  std::size_t positive_edge_count() const;

  friend bool operator==(const SignedBipartiteGraph&, const SignedBipartiteGraph&) = default;

 private:
  void check_pair(Vertex i, Vertex j) const;

  std::size_t n1_;
  std::size_t n2_;
  std::vector<bool> positive_;  // row-major n1 x n2
};

using SignedGraph = std::variant<SignedCompleteGraph, SignedBipartiteGraph>;

/// K_{2t} with the perfect matching {2i, 2i+1} labeled - and every other pair +.
SignedCompleteGraph make_matching_instance(std::size_t t);

/// K_{n+1} where every pair touching vertex 0 is + and every other pair is -.
SignedCompleteGraph make_star_instance(std::size_t n);

/// Each pair independently + with probability p_plus. Pure function of the
/// arguments; the generator is SplitMix64 so output is platform independent.
SignedCompleteGraph make_random_complete(std::size_t n, double p_plus, std::uint64_t seed);
SignedBipartiteGraph make_random_bipartite(std::size_t n1, std::size_t n2, double p_plus,
                                           std::uint64_t seed);

}  // namespace localcc
