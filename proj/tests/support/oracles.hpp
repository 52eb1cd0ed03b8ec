#pragma once

// Reference implementations used only by tests. They deliberately share no
// code with the library: partitions come from recursive block insertion,
// errors from a direct pass over the edge list.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "localcc/clustering.hpp"
#include "localcc/random.hpp"
#include "localcc/signed_graph.hpp"

namespace oracle {

using localcc::Sign;
using localcc::Vertex;

/// Bell numbers from the Bell triangle.
inline std::vector<std::uint64_t> bell_numbers(std::size_t up_to) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= up_to; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// Calls visit(blocks) for every set partition of {0..n-1}.
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<std::vector<Vertex>>&)>& visit) {
  std::vector<std::vector<Vertex>> blocks;
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (v == n) {
      visit(blocks);
      return;
    }
    for (auto& b : blocks) {
      b.push_back(v);
      rec(v + 1);
      b.pop_back();
    }
    blocks.push_back({v});
    rec(v + 1);
    blocks.pop_back();
  };
  rec(0);
}

inline std::vector<std::size_t> labels_of(std::size_t n, const std::vector<std::vector<Vertex>>& blocks) {
  std::vector<std::size_t> label(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Vertex v : blocks[b]) label[v] = b;
  return label;
}

/// Per-vertex disagreements by walking every edge once.
template <class Graph>
std::vector<double> edge_count_errors(const Graph& g, const std::vector<std::size_t>& label) {
  const std::size_t n = g.vertex_count();
  std::vector<double> err(n, 0.0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const auto s = g.edge_sign(u, v);
      if (!s) continue;
      const bool together = label[u] == label[v];
      if ((*s == Sign::positive) != together) {
        err[u] += 1.0;
        err[v] += 1.0;
      }
    }
  return err;
}

/// Total number of disagreeing edges.
template <class Graph>
std::size_t total_disagreements(const Graph& g, const std::vector<std::size_t>& label) {
  const auto e = edge_count_errors(g, label);
  double sum = 0.0;
  for (double x : e) sum += x;
  return static_cast<std::size_t>(std::lround(sum / 2.0));
}

/// Minimum of score(errors) over every partition, scored on the first
/// `guaranteed` vertices.
template <class Graph, class Score>
double brute_force_min(const Graph& g, std::size_t guaranteed, Score score) {
  double best = std::numeric_limits<double>::infinity();
  for_each_partition(g.vertex_count(), [&](const auto& blocks) {
    const auto e = edge_count_errors(g, labels_of(g.vertex_count(), blocks));
    best = std::min(best, score(std::vector<double>(e.begin(), e.begin() + guaranteed)));
  });
  return best;
}

inline double max_of(const std::vector<double>& e) { return *std::max_element(e.begin(), e.end()); }
inline double mean_of(const std::vector<double>& e) {
  double s = 0.0;
  for (double x : e) s += x;
  return s / static_cast<double>(e.size());
}

/// Uniform-ish random partition labels.
inline std::vector<std::size_t> random_labels(std::size_t n, localcc::SplitMix64& rng) {
  std::vector<std::size_t> label(n);
  const std::size_t k = 1 + rng.next_below(n);
  for (auto& l : label) l = rng.next_below(k);
  return label;
}

/// A random valid fractional clustering: a convex combination of cut
/// metrics of random partitions is a pseudometric in [0, 1].
inline localcc::FractionalClustering random_metric(std::size_t n, std::uint64_t seed,
                                                   std::size_t parts = 4) {
  localcc::SplitMix64 rng(seed);
  std::vector<double> w(parts);
  double total = 0.0;
  for (auto& x : w) total += (x = rng.next_unit() + 0.05);
  localcc::FractionalClustering x(n, 0.0);
  for (std::size_t p = 0; p < parts; ++p) {
    const auto label = random_labels(n, rng);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (label[u] != label[v]) x.set_distance(u, v, std::min(1.0, x.distance(u, v) + w[p] / total));
  }
  return x;
}

}  // namespace oracle
