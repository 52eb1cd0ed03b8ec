#include "localcc/acn.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "localcc/random.hpp"

namespace localcc {

Clustering acn_cluster(const SignedCompleteGraph& g, std::uint64_t seed) {
  const std::size_t n = g.size();
  SplitMix64 rng(seed);
  std::vector<Vertex> survivors(n);
  for (Vertex v = 0; v < n; ++v) survivors[v] = v;
  std::vector<std::size_t> labels(n, 0);

  for (std::size_t label = 0; !survivors.empty(); ++label) {
    const Vertex pivot = survivors[rng.next_below(survivors.size())];
    std::vector<Vertex> rest;
    rest.reserve(survivors.size());
    for (Vertex w : survivors) {
      if (w == pivot || g.is_positive(pivot, w))
        labels[w] = label;
      else
        rest.push_back(w);
    }
    survivors = std::move(rest);
  }
  return Clustering::from_labels(labels);
}

AcnGapSummary acn_minimax_gap(std::size_t t, std::size_t trials, std::uint64_t seed) {
  if (t < 2) throw std::invalid_argument("acn gap needs t >= 2");
  const SignedCompleteGraph g = make_matching_instance(t);
  AcnGapSummary out;
  out.trials = trials;
  double total = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto errors = error_counts(g, acn_cluster(g, SplitMix64::split(seed, i)));
    const std::size_t worst = *std::max_element(errors.begin(), errors.end());
    out.min_worst = i == 0 ? worst : std::min(out.min_worst, worst);
    out.max_worst = std::max(out.max_worst, worst);
    total += static_cast<double>(worst);
  }
  out.mean_worst = trials ? total / static_cast<double>(trials) : 0.0;
  return out;
}

}  // namespace localcc
