#include "localcc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace localcc {

namespace {

// Depth-first walk over restricted-growth strings with incremental error
// counts: when vertex k is placed, only its pairs with vertices < k change,
// and those errors are final.
template <class Score>
class PartitionSearch {
 public:
  PartitionSearch(std::vector<std::int8_t> signs, std::size_t n, Score score)
      : signs_(std::move(signs)), n_(n), score_(std::move(score)), labels_(n, 0), errors_(n, 0) {}

  void run() {
    if (n_ == 0) return;
    place(0, 0);
  }

  std::uint64_t examined() const { return examined_; }
  double best_value() const { return best_value_; }
  const std::vector<std::size_t>& best_labels() const { return best_labels_; }

 private:
  void place(std::size_t k, std::size_t blocks) {
    if (k == n_) {
      ++examined_;
      const double value = score_(errors_);
      // Strict improvement keeps the first (lexicographically smallest) minimiser.
      if (best_labels_.empty() ||
          value < best_value_ - 1e-12 * std::max(1.0, std::abs(best_value_))) {
        best_value_ = value;
        best_labels_ = labels_;
      }
      return;
    }
    const std::size_t limit = k == 0 ? 1 : blocks + 1;
    for (std::size_t b = 0; b < limit; ++b) {
      labels_[k] = b;
      apply(k, +1);
      place(k + 1, std::max(blocks, b + 1));
      apply(k, -1);
    }
  }

  void apply(std::size_t k, int delta) {
    const std::int8_t* row = &signs_[k * n_];
    for (std::size_t j = 0; j < k; ++j) {
      const std::int8_t s = row[j];
      if (s == 0) continue;
      const bool together = labels_[j] == labels_[k];
      if ((s > 0) != together) {
        errors_[j] += delta;
        errors_[k] += delta;
      }
    }
  }

  std::vector<std::int8_t> signs_;
  std::size_t n_;
  Score score_;
  std::vector<std::size_t> labels_;
  std::vector<int> errors_;
  std::vector<std::size_t> best_labels_;
  double best_value_ = 0.0;
  std::uint64_t examined_ = 0;
};

template <class Graph>
std::vector<std::int8_t> sign_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int8_t> m(n * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      const auto s = g.edge_sign(u, v);
      if (s) m[u * n + v] = *s == Sign::positive ? 1 : -1;
    }
  return m;
}

void check_cap(std::size_t n) {
  if (n > kExactVertexCap)
    throw InstanceTooLarge("exact search is capped at " + std::to_string(kExactVertexCap) +
                           " vertices, instance has " + std::to_string(n));
}

template <class Graph>
ExactResult exact_impl(const Graph& g, const Objective& f) {
  const std::size_t n = g.vertex_count();
  check_cap(n);
  const std::size_t guarded = g.guaranteed_count();
  std::vector<double> buffer(guarded);
  auto score = [&f, &buffer, guarded](const std::vector<int>& errors) {
    for (std::size_t v = 0; v < guarded; ++v) buffer[v] = errors[v];
    return f.evaluate(buffer);
  };
  PartitionSearch search(sign_matrix(g), n, score);
  search.run();
  return {Clustering::from_labels(search.best_labels()), search.best_value(), search.examined()};
}

template <class Graph>
PerfectVerdict perfect_impl(const Graph& g, const Clustering& c, const ToleranceMap& t) {
  if (t.size() != g.guaranteed_count())
    throw std::invalid_argument("tolerance map has " + std::to_string(t.size()) +
                                " entries, expected " + std::to_string(g.guaranteed_count()));
  const auto errors = error_counts(g, c);
  for (Vertex v = 0; v < t.size(); ++v)
    if (errors[v] > t[v]) return {false, v};
  return {true, std::nullopt};
}

}  // namespace

ExactResult exact_best(const SignedCompleteGraph& g, const Objective& f) { return exact_impl(g, f); }
ExactResult exact_best(const SignedBipartiteGraph& g, const Objective& f) {
  return exact_impl(g, f);
}

std::size_t max_agree_value(const SignedCompleteGraph& g, const Clustering& c) {
  const auto errors = error_counts(g, c);
  const std::size_t degree = g.size() - 1;
  std::size_t worst = degree;
  for (std::size_t e : errors) worst = std::min(worst, degree - e);
  return worst;
}

MaxAgreeResult exact_max_agree(const SignedCompleteGraph& g) {
  const std::size_t n = g.size();
  check_cap(n);
  const double degree = static_cast<double>(n - 1);
  // Minimise the negated worst-vertex agreement.
  auto score = [degree](const std::vector<int>& errors) {
    double worst = degree;
    for (int e : errors) worst = std::min(worst, degree - e);
    return -worst;
  };
  PartitionSearch search(sign_matrix(g), n, score);
  search.run();
  return {Clustering::from_labels(search.best_labels()),
          static_cast<std::size_t>(std::lround(-search.best_value())), search.examined()};
}

PerfectVerdict is_t_perfect(const SignedCompleteGraph& g, const Clustering& c,
                            const ToleranceMap& t) {
  return perfect_impl(g, c, t);
}
PerfectVerdict is_t_perfect(const SignedBipartiteGraph& g, const Clustering& c,
                            const ToleranceMap& t) {
  return perfect_impl(g, c, t);
}

}  // namespace localcc
