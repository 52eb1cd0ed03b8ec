#include "localcc/signed_graph.hpp"

#include <stdexcept>
#include <string>

#include "localcc/random.hpp"

namespace localcc {

SignedCompleteGraph::SignedCompleteGraph(std::size_t n, Sign fill)
    : n_(n), positive_(pair_count(n), fill == Sign::positive) {
  if (n == 0) throw std::invalid_argument("complete graph needs at least one vertex");
}

void SignedCompleteGraph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw std::out_of_range("vertex index out of range (n=" + std::to_string(n_) + ")");
  if (u == v) throw std::invalid_argument("self pair " + std::to_string(u));
}

Sign SignedCompleteGraph::sign(Vertex u, Vertex v) const {
  check_pair(u, v);
  return positive_[pair_index(u, v, n_)] ? Sign::positive : Sign::negative;
}

void SignedCompleteGraph::set_sign(Vertex u, Vertex v, Sign s) {
  check_pair(u, v);
  positive_[pair_index(u, v, n_)] = (s == Sign::positive);
}

std::size_t SignedCompleteGraph::positive_degree(Vertex v) const {
  std::size_t d = 0;
  for (Vertex w = 0; w < n_; ++w)
    if (w != v && positive_[pair_index(v, w, n_)]) ++d;
  return d;
}

std::size_t SignedCompleteGraph::positive_edge_count() const {
  std::size_t count = 0;
  for (bool b : positive_) count += b ? 1 : 0;
  return count;
}

SignedBipartiteGraph::SignedBipartiteGraph(std::size_t n1, std::size_t n2, Sign fill)
    : n1_(n1), n2_(n2), positive_(n1 * n2, fill == Sign::positive) {
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("bipartite graph needs both sides nonempty");
}

void SignedBipartiteGraph::check_pair(Vertex i, Vertex j) const {
  if (i >= n1_ || j >= n2_)
    throw std::out_of_range("bipartite index out of range (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
}

Sign SignedBipartiteGraph::sign(Vertex i, Vertex j) const {
  check_pair(i, j);
  return positive_[i * n2_ + j] ? Sign::positive : Sign::negative;
}

void SignedBipartiteGraph::set_sign(Vertex i, Vertex j, Sign s) {
  check_pair(i, j);
  positive_[i * n2_ + j] = (s == Sign::positive);
}

std::optional<Sign> SignedBipartiteGraph::edge_sign(Vertex u, Vertex v) const {
  const std::size_t n = vertex_count();
  if (u >= n || v >= n) throw std::out_of_range("unified vertex index out of range");
  const bool u_left = u < n1_;
  const bool v_left = v < n1_;
  if (u_left == v_left) return std::nullopt;
  if (u_left) return sign(u, v - n1_);
  return sign(v, u - n1_);
}

std::size_t SignedBipartiteGraph::positive_degree(Vertex u) const {
  std::size_t d = 0;
  if (u < n1_) {
    for (Vertex j = 0; j < n2_; ++j) d += positive_[u * n2_ + j] ? 1 : 0;
  } else {
    const Vertex j = u - n1_;
    for (Vertex i = 0; i < n1_; ++i) d += positive_[i * n2_ + j] ? 1 : 0;
  }
  return d;
}

std::size_t SignedBipartiteGraph::negative_degree(Vertex u) const {
  return (u < n1_ ? n2_ : n1_) - positive_degree(u);
}

std::size_t SignedBipartiteGraph::positive_edge_count() const {
  std::size_t count = 0;
  for (bool b : positive_) count += b ? 1 : 0;
  return count;
}

SignedCompleteGraph make_matching_instance(std::size_t t) {
  if (t == 0) throw std::invalid_argument("matching instance needs t >= 1");
  SignedCompleteGraph g(2 * t, Sign::positive);
  for (std::size_t i = 0; i < t; ++i) g.set_sign(2 * i, 2 * i + 1, Sign::negative);
  return g;
}

SignedCompleteGraph make_star_instance(std::size_t n) {
  if (n == 0) throw std::invalid_argument("star instance needs n >= 1");
  SignedCompleteGraph g(n + 1, Sign::negative);
  for (Vertex v = 1; v <= n; ++v) g.set_sign(0, v, Sign::positive);
  return g;
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p_plus must lie in [0, 1]");
}

Sign draw(SplitMix64& rng, double p_plus) {
  return rng.next_unit() < p_plus ? Sign::positive : Sign::negative;
}

}  // namespace

SignedCompleteGraph make_random_complete(std::size_t n, double p_plus, std::uint64_t seed) {
  check_probability(p_plus);
  SignedCompleteGraph g(n, Sign::negative);
  SplitMix64 rng(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_sign(u, v, draw(rng, p_plus));
  return g;
}

SignedBipartiteGraph make_random_bipartite(std::size_t n1, std::size_t n2, double p_plus,
                                           std::uint64_t seed) {
  check_probability(p_plus);
  SignedBipartiteGraph g(n1, n2, Sign::negative);
  SplitMix64 rng(seed);
  for (Vertex i = 0; i < n1; ++i)
    for (Vertex j = 0; j < n2; ++j) g.set_sign(i, j, draw(rng, p_plus));
  return g;
}

}  // namespace localcc
