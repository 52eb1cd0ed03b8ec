#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "localcc/clustering.hpp"
#include "localcc/objective.hpp"
#include "localcc/signed_graph.hpp"

namespace localcc {

/// Largest vertex count the exhaustive oracles accept (Bell(13) ≈ 2.8e7).
inline constexpr std::size_t kExactVertexCap = 13;

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExactResult {
  Clustering best;
  double value = 0.0;
  std::uint64_t partitions_examined = 0;
};

/// Minimises f over the guaranteed part of the error vector by enumerating
/// every set partition in restricted-growth order. Ties keep the
/// lexicographically smallest string. Throws InstanceTooLarge above the cap.
ExactResult exact_best(const SignedCompleteGraph& g, const Objective& f);
ExactResult exact_best(const SignedBipartiteGraph& g, const Objective& f);

/// Correct edges at the worst vertex: min_v (n - 1 - errors_v).
std::size_t max_agree_value(const SignedCompleteGraph& g, const Clustering& c);

struct MaxAgreeResult {
  Clustering best;
  std::size_t value = 0;
  std::uint64_t partitions_examined = 0;
};

/// Exhaustive maximiser of max_agree_value.
MaxAgreeResult exact_max_agree(const SignedCompleteGraph& g);

/// Per-vertex error allowance t_v, defined on the guaranteed vertices.
using ToleranceMap = std::vector<std::size_t>;

struct PerfectVerdict {
  bool perfect = false;
  std::optional<Vertex> first_violation;
};

/// True iff every guaranteed vertex has at most t_v incident errors.
/// Throws std::invalid_argument when t has the wrong length.
PerfectVerdict is_t_perfect(const SignedCompleteGraph& g, const Clustering& c,
                            const ToleranceMap& t);
PerfectVerdict is_t_perfect(const SignedBipartiteGraph& g, const Clustering& c,
                            const ToleranceMap& t);

}  // namespace localcc
