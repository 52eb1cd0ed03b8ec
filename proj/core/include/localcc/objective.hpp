#pragma once

#include <span>
#include <string>
#include <string_view>

#include "localcc/clustering.hpp"

namespace localcc {

/// Objective applied to an error vector. All three kinds are positively
/// homogeneous and monotone on the nonnegative orthant.
class Objective {
 public:
  enum class Kind { l1_mean, lp, linf };

  static Objective l1_mean() { return Objective(Kind::l1_mean, 1.0); }
  static Objective linf() { return Objective(Kind::linf, 0.0); }
  /// Throws std::invalid_argument unless p >= 1.
  static Objective lp(double p);

  /// Accepts "l1", "linf" and "lp:<p>".
  static Objective parse(std::string_view text);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  /// Round-trips through parse().
  std::string name() const;

  /// True for the kinds that have an LP relaxation (l1 and linf).
  bool has_linear_relaxation() const { return kind_ != Kind::lp; }

  double evaluate(std::span<const double> errors) const;

  friend bool operator==(const Objective&, const Objective&) = default;

 private:
  Objective(Kind kind, double p) : kind_(kind), p_(p) {}
  Kind kind_;
  double p_;
};

inline double evaluate_objective(const Objective& f, std::span<const double> errors) {
  return f.evaluate(errors);
}

/// The prefix of an error vector that carries guarantees: everything for a
/// complete graph, V1 for a bipartite graph.
inline std::span<const double> guaranteed_part(const SignedCompleteGraph& g, const ErrorVector& e) {
  return std::span<const double>(e).first(g.guaranteed_count());
}
inline std::span<const double> guaranteed_part(const SignedBipartiteGraph& g,
                                               const ErrorVector& e) {
  return std::span<const double>(e).first(g.guaranteed_count());
}

}  // namespace localcc
