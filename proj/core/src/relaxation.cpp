#include "localcc/relaxation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace localcc {

namespace {

std::string pair_name(Vertex u, Vertex v) {
  return "x_" + std::to_string(u) + "_" + std::to_string(v);
}

// Adds the pair columns with their costs and all triangle rows.
template <class Graph, class CostFn>
void add_metric(LinearProgram& lp, const Graph& g, CostFn cost_of) {
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) lp.add_variable(pair_name(u, v), 0.0, 1.0, cost_of(u, v));

  auto col = [n](Vertex a, Vertex b) { return pair_index(a, b, n); };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const std::string tag = std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(c);
        lp.add_row({{col(a, c), 1.0}, {col(a, b), -1.0}, {col(b, c), -1.0}}, 0.0, "tri_ac_" + tag, true);
        lp.add_row({{col(a, b), 1.0}, {col(a, c), -1.0}, {col(b, c), -1.0}}, 0.0, "tri_ab_" + tag, true);
        lp.add_row({{col(b, c), 1.0}, {col(a, b), -1.0}, {col(a, c), -1.0}}, 0.0, "tri_bc_" + tag, true);
      }
}

// errvec(x)_v - M <= 0, rewritten with the constant of the - edges moved right.
template <class Graph>
void add_error_rows(LinearProgram& lp, const Graph& g, std::size_t m_column) {
  const std::size_t n = g.vertex_count();
  for (Vertex v = 0; v < g.guaranteed_count(); ++v) {
    std::vector<LinearProgram::Term> terms;
    double negatives = 0.0;
    for (Vertex w = 0; w < n; ++w) {
      const auto s = g.edge_sign(v, w);
      if (!s) continue;
      if (*s == Sign::positive) {
        terms.push_back({pair_index(v, w, n), 1.0});
      } else {
        terms.push_back({pair_index(v, w, n), -1.0});
        negatives += 1.0;
      }
    }
    terms.push_back({m_column, -1.0});
    lp.add_row(std::move(terms), -negatives, "err_" + std::to_string(v));
  }
}

template <class Graph>
LinearProgram minimax_impl(const Graph& g) {
  LinearProgram lp;
  add_metric(lp, g, [](Vertex, Vertex) { return 0.0; });
  const std::size_t m = lp.add_variable("M", 0.0, kInfinity, 1.0);
  add_error_rows(lp, g, m);
  return lp;
}

template <class Graph>
LinearProgram l1_impl(const Graph& g) {
  LinearProgram lp;
  double negatives = 0.0;
  add_metric(lp, g, [&](Vertex u, Vertex v) {
    const auto s = g.edge_sign(u, v);
    if (!s) return 0.0;
    if (*s == Sign::positive) return 1.0;
    negatives += 1.0;
    return -1.0;
  });
  lp.set_objective_offset(negatives);
  return lp;
}

template <class Graph>
RelaxationResult solve_impl(const Graph& g, const Objective& f) {
  if (!f.has_linear_relaxation())
    throw std::invalid_argument("objective " + f.name() + " has no linear relaxation");
  const LinearProgram lp =
      f.kind() == Objective::Kind::linf ? build_minimax_lp(g) : build_l1_lp(g);
  const LpSolution sol = solve(lp);
  RelaxationResult out;
  out.status = sol.status;
  out.iterations = sol.iterations;
  if (sol.status != LpStatus::optimal) return out;
  out.lp_value = sol.objective;
  out.fractional = fractional_from_solution(g.vertex_count(), sol);
  const ErrorVector e = error_vector(g, *out.fractional);
  out.objective_value = f.evaluate(guaranteed_part(g, e));
  return out;
}

}  // namespace

LinearProgram build_minimax_lp(const SignedCompleteGraph& g) {
  if (g.size() < 2) throw std::invalid_argument("minimax LP needs n >= 2");
  return minimax_impl(g);
}

LinearProgram build_minimax_lp(const SignedBipartiteGraph& g) { return minimax_impl(g); }

LinearProgram build_l1_lp(const SignedCompleteGraph& g) {
  if (g.size() < 2) throw std::invalid_argument("l1 LP needs n >= 2");
  return l1_impl(g);
}

LinearProgram build_l1_lp(const SignedBipartiteGraph& g) { return l1_impl(g); }

FractionalClustering fractional_from_solution(std::size_t vertex_count, const LpSolution& s) {
  const std::size_t pairs = pair_count(vertex_count);
  if (s.values.size() < pairs) throw std::invalid_argument("solution has too few columns");
  std::vector<double> d(s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(pairs));
  for (double& v : d) v = std::clamp(v, 0.0, 1.0);
  return FractionalClustering(vertex_count, std::move(d));
}

RelaxationResult solve_relaxation(const SignedCompleteGraph& g, const Objective& f) {
  return solve_impl(g, f);
}

RelaxationResult solve_relaxation(const SignedBipartiteGraph& g, const Objective& f) {
  return solve_impl(g, f);
}

}  // namespace localcc
