#include "localcc/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace localcc {

std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::infeasible:
      return "infeasible";
    case LpStatus::unbounded:
      return "unbounded";
    case LpStatus::iteration_limit:
      return "iteration_limit";
  }
  return "unknown";
}

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kPrimalTolerance = 1e-9;
constexpr double kDualTolerance = 1e-12;
constexpr double kRatioTie = 1e-12;

// Condensed tableau: row i reads  x_{basic[i]} + sum_k T(i,k) x_{nonbasic[k]} = const.
// Variables 0..n-1 are structural; variable n+r is the slack (>= 0) of LP row r.
// Only the working set of rows lives in the tableau; lazy rows join it as
// cuts, which keeps the current basis dual feasible.
class DualSimplex {
 public:
  DualSimplex(const LinearProgram& lp, const SimplexOptions& options)
      : lp_(lp),
        options_(options),
        n_(lp.variable_count()),
        nonbasic_(n_),
        at_upper_(n_, false),
        nonbasic_value_(n_, 0.0),
        reduced_cost_(n_, 0.0),
        lower_(n_ + lp.row_count(), 0.0),
        upper_(n_ + lp.row_count(), kInfinity),
        artificial_(n_ + lp.row_count(), false),
        position_(n_ + lp.row_count(), kNone),
        column_(n_ + lp.row_count(), kNone),
        active_(lp.row_count(), false) {}

  LpSolution run() {
    initialize();
    const std::size_t cap =
        options_.max_iterations ? options_.max_iterations : 100 * (lp_.row_count() + n_ + 1);

    LpSolution out;
    for (;;) {
      const LpStatus status = optimize(cap, out.iterations);
      if (status != LpStatus::optimal) {
        out.status = status;
        return out;
      }
      if (activate_violated_rows() == 0) break;
    }

    for (std::size_t k = 0; k < n_; ++k) {
      if (artificial_[nonbasic_[k]] && std::abs(reduced_cost_[k]) > kLpTolerance) {
        out.status = LpStatus::unbounded;
        return out;
      }
    }

    out.values = structural_values();
    for (std::size_t j = 0; j < n_; ++j) {
      // Snap float noise back inside finite bounds.
      const double lo = lp_.lower_bounds()[j];
      const double hi = lp_.upper_bounds()[j];
      if (out.values[j] < lo && out.values[j] > lo - kLpTolerance) out.values[j] = lo;
      if (out.values[j] > hi && out.values[j] < hi + kLpTolerance) out.values[j] = hi;
    }
    out.objective = lp_.objective_at(out.values);
    out.status = LpStatus::optimal;
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t rows() const { return basic_.size(); }
  double* row_ptr(std::size_t i) { return &tableau_[i * n_]; }
  const double* row_ptr(std::size_t i) const { return &tableau_[i * n_]; }

  void initialize() {
    const auto& lo = lp_.lower_bounds();
    const auto& hi = lp_.upper_bounds();
    const auto& cost = lp_.costs();
    const double big = options_.artificial_bound;

    for (std::size_t j = 0; j < n_; ++j) {
      lower_[j] = lo[j];
      upper_[j] = hi[j];
      nonbasic_[j] = j;
      column_[j] = j;
      reduced_cost_[j] = cost[j];
      bool upper_side = cost[j] < 0.0;
      if (cost[j] == 0.0 && std::isinf(lo[j]) && !std::isinf(hi[j])) upper_side = true;
      if (upper_side && std::isinf(hi[j])) {
        upper_[j] = std::max(big, lo[j] + big);
        artificial_[j] = true;
      }
      if (!upper_side && std::isinf(lo[j])) {
        lower_[j] = std::min(-big, hi[j] - big);
        artificial_[j] = true;
      }
      at_upper_[j] = upper_side;
      nonbasic_value_[j] = upper_side ? upper_[j] : lower_[j];
    }

    for (std::size_t r = 0; r < lp_.row_count(); ++r)
      if (!options_.lazy_rows || !lp_.rows()[r].lazy) append_row(r);
  }

  double value_of(std::size_t var) const {
    if (position_[var] != kNone) return basic_value_[position_[var]];
    return nonbasic_value_[column_[var]];
  }

  std::vector<double> structural_values() const {
    std::vector<double> x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = value_of(j);
    return x;
  }

  // Expresses LP row r in terms of the current nonbasic columns and makes its
  // slack basic.
  void append_row(std::size_t r) {
    const auto& row = lp_.rows()[r];
    const std::size_t i = rows();
    tableau_.resize((i + 1) * n_, 0.0);
    double* t = row_ptr(i);
    double activity = 0.0;
    for (const auto& term : row.terms) {
      const std::size_t var = term.column;
      activity += term.coefficient * value_of(var);
      if (position_[var] == kNone) {
        t[column_[var]] += term.coefficient;
      } else {
        const double* b = row_ptr(position_[var]);
        for (std::size_t k = 0; k < n_; ++k) t[k] -= term.coefficient * b[k];
      }
    }
    const std::size_t slack = n_ + r;
    basic_.push_back(slack);
    basic_value_.push_back(row.rhs - activity);
    position_[slack] = i;
    active_[r] = true;
  }

  std::size_t activate_violated_rows() {
    const std::vector<double> x = structural_values();
    std::size_t added = 0;
    for (std::size_t r = 0; r < lp_.row_count(); ++r) {
      if (active_[r]) continue;
      const auto& row = lp_.rows()[r];
      double lhs = 0.0;
      for (const auto& term : row.terms) lhs += term.coefficient * x[term.column];
      if (lhs > row.rhs + kPrimalTolerance) {
        append_row(r);
        ++added;
      }
    }
    return added;
  }

  LpStatus optimize(std::size_t cap, std::size_t& iterations) {
    std::size_t degenerate_streak = 0;
    for (;;) {
      const auto row = choose_leaving(bland_);
      if (row == kNone) return LpStatus::optimal;
      if (iterations >= cap) return LpStatus::iteration_limit;
      const auto col = choose_entering(row, bland_);
      if (col == kNone) return LpStatus::infeasible;
      const double step = pivot(row, col);
      ++iterations;
      if (step <= kDualTolerance) {
        if (++degenerate_streak >= options_.degenerate_streak_limit) bland_ = true;
      } else {
        degenerate_streak = 0;
      }
    }
  }

  double infeasibility(std::size_t i) const {
    const std::size_t var = basic_[i];
    const double v = basic_value_[i];
    if (v < lower_[var]) return lower_[var] - v;
    if (v > upper_[var]) return v - upper_[var];
    return 0.0;
  }

  std::size_t choose_leaving(bool bland) const {
    std::size_t best = kNone;
    double best_score = kPrimalTolerance;
    for (std::size_t i = 0; i < rows(); ++i) {
      const double inf = infeasibility(i);
      if (inf <= kPrimalTolerance) continue;
      if (bland) {
        if (best == kNone || basic_[i] < basic_[best]) best = i;
      } else if (inf > best_score) {
        best_score = inf;
        best = i;
      }
    }
    return best;
  }

  std::size_t choose_entering(std::size_t row, bool bland) const {
    const std::size_t var = basic_[row];
    const bool raise = basic_value_[row] < lower_[var];
    const double* t = row_ptr(row);
    std::size_t best = kNone;
    double best_ratio = kInfinity;
    double best_pivot = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t cand = nonbasic_[k];
      if (lower_[cand] == upper_[cand]) continue;
      const double a = t[k];
      if (std::abs(a) <= kPivotTolerance) continue;
      // Moving x_k by s changes the leaving variable by -a*s; at its lower
      // bound x_k may only increase, at its upper bound only decrease.
      const bool increases = !at_upper_[k];
      const bool helps = raise ? (increases ? a < 0 : a > 0) : (increases ? a > 0 : a < 0);
      if (!helps) continue;
      const double d = at_upper_[k] ? std::max(-reduced_cost_[k], 0.0)
                                    : std::max(reduced_cost_[k], 0.0);
      const double ratio = d / std::abs(a);
      bool take = false;
      if (best == kNone || ratio < best_ratio - kRatioTie) {
        take = true;
      } else if (ratio <= best_ratio + kRatioTie) {
        take = bland ? cand < nonbasic_[best] : std::abs(a) > best_pivot;
      }
      if (take) {
        best = k;
        best_ratio = std::min(ratio, best_ratio);
        best_pivot = std::abs(a);
      }
    }
    return best;
  }

  // Returns the dual step length (0 for a degenerate pivot).
  double pivot(std::size_t r, std::size_t k) {
    const std::size_t leaving = basic_[r];
    const std::size_t entering = nonbasic_[k];
    const double target =
        basic_value_[r] < lower_[leaving] ? lower_[leaving] : upper_[leaving];
    double* prow = row_ptr(r);
    const double p = prow[k];
    const double step = (basic_value_[r] - target) / p;

    for (std::size_t i = 0; i < rows(); ++i) basic_value_[i] -= row_ptr(i)[k] * step;
    const double entering_value = nonbasic_value_[k] + step;

    const double theta = reduced_cost_[k] / p;
    for (std::size_t j = 0; j < n_; ++j)
      if (j != k) reduced_cost_[j] -= theta * prow[j];
    reduced_cost_[k] = -theta;

    const double inv = 1.0 / p;
    for (std::size_t j = 0; j < n_; ++j) prow[j] *= inv;
    prow[k] = inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r) continue;
      double* row = row_ptr(i);
      const double factor = row[k];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) row[j] -= factor * prow[j];
      row[k] = -factor * inv;
    }

    basic_[r] = entering;
    basic_value_[r] = entering_value;
    position_[entering] = r;
    column_[entering] = kNone;
    nonbasic_[k] = leaving;
    nonbasic_value_[k] = target;
    position_[leaving] = kNone;
    column_[leaving] = k;
    at_upper_[k] = target == upper_[leaving] && target != lower_[leaving];
    return std::abs(theta);
  }

  const LinearProgram& lp_;
  SimplexOptions options_;
  std::size_t n_;
  std::vector<double> tableau_;  // row-major, rows() x n_
  std::vector<std::size_t> basic_;
  std::vector<double> basic_value_;
  std::vector<std::size_t> nonbasic_;
  std::vector<bool> at_upper_;
  std::vector<double> nonbasic_value_;
  std::vector<double> reduced_cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<bool> artificial_;
  std::vector<std::size_t> position_;  // var -> tableau row, or kNone
  std::vector<std::size_t> column_;    // var -> nonbasic column, or kNone
  std::vector<bool> active_;           // LP row is in the tableau
  bool bland_ = false;
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const SimplexOptions& options) {
  lp.check();
  return DualSimplex(lp, options).run();
}

}  // namespace localcc
