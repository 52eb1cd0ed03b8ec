#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace localcc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Feasibility / optimality tolerance for LP solutions.
inline constexpr double kLpTolerance = 1e-7;

/// min c^T x + offset  s.t.  A x <= b,  lo <= x <= hi.
/// Rows are sparse; every row has sense <=.
class LinearProgram {
 public:
  struct Term {
    std::size_t column;
    double coefficient;
  };
  struct Row {
    std::vector<Term> terms;
    double rhs;
    std::string name;
    /// Lazy rows start outside the working set and are added by the solver
    /// only once the current point violates them.
    bool lazy = false;
  };

  std::size_t add_variable(std::string name, double lower, double upper, double cost = 0.0);
  std::size_t add_row(std::vector<Term> terms, double rhs, std::string name = {},
                      bool lazy = false);

  void set_objective_offset(double offset) { offset_ = offset; }

  std::size_t variable_count() const { return cost_.size(); }
  std::size_t row_count() const { return rows_.size(); }

  const std::vector<double>& costs() const { return cost_; }
  double objective_offset() const { return offset_; }
  const std::vector<double>& lower_bounds() const { return lower_; }
  const std::vector<double>& upper_bounds() const { return upper_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Throws std::invalid_argument on out-of-range columns or lo > hi.
  void check() const;

  double objective_at(const std::vector<double>& x) const;
  /// Largest bound or row violation at x (0 when feasible).
  double max_violation(const std::vector<double>& x) const;

  /// Plain-text dump: objective, then one row per line, then bounds.
  /// Variable order is insertion order, so it is deterministic.
  std::string dump() const;

 private:
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
  std::vector<Row> rows_;
  double offset_ = 0.0;
};

}  // namespace localcc
