#include "localcc/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace localcc {

std::size_t LinearProgram::add_variable(std::string name, double lower, double upper,
                                        double cost) {
  if (lower > upper) throw std::invalid_argument("variable '" + name + "' has lo > hi");
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  names_.push_back(std::move(name));
  return cost_.size() - 1;
}

std::size_t LinearProgram::add_row(std::vector<Term> terms, double rhs, std::string name,
                                   bool lazy) {
  for (const Term& t : terms)
    if (t.column >= cost_.size()) throw std::invalid_argument("row references unknown column");
  rows_.push_back({std::move(terms), rhs, std::move(name), lazy});
  return rows_.size() - 1;
}

void LinearProgram::check() const {
  const std::size_t n = cost_.size();
  if (lower_.size() != n || upper_.size() != n || names_.size() != n)
    throw std::invalid_argument("inconsistent column dimensions");
  for (std::size_t j = 0; j < n; ++j)
    if (lower_[j] > upper_[j]) throw std::invalid_argument("variable '" + names_[j] + "' has lo > hi");
  for (const Row& r : rows_)
    for (const Term& t : r.terms)
      if (t.column >= n) throw std::invalid_argument("row references unknown column");
}

double LinearProgram::objective_at(const std::vector<double>& x) const {
  if (x.size() != cost_.size()) throw std::invalid_argument("dimension mismatch");
  double value = offset_;
  for (std::size_t j = 0; j < x.size(); ++j) value += cost_[j] * x[j];
  return value;
}

double LinearProgram::max_violation(const std::vector<double>& x) const {
  if (x.size() != cost_.size()) throw std::invalid_argument("dimension mismatch");
  double worst = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    worst = std::max(worst, lower_[j] - x[j]);
    worst = std::max(worst, x[j] - upper_[j]);
  }
  for (const Row& r : rows_) {
    double lhs = 0.0;
    for (const Term& t : r.terms) lhs += t.coefficient * x[t.column];
    worst = std::max(worst, lhs - r.rhs);
  }
  return worst;
}

namespace {

void write_linear(std::ostringstream& out, const std::vector<LinearProgram::Term>& terms,
                  const std::vector<std::string>& names) {
  bool first = true;
  for (const auto& t : terms) {
    if (t.coefficient == 0.0) continue;
    const double mag = std::abs(t.coefficient);
    if (first)
      out << (t.coefficient < 0 ? "-" : "");
    else
      out << (t.coefficient < 0 ? " - " : " + ");
    if (mag != 1.0) out << mag << ' ';
    out << names[t.column];
    first = false;
  }
  if (first) out << '0';
}

void write_bound(std::ostringstream& out, double v) {
  if (v == kInfinity)
    out << "inf";
  else if (v == -kInfinity)
    out << "-inf";
  else
    out << v;
}

}  // namespace

std::string LinearProgram::dump() const {
  std::ostringstream out;
  out.precision(17);
  std::vector<Term> objective;
  for (std::size_t j = 0; j < cost_.size(); ++j)
    if (cost_[j] != 0.0) objective.push_back({j, cost_[j]});
  out << "min ";
  write_linear(out, objective, names_);
  if (offset_ != 0.0) out << (offset_ < 0 ? " - " : " + ") << std::abs(offset_);
  out << '\n';
  for (const Row& r : rows_) {
    if (!r.name.empty()) out << r.name << ": ";
    write_linear(out, r.terms, names_);
    out << " <= " << (r.rhs == 0.0 ? 0.0 : r.rhs) << '\n';  // no "-0"
  }
  for (std::size_t j = 0; j < cost_.size(); ++j) {
    out << "bound ";
    write_bound(out, lower_[j]);
    out << " <= " << names_[j] << " <= ";
    write_bound(out, upper_[j]);
    out << '\n';
  }
  return out.str();
}

}  // namespace localcc
