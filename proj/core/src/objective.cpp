#include "localcc/objective.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace localcc {

Objective Objective::lp(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp objective needs p >= 1");
  if (std::isinf(p)) return linf();
  return Objective(Kind::lp, p);
}

Objective Objective::parse(std::string_view text) {
  if (text == "linf") return linf();
  if (text == "l1") return l1_mean();
  if (text.starts_with("lp:")) {
    const std::string tail(text.substr(3));
    std::size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size())
      throw std::invalid_argument("malformed objective '" + std::string(text) + "'");
    return lp(p);
  }
  throw std::invalid_argument("unknown objective '" + std::string(text) +
                              "' (expected linf, l1 or lp:<p>)");
}

std::string Objective::name() const {
  switch (kind_) {
    case Kind::l1_mean:
      return "l1";
    case Kind::linf:
      return "linf";
    case Kind::lp: {
      std::ostringstream out;
      out.precision(17);
      out << "lp:" << p_;
      return out.str();
    }
  }
  return "?";
}

double Objective::evaluate(std::span<const double> errors) const {
  if (errors.empty()) return 0.0;
  switch (kind_) {
    case Kind::l1_mean: {
      double sum = 0.0;
      for (double e : errors) sum += std::abs(e);
      return sum / static_cast<double>(errors.size());
    }
    case Kind::linf: {
      double best = 0.0;
      for (double e : errors) best = std::max(best, std::abs(e));
      return best;
    }
    case Kind::lp: {
      // Scale by the max entry so large p does not overflow.
      double scale = 0.0;
      for (double e : errors) scale = std::max(scale, std::abs(e));
      if (scale == 0.0) return 0.0;
      double sum = 0.0;
      for (double e : errors) sum += std::pow(std::abs(e) / scale, p_);
      return scale * std::pow(sum, 1.0 / p_);
    }
  }
  return 0.0;
}

}  // namespace localcc
