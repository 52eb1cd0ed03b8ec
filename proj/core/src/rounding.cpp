#include "localcc/rounding.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace localcc {

RoundingParams default_params_complete() {
  return {.alpha = 0.465744, .gamma = 0.0887449, .k1 = 0.767566, .k2 = 0.117219, .k3 = 0.308433};
}

RoundingParams default_params_bipartite() {
  return {.alpha = 0.377, .gamma = 0.102, .k1 = 0.730, .k2 = std::nullopt, .k3 = std::nullopt};
}

namespace {

void check_thresholds(const RoundingParams& p, std::vector<std::string>& out) {
  if (!(p.gamma > 0.0)) out.emplace_back("gamma > 0");
  if (!(p.gamma < p.alpha)) out.emplace_back("gamma < alpha");
  if (!(p.alpha < 0.5)) out.emplace_back("alpha < 1/2");
}

}  // namespace

std::vector<std::string> check_params(const RoundingParams& p, GraphKind kind) {
  std::vector<std::string> out;
  check_thresholds(p, out);
  if (!(p.k1 * p.alpha > p.gamma)) out.emplace_back("k1*alpha > gamma");
  if (kind == GraphKind::bipartite) {
    if (!(p.k1 > 0.0 && p.k1 < 1.0)) out.emplace_back("0 < k1 < 1");
    return out;
  }
  if (!(p.k1 > 0.5 && p.k1 < 1.0)) out.emplace_back("1/2 < k1 < 1");
  if (!p.k2 || !p.k3) {
    out.emplace_back("k2 and k3 are required for complete graphs");
    return out;
  }
  const double k2 = *p.k2;
  const double k3 = *p.k3;
  if (!(k2 > 0.0)) out.emplace_back("k2 > 0");
  if (!(2.0 * k2 <= k3)) out.emplace_back("2*k2 <= k3");
  if (!(k3 < 0.5)) out.emplace_back("k3 < 1/2");
  if (!(k2 * p.alpha <= 1.0 - 2.0 * p.alpha)) out.emplace_back("k2*alpha <= 1 - 2*alpha");
  return out;
}

void require_params(const RoundingParams& p, GraphKind kind) {
  const auto failed = check_params(p, kind);
  if (failed.empty()) return;
  std::string msg = "rounding parameters violate:";
  for (const auto& f : failed) msg += " [" + f + "]";
  throw std::invalid_argument(msg);
}

double RatioTerms::ratio() const { return std::max({c1, c2, c3}); }

RatioTerms ratio_terms_complete(const RoundingParams& p) {
  require_params(p, GraphKind::complete);
  const double a = p.alpha;
  const double k2 = *p.k2;
  const double k3 = *p.k3;
  // Charge carried by the bank account of bad pivots, shared by c1..c3.
  const double bank = 1.0 / ((1.0 - 2.0 * k3) * (k3 - k2) * a);
  return {
      .c1 = bank + 1.0 / (1.0 - 2.0 * a) + 1.0 / (p.k1 * a - p.gamma),
      .c2 = bank + std::max(1.0 / ((1.0 - p.k1) * a), 1.0 / p.gamma),
      .c3 = bank + 1.0 / (k2 * a),
  };
}

RatioTerms ratio_terms_bipartite(const RoundingParams& p) {
  require_params(p, GraphKind::bipartite);
  const double a = p.alpha;
  return {
      .c1 = 1.0 / (1.0 - 2.0 * a) + 1.0 / (p.k1 * a - p.gamma),
      .c2 = std::max({1.0 / ((1.0 - p.k1) * a), 1.0 / p.gamma, 2.0 / a}),
      .c3 = std::max(1.0 / (1.0 - 2.0 * a), 2.0 / a),
  };
}

double ratio_constant_complete(const RoundingParams& p) { return ratio_terms_complete(p).ratio(); }
double ratio_constant_bipartite(const RoundingParams& p) {
  return ratio_terms_bipartite(p).ratio();
}

double cross_edge_ratio(double alpha) { return std::max(1.0 / (1.0 - 2.0 * alpha), 2.0 / alpha); }

namespace {

void require_inputs(std::size_t n, const FractionalClustering& x, const RoundingParams& p) {
  if (x.size() != n) throw std::invalid_argument("fractional clustering has the wrong size");
  std::vector<std::string> failed;
  check_thresholds(p, failed);
  if (!failed.empty()) throw std::invalid_argument("rounding thresholds violate " + failed.front());
  const auto violations = validate_fractional(x);
  if (!violations.empty())
    throw std::invalid_argument("fractional clustering violates " +
                                std::to_string(violations.size()) + " box/triangle constraints");
}

bool within(double d, double threshold) { return d <= threshold + kThresholdTolerance; }

class Emitter {
 public:
  Emitter(std::size_t n, bool keep_trace) : labels_(n, 0), alive_(n, true) {
    if (keep_trace) trace_.emplace();
  }

  bool alive(Vertex v) const { return alive_[v]; }

  void emit(EmissionType type, Vertex pivot, std::vector<Vertex> members,
            std::vector<Vertex> ball, std::vector<Vertex> core) {
    std::sort(members.begin(), members.end());
    for (Vertex v : members) {
      labels_[v] = next_label_;
      alive_[v] = false;
    }
    ++next_label_;
    if (trace_)
      trace_->emissions.push_back({type, pivot, std::move(members), std::move(ball), std::move(core)});
  }

  RoundingResult finish() && {
    return {Clustering::from_labels(labels_), std::move(trace_)};
  }

 private:
  std::vector<std::size_t> labels_;
  std::vector<bool> alive_;
  std::size_t next_label_ = 0;
  std::optional<RoundingTrace> trace_;
};

}  // namespace

RoundingResult round_complete(const SignedCompleteGraph& g, const FractionalClustering& x,
                              const RoundingParams& p, bool keep_trace) {
  const std::size_t n = g.size();
  require_inputs(n, x, p);
  Emitter out(n, keep_trace);

  for (std::size_t remaining = n; remaining > 0;) {
    Vertex pivot = n;
    std::size_t best_core = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (!out.alive(u)) continue;
      std::size_t core = 0;
      for (Vertex w = 0; w < n; ++w)
        if (w != u && out.alive(w) && within(x.distance(u, w), p.gamma)) ++core;
      if (pivot == n || core > best_core) {
        pivot = u;
        best_core = core;
      }
    }

    std::vector<Vertex> ball;
    std::vector<Vertex> core;
    double ball_sum = 0.0;
    for (Vertex w = 0; w < n; ++w) {
      if (w == pivot || !out.alive(w)) continue;
      const double d = x.distance(pivot, w);
      if (within(d, p.alpha)) {
        ball.push_back(w);
        ball_sum += d;
      }
      if (within(d, p.gamma)) core.push_back(w);
    }

    if (ball_sum >= p.alpha * static_cast<double>(ball.size()) / 2.0) {
      out.emit(EmissionType::type1, pivot, {pivot}, std::move(ball), std::move(core));
      remaining -= 1;
    } else {
      std::vector<Vertex> members = ball;
      members.push_back(pivot);
      remaining -= members.size();
      out.emit(EmissionType::type2, pivot, std::move(members), std::move(ball), std::move(core));
    }
  }
  return std::move(out).finish();
}

RoundingResult round_bipartite(const SignedBipartiteGraph& g, const FractionalClustering& x,
                               const RoundingParams& p, bool keep_trace) {
  const std::size_t n = g.vertex_count();
  const std::size_t n1 = g.left_size();
  require_inputs(n, x, p);
  Emitter out(n, keep_trace);

  for (std::size_t left_remaining = n1; left_remaining > 0;) {
    Vertex pivot = n;
    std::size_t best_core = 0;
    for (Vertex u = 0; u < n1; ++u) {
      if (!out.alive(u)) continue;
      std::size_t core = 0;
      for (Vertex w = n1; w < n; ++w)
        if (out.alive(w) && within(x.distance(u, w), p.gamma)) ++core;
      if (pivot == n || core > best_core) {
        pivot = u;
        best_core = core;
      }
    }

    std::vector<Vertex> ball;
    std::vector<Vertex> core;
    double right_sum = 0.0;
    std::size_t right_count = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (w == pivot || !out.alive(w)) continue;
      const double d = x.distance(pivot, w);
      if (within(d, p.alpha)) {
        ball.push_back(w);
        if (w >= n1) {
          right_sum += d;
          ++right_count;
        }
      }
      if (w >= n1 && within(d, p.gamma)) core.push_back(w);
    }

    if (right_sum >= p.alpha * static_cast<double>(right_count) / 2.0) {
      out.emit(EmissionType::type1, pivot, {pivot}, std::move(ball), std::move(core));
      left_remaining -= 1;
    } else {
      std::vector<Vertex> members = ball;
      members.push_back(pivot);
      for (Vertex v : members)
        if (v < n1) --left_remaining;
      out.emit(EmissionType::type2, pivot, std::move(members), std::move(ball), std::move(core));
    }
  }

  for (Vertex w = n1; w < n; ++w)
    if (out.alive(w)) out.emit(EmissionType::leftover, w, {w}, {}, {});
  return std::move(out).finish();
}

std::string dump_trace(const RoundingTrace& trace) {
  std::ostringstream out;
  for (const Emission& e : trace.emissions) {
    switch (e.type) {
      case EmissionType::type1:
        out << "type1 pivot=" << e.pivot << '\n';
        break;
      case EmissionType::type2: {
        out << "type2 pivot=" << e.pivot << " members=";
        for (std::size_t i = 0; i < e.members.size(); ++i) out << (i ? "," : "") << e.members[i];
        out << '\n';
        break;
      }
      case EmissionType::leftover:
        out << "leftover vertex=" << e.pivot << '\n';
        break;
    }
  }
  return out.str();
}

}  // namespace localcc
