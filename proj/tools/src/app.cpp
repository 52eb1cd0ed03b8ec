#include "localcc_app/app.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "localcc/acn.hpp"
#include "localcc/audit.hpp"
#include "localcc/exact.hpp"
#include "localcc/instance_io.hpp"
#include "localcc/objective.hpp"
#include "localcc/random.hpp"
#include "localcc/relaxation.hpp"
#include "localcc/rounding.hpp"

#ifndef LOCALCC_VERSION
#define LOCALCC_VERSION "0.0.0"
#endif

namespace localcc::app {

namespace {

constexpr double kSandwichTolerance = 1e-6;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json params_json(const RoundingParams& p) {
  Json j;
  j["alpha"] = p.alpha;
  j["gamma"] = p.gamma;
  j["k1"] = p.k1;
  j["k2"] = p.k2 ? Json(*p.k2) : Json(nullptr);
  j["k3"] = p.k3 ? Json(*p.k3) : Json(nullptr);
  return j;
}

RoundingParams apply_overrides(RoundingParams p, const ParamOverrides& o) {
  if (o.alpha) p.alpha = *o.alpha;
  if (o.gamma) p.gamma = *o.gamma;
  if (o.k1) p.k1 = *o.k1;
  if (o.k2) p.k2 = *o.k2;
  if (o.k3) p.k3 = *o.k3;
  return p;
}

Json instance_json(const SignedCompleteGraph& g, const InstanceDescriptor& d) {
  Json j;
  j["source"] = d.source;
  j["kind"] = "complete";
  j["n"] = g.size();
  j["positive_edges"] = g.positive_edge_count();
  j["negative_edges"] = g.negative_edge_count();
  j["seed"] = d.seed ? Json(*d.seed) : Json(nullptr);
  return j;
}

Json instance_json(const SignedBipartiteGraph& g, const InstanceDescriptor& d) {
  Json j;
  j["source"] = d.source;
  j["kind"] = "bipartite";
  j["n1"] = g.left_size();
  j["n2"] = g.right_size();
  j["positive_edges"] = g.positive_edge_count();
  j["negative_edges"] = g.left_size() * g.right_size() - g.positive_edge_count();
  j["seed"] = d.seed ? Json(*d.seed) : Json(nullptr);
  return j;
}

GraphKind kind_of(const SignedCompleteGraph&) { return GraphKind::complete; }
GraphKind kind_of(const SignedBipartiteGraph&) { return GraphKind::bipartite; }
RoundingParams defaults_for(const SignedCompleteGraph&) { return default_params_complete(); }
RoundingParams defaults_for(const SignedBipartiteGraph&) { return default_params_bipartite(); }
double ratio_for(const SignedCompleteGraph&, const RoundingParams& p) {
  return ratio_constant_complete(p);
}
double ratio_for(const SignedBipartiteGraph&, const RoundingParams& p) {
  return ratio_constant_bipartite(p);
}
RoundingResult round_for(const SignedCompleteGraph& g, const FractionalClustering& x,
                         const RoundingParams& p) {
  return round_complete(g, x, p, true);
}
RoundingResult round_for(const SignedBipartiteGraph& g, const FractionalClustering& x,
                         const RoundingParams& p) {
  return round_bipartite(g, x, p, true);
}

Json vector_json(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

template <class Graph>
PipelineOutcome pipeline_impl(const Graph& g, const InstanceDescriptor& desc,
                              const PipelineOptions& o) {
  constexpr bool complete = std::is_same_v<Graph, SignedCompleteGraph>;

  // Everything is validated before any stage runs.
  const Objective f = Objective::parse(o.objective);
  if (!complete && (o.params.k2 || o.params.k3))
    throw std::invalid_argument("--k2 and --k3 apply to complete graphs only");
  const RoundingParams params = apply_overrides(defaults_for(g), o.params);
  require_params(params, kind_of(g));
  const bool relax = f.has_linear_relaxation();
  if (!relax && !o.exact)
    throw std::invalid_argument("objective " + f.name() + " is evaluation-only and needs --exact");
  const bool round = relax && o.round;
  if (o.audit && !round) throw std::invalid_argument("--audit needs the rounding stage");
  if (o.acn && !complete) throw std::invalid_argument("--acn is defined for complete graphs only");
  if (o.exact && g.vertex_count() > kExactVertexCap)
    throw InstanceTooLarge("--exact supports at most " + std::to_string(kExactVertexCap) +
                           " vertices, instance has " + std::to_string(g.vertex_count()));

  const double c = ratio_for(g, params);
  PipelineOutcome out;
  Json& r = out.report;
  Json timing;
  r["schema"] = "localcc.run_report/1";
  r["instance"] = instance_json(g, desc);
  r["objective"] = f.name();
  r["seeds"] = {{"acn", o.acn ? Json(o.seed) : Json(nullptr)}};
  r["params"] = params_json(params);
  r["ratio_constant"] = c;

  std::optional<double> lp_value;
  std::optional<double> rounded_value;
  std::optional<double> exact_value;

  std::optional<FractionalClustering> x;
  if (relax) {
    Stopwatch sw;
    RelaxationResult rel = solve_relaxation(g, f);
    timing["lp_ms"] = sw.ms();
    if (rel.status != LpStatus::optimal)
      throw std::runtime_error(std::string("LP solve ended with status ") +
                               std::string(to_string(rel.status)));
    lp_value = rel.objective_value;
    x = std::move(rel.fractional);
    r["lp"] = {{"status", std::string(to_string(rel.status))},
               {"program_value", rel.lp_value},
               {"value", rel.objective_value},
               {"iterations", rel.iterations}};
  } else {
    r["lp"] = nullptr;
  }

  if (round) {
    Stopwatch sw;
    const RoundingResult res = round_for(g, *x, params);
    timing["rounding_ms"] = sw.ms();
    const ErrorVector e = error_vector(g, res.clustering);
    const auto part = guaranteed_part(g, e);
    rounded_value = f.evaluate(part);
    Json rj;
    rj["clusters"] = res.clustering.cluster_count();
    rj["assignment"] = res.clustering.assignment();
    rj["error_vector"] = vector_json(part);
    rj["value"] = *rounded_value;
    rj["ratio"] = *lp_value > 0.0 ? Json(*rounded_value / *lp_value) : Json(nullptr);
    r["rounded"] = rj;

    if (o.audit) {
      Stopwatch swa;
      const CrossEdgeAudit audit = audit_cross_edge_bound(g, *x, *res.trace, params);
      timing["audit_ms"] = swa.ms();
      out.audit_violations = audit.violations;
      r["audit"] = {{"bound", audit.bound},
                    {"checks", audit.checks.size()},
                    {"violations", audit.violations},
                    {"worst_ratio", audit.worst_ratio}};
    } else {
      r["audit"] = nullptr;
    }
  } else {
    r["rounded"] = nullptr;
    r["audit"] = nullptr;
  }

  if (o.exact) {
    Stopwatch sw;
    const ExactResult ex = exact_best(g, f);
    timing["exact_ms"] = sw.ms();
    exact_value = ex.value;
    r["exact"] = {{"value", ex.value},
                  {"clusters", ex.best.cluster_count()},
                  {"assignment", ex.best.assignment()},
                  {"partitions_examined", ex.partitions_examined}};
  } else {
    r["exact"] = nullptr;
  }

  if constexpr (complete) {
    if (o.acn) {
      Stopwatch sw;
      const Clustering a = acn_cluster(g, o.seed);
      timing["acn_ms"] = sw.ms();
      const ErrorVector e = error_vector(g, a);
      r["acn"] = {{"clusters", a.cluster_count()},
                  {"error_vector", vector_json(e)},
                  {"value", f.evaluate(e)}};
    } else {
      r["acn"] = nullptr;
    }
  } else {
    r["acn"] = nullptr;
  }

  Json checks;
  if (lp_value && exact_value && rounded_value)
    checks["sandwich"] = *lp_value <= *exact_value + kSandwichTolerance &&
                         *exact_value <= *rounded_value + kSandwichTolerance;
  else
    checks["sandwich"] = nullptr;
  if (lp_value && rounded_value && *lp_value > 0.0)
    checks["ratio_within_c"] = *rounded_value <= c * *lp_value + kSandwichTolerance;
  else
    checks["ratio_within_c"] = nullptr;
  r["checks"] = checks;
  r["timing"] = timing.is_null() ? Json::object() : timing;
  return out;
}

std::string format_number(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
  return buf;
}

struct SweepItem {
  std::size_t size;
  std::uint64_t seed;
  GenerateOptions gen;
};

std::vector<SweepItem> sweep_items(const SweepOptions& o) {
  const bool random = o.family == "random-complete" || o.family == "random-bipartite";
  if (!random && o.family != "matching" && o.family != "star")
    throw std::invalid_argument("unknown family '" + o.family + "'");
  std::vector<SweepItem> items;
  for (std::size_t s = o.from; s <= o.to && o.from <= o.to; ++s) {
    const std::size_t trials = random ? o.trials : 1;
    for (std::size_t i = 0; i < trials; ++i) {
      SweepItem it;
      it.size = s;
      it.seed = random ? SplitMix64::split(o.seed, s * 1000003ULL + i) : o.seed;
      it.gen.family = o.family;
      it.gen.t = it.gen.n = it.gen.n1 = it.gen.n2 = s;
      it.gen.p_plus = o.p_plus;
      it.gen.seed = it.seed;
      items.push_back(it);
    }
    if (s == static_cast<std::size_t>(-1)) break;
  }
  return items;
}

std::string sweep_row(const SweepOptions& o, const SweepItem& item, std::size_t& violations) {
  const SignedGraph g = generate_instance(item.gen);
  PipelineOptions po = o.pipeline;
  po.seed = item.seed;
  const InstanceDescriptor desc{o.family, item.seed};
  const PipelineOutcome res =
      std::visit([&](const auto& graph) { return run_pipeline(graph, desc, po); }, g);
  violations = res.audit_violations;
  const Json& r = res.report;
  auto field = [](const Json& section, const char* key) {
    return section.is_null() ? Json(nullptr) : section[key];
  };
  std::vector<std::string> cells = {
      o.family,
      std::to_string(item.size),
      std::to_string(item.seed),
      r["objective"].get<std::string>(),
      format_number(field(r["lp"], "value")),
      format_number(field(r["rounded"], "value")),
      format_number(field(r["exact"], "value")),
      format_number(field(r["acn"], "value")),
      format_number(field(r["rounded"], "ratio")),
      format_number(r["ratio_constant"]),
      format_number(field(r["audit"], "violations")),
  };
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

PipelineOutcome pipeline_dispatch(const SignedGraph& g, const InstanceDescriptor& d,
                                  const PipelineOptions& o) {
  return std::visit([&](const auto& graph) { return pipeline_impl(graph, d, o); }, g);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

SignedGraph read_input(const std::string& path) {
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    return parse_instance(text);
  }
  return read_instance_file(path);
}

void add_pipeline_flags(CLI::App& cmd, PipelineOptions& o) {
  cmd.add_option("--objective,-f", o.objective, "linf, l1 or lp:<p>")->capture_default_str();
  cmd.add_flag("--round,!--no-round", o.round, "Round the LP solution (default on)");
  cmd.add_flag("--exact", o.exact, "Run the exhaustive oracle (at most 13 vertices)");
  cmd.add_flag("--acn", o.acn, "Run the random-pivot baseline");
  cmd.add_flag("--audit", o.audit, "Audit the cross-edge charge bound");
  cmd.add_option("--alpha", o.params.alpha, "Override alpha");
  cmd.add_option("--gamma", o.params.gamma, "Override gamma");
  cmd.add_option("--k1", o.params.k1, "Override k1");
  cmd.add_option("--k2", o.params.k2, "Override k2");
  cmd.add_option("--k3", o.params.k3, "Override k3");
}

}  // namespace

SignedGraph generate_instance(const GenerateOptions& o) {
  auto need = [&](std::size_t v, const char* what) {
    if (v == 0) throw std::invalid_argument(o.family + " needs " + what + " >= 1");
  };
  if (o.family == "matching") {
    need(o.t, "--t");
    return make_matching_instance(o.t);
  }
  if (o.family == "star") {
    need(o.n, "--n");
    return make_star_instance(o.n);
  }
  if (o.family == "random-complete") {
    need(o.n, "--n");
    return make_random_complete(o.n, o.p_plus, o.seed);
  }
  if (o.family == "random-bipartite") {
    need(o.n1, "--n1");
    need(o.n2, "--n2");
    return make_random_bipartite(o.n1, o.n2, o.p_plus, o.seed);
  }
  throw std::invalid_argument("unknown family '" + o.family + "'");
}

PipelineOutcome run_pipeline(const SignedGraph& g, const InstanceDescriptor& desc,
                             const PipelineOptions& o) {
  return pipeline_dispatch(g, desc, o);
}

Json strip_timing(const Json& report) {
  Json copy = report;
  copy.erase("timing");
  return copy;
}

std::string run_sweep(const SweepOptions& o, std::size_t* total_violations) {
  const std::vector<SweepItem> items = sweep_items(o);
  // Fail fast on bad options before spawning workers.
  Objective::parse(o.pipeline.objective);

  std::vector<std::string> rows(items.size());
  std::vector<std::size_t> violations(items.size(), 0);
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        rows[i] = sweep_row(o, items[i], violations[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(items.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::string out;
  const auto& cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  std::size_t total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += rows[i];
    out += '\n';
    total += violations[i];
  }
  if (total_violations) *total_violations = total;
  return out;
}

std::string version_text() {
  std::ostringstream out;
  out.precision(10);
  const RoundingParams c = default_params_complete();
  const RoundingParams b = default_params_bipartite();
  out << "localcc " << LOCALCC_VERSION << "\n"
      << "complete:  alpha=" << c.alpha << " gamma=" << c.gamma << " k1=" << c.k1
      << " k2=" << *c.k2 << " k3=" << *c.k3 << " ratio=" << ratio_constant_complete(c) << "\n"
      << "bipartite: alpha=" << b.alpha << " gamma=" << b.gamma << " k1=" << b.k1
      << " ratio=" << ratio_constant_bipartite(b);
  return out.str();
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Correlation clustering with local objectives", "localcc"};
  app.set_version_flag("--version", version_text());
  app.require_subcommand(1);

  GenerateOptions gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write an instance file");
  generate->add_option("family", gen.family, "matching | star | random-complete | random-bipartite")
      ->required();
  generate->add_option("--t", gen.t, "Matching pairs");
  generate->add_option("--n", gen.n, "Vertex count (star: leaves)");
  generate->add_option("--n1", gen.n1, "Bipartite side V1");
  generate->add_option("--n2", gen.n2, "Bipartite side V2");
  generate->add_option("--p-plus", gen.p_plus, "Probability of a + pair")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  generate->add_option("--out,-o", gen_out, "Output path (default stdout)");

  PipelineOptions pipe;
  std::string pipe_in;
  auto* pipeline = app.add_subcommand("pipeline", "Solve, round and evaluate one instance");
  pipeline->add_option("instance", pipe_in, "Instance file, or - for stdin")->required();
  add_pipeline_flags(*pipeline, pipe);
  pipeline->add_option("--seed", pipe.seed, "Seed for the random-pivot baseline")
      ->capture_default_str();

  SweepOptions sweep;
  std::vector<std::size_t> range;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the pipeline over a family, CSV on stdout");
  sweep_cmd->add_option("family", sweep.family, "matching | star | random-complete | random-bipartite")
      ->required();
  sweep_cmd->add_option("--sizes", range, "Inclusive size range FROM TO")->expected(2)->required();
  sweep_cmd->add_option("--trials", sweep.trials, "Instances per size (random families)")
      ->capture_default_str();
  sweep_cmd->add_option("--p-plus", sweep.p_plus, "Probability of a + pair")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed")->capture_default_str();
  sweep_cmd->add_option("--jobs,-j", sweep.jobs, "Worker threads")->capture_default_str();
  add_pipeline_flags(*sweep_cmd, sweep.pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*generate) {
      write_output(gen_out, serialize_instance(generate_instance(gen)));
      return 0;
    }
    if (*pipeline) {
      const SignedGraph g = read_input(pipe_in);
      const PipelineOutcome res = run_pipeline(g, {pipe_in, std::nullopt}, pipe);
      std::cout << res.report.dump(2) << '\n';
      if (res.audit_violations > 0) {
        std::cerr << "audit: " << res.audit_violations << " cross-edge bound violation(s)\n";
        return kExitAuditViolation;
      }
      return 0;
    }
    sweep.from = range[0];
    sweep.to = range[1];
    std::size_t violations = 0;
    std::cout << run_sweep(sweep, &violations);
    if (violations > 0) {
      std::cerr << "audit: " << violations << " cross-edge bound violation(s)\n";
      return kExitAuditViolation;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace localcc::app
