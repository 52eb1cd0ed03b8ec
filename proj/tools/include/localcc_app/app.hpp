#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "localcc/signed_graph.hpp"

namespace localcc::app {

using Json = nlohmann::ordered_json;

/// Exit status when --audit finds a violated cross-edge bound.
inline constexpr int kExitAuditViolation = 2;
/// Exit status for any failed stage or bad input.
inline constexpr int kExitError = 1;

struct GenerateOptions {
  std::string family;  // matching | star | random-complete | random-bipartite
  std::size_t t = 0;
  std::size_t n = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double p_plus = 0.5;
  std::uint64_t seed = 0;
};

/// Builds the instance for a family. Throws std::invalid_argument on a bad
/// family or missing size.
SignedGraph generate_instance(const GenerateOptions& o);

struct ParamOverrides {
  std::optional<double> alpha;
  std::optional<double> gamma;
  std::optional<double> k1;
  std::optional<double> k2;
  std::optional<double> k3;
};

struct PipelineOptions {
  std::string objective = "linf";
  bool round = true;
  bool exact = false;
  bool acn = false;
  bool audit = false;
  std::uint64_t seed = 0;
  ParamOverrides params;
};

/// Describes where an instance came from, copied into the report.
struct InstanceDescriptor {
  std::string source;  // file path or family name
  std::optional<std::uint64_t> seed;
};

struct PipelineOutcome {
  Json report;
  std::size_t audit_violations = 0;
};

/// Validates options (objective, parameter overrides, flag combinations)
/// before any work and throws std::invalid_argument naming the problem.
PipelineOutcome run_pipeline(const SignedGraph& g, const InstanceDescriptor& desc,
                             const PipelineOptions& o);

/// Copy of a report without its "timing" section.
Json strip_timing(const Json& report);

struct SweepOptions {
  std::string family;
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t trials = 1;
  double p_plus = 0.5;
  std::uint64_t seed = 0;
  PipelineOptions pipeline;
  unsigned jobs = 1;
};

inline const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {
      "family", "n", "seed", "objective", "lp_value", "rounded_value",
      "exact_value", "acn_value", "ratio", "c", "audit_violations"};
  return cols;
}

/// CSV text: header plus one row per instance, ordered by (size, trial).
/// `total_violations` receives the summed audit violations.
std::string run_sweep(const SweepOptions& o, std::size_t* total_violations = nullptr);

/// "localcc <version>" followed by the default rounding parameters.
std::string version_text();

/// Full command-line entry point; returns the process exit status.
int run_cli(int argc, char** argv);

}  // namespace localcc::app
