#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "localcc/exact.hpp"
#include "localcc/instance_io.hpp"
#include "localcc_app/app.hpp"

using namespace localcc;
using localcc::app::Json;

namespace {

struct CapturedRun {
  int status;
  std::string out;
  std::string err;
};

CapturedRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "localcc");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  const int status = app::run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(LOCALCC_TEST_TMP) + "/" + name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("generate writes canonical family files") {
  const auto m = run({"generate", "matching", "--t", "3"});
  CHECK(m.status == 0);
  CHECK(m.out == serialize_instance(make_matching_instance(3)));
  const auto s = run({"generate", "star", "--n", "7"});
  CHECK(s.out == serialize_instance(make_star_instance(7)));

  const auto a = run({"generate", "random-complete", "--n", "10", "--p-plus", "0.5", "--seed", "7"});
  const auto b = run({"generate", "random-complete", "--n", "10", "--p-plus", "0.5", "--seed", "7"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == serialize_instance(make_random_complete(10, 0.5, 7)));

  const auto bip = run({"generate", "random-bipartite", "--n1", "2", "--n2", "3", "--seed", "1"});
  CHECK(bip.out.rfind("graph bipartite 2 3\n", 0) == 0);

  CHECK(run({"generate", "wheel", "--n", "3"}).status == app::kExitError);
  CHECK(run({"generate", "star"}).status == app::kExitError);
  CHECK(run({"generate", "random-complete", "--n", "4", "--p-plus", "2"}).status == app::kExitError);
  CHECK(run({"generate"}).status != 0);
}

TEST_CASE("pipeline on M3") {
  const auto path = temp_file("m3.txt", serialize_instance(make_matching_instance(3)));
  const auto r = run({"pipeline", path, "--exact", "--acn", "--audit", "--seed", "5"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["lp"]["value"].get<double>() == doctest::Approx(1.0));
  CHECK(j["rounded"]["value"].get<double>() == 1.0);
  CHECK(j["exact"]["value"].get<double>() == 1.0);
  CHECK(j["rounded"]["ratio"].get<double>() == doctest::Approx(1.0));
  CHECK(j["acn"]["value"].get<double>() == 4.0);
  CHECK(j["audit"]["violations"] == 0);
  CHECK(j["checks"]["sandwich"] == true);
  CHECK(j["checks"]["ratio_within_c"] == true);
  CHECK(j["seeds"]["acn"] == 5);
  CHECK(j.contains("timing"));
}

TEST_CASE("pipeline on G7") {
  const auto path = temp_file("g7.txt", serialize_instance(make_star_instance(7)));
  const auto r = run({"pipeline", path});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(std::abs(j["lp"]["value"].get<double>() - 7.0 / 3.0) <= 1e-6);
  CHECK(j["exact"].is_null());
  CHECK(j["acn"].is_null());
}

TEST_CASE("pipeline with audit on random n=10 instances") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = make_random_complete(10, 0.5, seed);
    const auto res = app::run_pipeline(g, {"random", seed}, {.objective = "linf", .audit = true});
    CHECK(res.audit_violations == 0);
    const auto& rounded = res.report["rounded"];
    const double lp = res.report["lp"]["value"].get<double>();
    const double c = res.report["ratio_constant"].get<double>();
    for (const auto& e : rounded["error_vector"]) CHECK(e.get<double>() <= c * lp + 1e-6);
    CHECK(res.report["checks"]["ratio_within_c"] == true);
  }
}

TEST_CASE("pipeline on bipartite input and lp:p evaluation") {
  const auto g = make_random_bipartite(3, 4, 0.5, 3);
  const auto res = app::run_pipeline(g, {"b", 3}, {.objective = "l1", .exact = true, .audit = true});
  const auto& r = res.report;
  CHECK(r["instance"]["kind"] == "bipartite");
  CHECK(r["rounded"]["error_vector"].size() == 3);
  CHECK(r["checks"]["sandwich"] == true);

  const auto e = app::run_pipeline(make_star_instance(4), {"s", {}}, {.objective = "lp:2", .exact = true});
  CHECK(e.report["lp"].is_null());
  CHECK(e.report["rounded"].is_null());
  CHECK(e.report["exact"]["value"].get<double>() > 0.0);
}

TEST_CASE("pipeline rejects bad option combinations before running") {
  const auto g = make_matching_instance(3);
  auto fails = [&](app::PipelineOptions o) {
    CHECK_THROWS_AS(app::run_pipeline(g, {"m", {}}, o), std::invalid_argument);
  };
  fails({.objective = "lp:2"});
  fails({.objective = "l7"});
  fails({.round = false, .audit = true});
  app::PipelineOptions bad;
  bad.params.alpha = 0.55;
  fails(bad);
  CHECK_THROWS_AS(app::run_pipeline(make_random_complete(14, 0.5, 1), {"r", {}}, {.exact = true}),
                  InstanceTooLarge);
  CHECK_THROWS_AS(app::run_pipeline(make_random_bipartite(2, 2, 0.5, 1), {"b", {}}, {.acn = true}),
                  std::invalid_argument);
  app::PipelineOptions k2;
  k2.params.k2 = 0.1;
  CHECK_THROWS_AS(app::run_pipeline(make_random_bipartite(2, 2, 0.5, 1), {"b", {}}, k2),
                  std::invalid_argument);

  try {
    app::run_pipeline(g, {"m", {}}, bad);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("alpha < 1/2") != std::string::npos);
  }
}

TEST_CASE("pipeline exit codes") {
  const auto path = temp_file("m4.txt", serialize_instance(make_matching_instance(4)));
  CHECK(run({"pipeline", path, "--no-round"}).status == 0);
  CHECK(run({"pipeline", path, "--alpha", "0.6"}).status == app::kExitError);
  CHECK(run({"pipeline", path, "--objective", "lp:3"}).status == app::kExitError);
  CHECK(run({"pipeline", std::string(LOCALCC_TEST_TMP) + "/missing.txt"}).status == app::kExitError);
  const auto bad = temp_file("bad.txt", "graph complete 3\ndefault x\n");
  const auto r = run({"pipeline", bad});
  CHECK(r.status == app::kExitError);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("reports are deterministic apart from timing") {
  const auto path = temp_file("r9.txt", serialize_instance(make_random_complete(9, 0.5, 21)));
  const std::vector<std::string> args{"pipeline", path, "--exact", "--acn", "--audit", "--seed", "3"};
  const Json a = Json::parse(run(args).out);
  const Json b = Json::parse(run(args).out);
  CHECK(app::strip_timing(a).dump() == app::strip_timing(b).dump());
  CHECK_FALSE(app::strip_timing(a).contains("timing"));
  // Field order is fixed.
  std::vector<std::string> keys;
  for (auto it = a.begin(); it != a.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "instance", "objective", "seeds", "params",
                                         "ratio_constant", "lp", "rounded", "audit", "exact",
                                         "acn", "checks", "timing"});
}

TEST_CASE("sweep tables") {
  SUBCASE("matching with acn") {
    const auto r = run({"sweep", "matching", "--sizes", "2", "6", "--acn"});
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == app::sweep_columns());
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const std::size_t t = i + 1;
      CHECK(rows[i][1] == std::to_string(t));
      CHECK(std::stod(rows[i][7]) == 2.0 * t - 2.0);
      CHECK(std::stod(rows[i][5]) == 1.0);
    }
  }
  SUBCASE("star lp column") {
    const auto rows = parse_csv(run({"sweep", "star", "--sizes", "3", "8"}).out);
    REQUIRE(rows.size() == 7);
    for (std::size_t i = 1; i < rows.size(); ++i)
      CHECK(std::abs(std::stod(rows[i][4]) - (i + 2) / 3.0) <= 1e-6);
  }
  SUBCASE("empty range prints the header only") {
    const auto r = run({"sweep", "random-complete", "--sizes", "5", "4"});
    CHECK(r.status == 0);
    CHECK(parse_csv(r.out).size() == 1);
  }
  SUBCASE("parallel runs keep input order") {
    const std::vector<std::string> base{"sweep", "random-complete", "--sizes", "5", "8",
                                        "--trials", "3", "--seed", "4", "--audit", "--exact"};
    auto par = base;
    par.insert(par.end(), {"--jobs", "4"});
    const auto a = run(base);
    const auto b = run(par);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(parse_csv(a.out).size() == 13);
  }
  SUBCASE("bad family") {
    CHECK(run({"sweep", "wheel", "--sizes", "1", "2"}).status == app::kExitError);
  }
}

TEST_CASE("version text lists the defaults") {
  const auto v = app::version_text();
  CHECK(v.find("alpha=0.465744") != std::string::npos);
  CHECK(v.find("alpha=0.377") != std::string::npos);
  CHECK(run({"--version"}).status == 0);
}
