#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "localcc/dual_certificate.hpp"
#include "localcc/exact.hpp"
#include "localcc/relaxation.hpp"
#include "localcc/simplex.hpp"
#include "oracles.hpp"

using namespace localcc;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(LOCALCC_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Primal point of the minimax program built from a fractional clustering.
std::vector<double> minimax_point(const SignedCompleteGraph& g, const FractionalClustering& x) {
  std::vector<double> values = x.distances();
  const auto e = error_vector(g, x);
  values.push_back(*std::max_element(e.begin(), e.end()));
  return values;
}

void check_solution(const LinearProgram& lp, const LpSolution& s) {
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(lp.max_violation(s.values) <= kLpTolerance);
  CHECK(lp.objective_at(s.values) == doctest::Approx(s.objective).epsilon(kLpTolerance));
}

}  // namespace

TEST_CASE("toy programs") {
  SUBCASE("x >= 0.5") {
    LinearProgram lp;
    const auto x = lp.add_variable("x", 0.0, 1.0, 1.0);
    lp.add_row({{x, -1.0}}, -0.5);
    const auto s = solve(lp);
    check_solution(lp, s);
    CHECK(s.values[0] == doctest::Approx(0.5));
  }
  SUBCASE("infeasible") {
    LinearProgram lp;
    const auto x = lp.add_variable("x", -kInfinity, kInfinity, 0.0);
    lp.add_row({{x, 1.0}}, 0.0);
    lp.add_row({{x, -1.0}}, -1.0);
    CHECK(solve(lp).status == LpStatus::infeasible);
  }
  SUBCASE("unbounded") {
    LinearProgram lp;
    const auto x = lp.add_variable("x", 0.0, kInfinity, -1.0);
    const auto y = lp.add_variable("y", 0.0, kInfinity, 0.0);
    lp.add_row({{x, 1.0}, {y, -1.0}}, 1.0);
    CHECK(solve(lp).status == LpStatus::unbounded);
  }
  SUBCASE("two-variable textbook program") {
    // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
    LinearProgram lp;
    const auto x = lp.add_variable("x", 0.0, kInfinity, -3.0);
    const auto y = lp.add_variable("y", 0.0, kInfinity, -5.0);
    lp.add_row({{x, 1.0}}, 4.0);
    lp.add_row({{y, 2.0}}, 12.0);
    lp.add_row({{x, 3.0}, {y, 2.0}}, 18.0);
    const auto s = solve(lp);
    check_solution(lp, s);
    CHECK(s.objective == doctest::Approx(-36.0));
    CHECK(s.values[0] == doctest::Approx(2.0));
    CHECK(s.values[1] == doctest::Approx(6.0));
  }
  SUBCASE("free variables and offset") {
    LinearProgram lp;
    const auto x = lp.add_variable("x", -kInfinity, kInfinity, 1.0);
    lp.add_row({{x, -1.0}}, 3.0);  // x >= -3
    lp.set_objective_offset(10.0);
    const auto s = solve(lp);
    check_solution(lp, s);
    CHECK(s.objective == doctest::Approx(7.0));
  }
  SUBCASE("iteration cap") {
    LinearProgram lp = build_minimax_lp(make_random_complete(8, 0.5, 3));
    SimplexOptions o;
    o.max_iterations = 1;
    CHECK(solve(lp, o).status == LpStatus::iteration_limit);
  }
  CHECK(to_string(LpStatus::optimal) == "optimal");
  CHECK(to_string(LpStatus::iteration_limit) == "iteration_limit");
}

TEST_CASE("LinearProgram rejects inconsistent input") {
  LinearProgram lp;
  CHECK_THROWS_AS(lp.add_variable("x", 1.0, 0.0), std::invalid_argument);
  lp.add_variable("y", 0.0, 1.0);
  CHECK_THROWS_AS(lp.add_row({{3, 1.0}}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lp.objective_at({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("program shapes") {
  const auto lp = build_minimax_lp(SignedCompleteGraph(3));
  CHECK(lp.variable_count() == 4);
  CHECK(lp.row_count() == 6);
  CHECK(lp.names().back() == "M");
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto m = build_minimax_lp(make_random_complete(n, 0.5, n));
    CHECK(m.variable_count() == pair_count(n) + 1);
    CHECK(m.row_count() == 3 * (n * (n - 1) * (n - 2) / 6) + n);
  }
  const auto b = build_minimax_lp(SignedBipartiteGraph(2, 3));
  CHECK(b.variable_count() == pair_count(5) + 1);
  CHECK(b.row_count() == 3 * 10 + 2);
  // n = 2: no triangle rows at all.
  const auto two = build_minimax_lp(SignedCompleteGraph(2));
  CHECK(two.row_count() == 2);
  const auto s = solve(two);
  check_solution(two, s);
  CHECK(s.objective == doctest::Approx(0.0));
  CHECK_THROWS_AS(build_minimax_lp(SignedCompleteGraph(1)), std::invalid_argument);
}

TEST_CASE("golden dumps") {
  CHECK(build_minimax_lp(make_star_instance(2)).dump() == read_golden("minimax_star2.lp"));
  SignedBipartiteGraph b(1, 2);
  b.set_sign(0, 1, Sign::negative);
  CHECK(build_l1_lp(b).dump() == read_golden("l1_bipartite_1x2.lp"));
}

TEST_CASE("matching family: value 1 at x = 0") {
  for (std::size_t t = 2; t <= 6; ++t) {
    const auto g = make_matching_instance(t);
    const auto lp = build_minimax_lp(g);
    const auto s = solve(lp);
    check_solution(lp, s);
    CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-9));
    if (t >= 3)
      for (std::size_t j = 0; j + 1 < s.values.size(); ++j) CHECK(std::abs(s.values[j]) <= 1e-6);
  }
}

TEST_CASE("star family: value n/3 with x = 1/3 at the centre and 2/3 elsewhere") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto g = make_star_instance(n);
    const auto r = solve_relaxation(g, Objective::linf());
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(std::abs(r.lp_value - n / 3.0) <= 1e-6);
    CHECK(std::abs(r.objective_value - n / 3.0) <= 1e-6);
    if (n == 3) continue;  // optimum not unique, see below
    const auto& x = *r.fractional;
    for (Vertex v = 1; v <= n; ++v) {
      CHECK(std::abs(x.distance(0, v) - 1.0 / 3.0) <= 1e-5);
      for (Vertex w = v + 1; w <= n; ++w) CHECK(std::abs(x.distance(v, w) - 2.0 / 3.0) <= 1e-5);
    }
  }
}

TEST_CASE("star n=3: the symmetric point is optimal but not a vertex") {
  // Cutting off leaf u and keeping the rest together also scores 1 = n/3,
  // and the symmetric point is the average of the three such clusterings.
  const auto g = make_star_instance(3);
  const auto lp = build_minimax_lp(g);
  FractionalClustering centre(4, 2.0 / 3.0);
  for (Vertex v = 1; v <= 3; ++v) centre.set_distance(0, v, 1.0 / 3.0);
  const auto cp = minimax_point(g, centre);
  CHECK(lp.max_violation(cp) <= kLpTolerance);
  CHECK(lp.objective_at(cp) == doctest::Approx(1.0));
  std::vector<double> average(cp.size(), 0.0);
  for (Vertex u = 1; u <= 3; ++u) {
    std::vector<std::size_t> labels{0, 0, 0, 0};
    labels[u] = 1;
    const auto p = minimax_point(g, clustering_to_fractional(Clustering::from_labels(labels)));
    CHECK(lp.max_violation(p) <= kLpTolerance);
    CHECK(lp.objective_at(p) == doctest::Approx(1.0));
    for (std::size_t j = 0; j < p.size(); ++j) average[j] += p[j] / 3.0;
  }
  for (std::size_t j = 0; j < cp.size(); ++j) CHECK(average[j] == doctest::Approx(cp[j]));
}

TEST_CASE("l1 program") {
  SUBCASE("all positive") {
    const auto r = solve_relaxation(SignedCompleteGraph(6), Objective::l1_mean());
    CHECK(r.lp_value == doctest::Approx(0.0));
    for (double d : r.fractional->distances()) CHECK(d == doctest::Approx(0.0));
  }
  SUBCASE("all negative") {
    const auto r = solve_relaxation(SignedCompleteGraph(6, Sign::negative), Objective::l1_mean());
    CHECK(r.lp_value == doctest::Approx(0.0).epsilon(1e-9));
    for (double d : r.fractional->distances()) CHECK(d == doctest::Approx(1.0));
  }
  SUBCASE("M3 total cost 3 equals the brute-force minimum disagreements") {
    const auto g = make_matching_instance(3);
    const auto r = solve_relaxation(g, Objective::l1_mean());
    CHECK(r.lp_value == doctest::Approx(3.0));
    std::size_t best = 99;
    oracle::for_each_partition(6, [&](const auto& blocks) {
      best = std::min(best, oracle::total_disagreements(g, oracle::labels_of(6, blocks)));
    });
    CHECK(best == 3);
    CHECK(r.objective_value == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(solve_relaxation(SignedCompleteGraph(4), Objective::lp(2)),
                  std::invalid_argument);
}

TEST_CASE("solver output is feasible, and lazy and eager row handling agree") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const auto g = make_random_complete(n, 0.2 + 0.05 * (seed % 12), seed);
    for (const auto& lp : {build_minimax_lp(g), build_l1_lp(g)}) {
      const auto lazy = solve(lp);
      SimplexOptions eager_opts;
      eager_opts.lazy_rows = false;
      const auto eager = solve(lp, eager_opts);
      check_solution(lp, lazy);
      check_solution(lp, eager);
      CHECK(lazy.objective == doctest::Approx(eager.objective).epsilon(1e-9));
    }
  }
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = make_random_bipartite(3 + seed % 3, 2 + seed % 4, 0.5, seed);
    const auto lp = build_minimax_lp(g);
    check_solution(lp, solve(lp));
  }
}

TEST_CASE("LP optimum lower-bounds the exact optimum") {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const auto g = make_random_complete(n, 0.5, seed + 500);
    for (const auto& f : {Objective::linf(), Objective::l1_mean()}) {
      const auto r = solve_relaxation(g, f);
      const auto ex = exact_best(g, f);
      CHECK(r.objective_value <= ex.value + kLpTolerance);
    }
  }
}

TEST_CASE("matching dual certificates") {
  for (std::size_t t = 2; t <= 6; ++t) {
    const auto g = make_matching_instance(t);
    const auto cert = matching_dual_certificate(t);
    const auto v = verify_dual_certificate(g, cert);
    CHECK(v.feasible);
    CHECK(v.objective == doctest::Approx(1.0));
    CHECK(v.pi_sum == doctest::Approx(1.0));
    // Complementary slackness: slack + edges carry x = 0 at the optimum.
    const auto s = solve(build_minimax_lp(g));
    for (const auto& [a, b] : v.slack_positive_edges) CHECK(s.values[pair_index(a, b, 2 * t)] <= 1e-6);
  }
  const auto c = matching_dual_certificate(3);
  CHECK(c.pi[0] == doctest::Approx(0.5));
  CHECK(c.pi[1] == doctest::Approx(0.5));
  for (Vertex v = 2; v < 6; ++v) CHECK(c.pi[v] == 0.0);
  CHECK_THROWS_AS(matching_dual_certificate(1), std::invalid_argument);
}

TEST_CASE("star dual certificates") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto cert = star_dual_certificate(n);
    const auto v = verify_dual_certificate(make_star_instance(n), cert);
    CHECK(v.feasible);
    CHECK(v.objective == doctest::Approx(n / 3.0));
    double sum = 0.0;
    for (double p : cert.pi) {
      CHECK(p >= 0.0);
      sum += p;
    }
    CHECK(sum == doctest::Approx(1.0));
    const double leaf = 1.0 / (3.0 * (n - 1));
    for (Vertex w = 1; w <= n; ++w) CHECK(cert.pi[w] == doctest::Approx(leaf));
    CHECK(cert.pi[0] == doctest::Approx(1.0 - n * leaf));
  }
  const auto two = star_dual_certificate(2);
  CHECK(two.pi[0] == doctest::Approx(1.0 / 3.0));
  CHECK(two.pi[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("dual certificates are rejected when infeasible") {
  auto cert = matching_dual_certificate(3);
  cert.pi[2] = 0.5;  // sum of pi becomes 1.5
  const auto v = verify_dual_certificate(make_matching_instance(3), cert);
  CHECK_FALSE(v.feasible);
  CHECK(v.pi_sum == doctest::Approx(1.5));

  auto neg = star_dual_certificate(4);
  neg.pi[1] = -0.1;
  CHECK_FALSE(verify_dual_certificate(make_star_instance(4), neg).feasible);

  // On the all-+ graph the same multipliers stay feasible but certify nothing.
  const auto plus = verify_dual_certificate(SignedCompleteGraph(6), matching_dual_certificate(3));
  CHECK(plus.feasible);
  CHECK(plus.objective == 0.0);

  // Without pi at the centre the + edges u*v, which carry positive
  // sigma_hat, are no longer covered.
  auto big = star_dual_certificate(4);
  big.pi[0] = 0.0;
  CHECK_FALSE(verify_dual_certificate(make_star_instance(4), big).feasible);
  CHECK_THROWS_AS(verify_dual_certificate(SignedCompleteGraph(5), matching_dual_certificate(3)),
                  std::invalid_argument);
}

TEST_CASE("aggregate_sigma folds triple multipliers") {
  const std::vector<TripleMultiplier> sigma{{0, 1, 2, 0.25}};
  const auto s = aggregate_sigma(3, sigma);
  CHECK(s[pair_index(0, 1, 3)] == doctest::Approx(-0.25));
  CHECK(s[pair_index(0, 2, 3)] == doctest::Approx(0.25));
  CHECK(s[pair_index(1, 2, 3)] == doctest::Approx(0.25));
  const std::vector<TripleMultiplier> bad{{0, 0, 2, 1.0}};
  CHECK_THROWS_AS(aggregate_sigma(3, bad), std::invalid_argument);
}

TEST_CASE("weak duality against random feasible primal points") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t t = 2 + seed % 4;
    const auto m = make_matching_instance(t);
    const auto mp = minimax_point(m, oracle::random_metric(2 * t, seed));
    const auto lpm = build_minimax_lp(m);
    REQUIRE(lpm.max_violation(mp) <= kLpTolerance);
    CHECK(verify_dual_certificate(m, matching_dual_certificate(t)).objective <=
          lpm.objective_at(mp) + kLpTolerance);

    const std::size_t n = 2 + seed % 6;
    const auto s = make_star_instance(n);
    const auto sp = minimax_point(s, oracle::random_metric(n + 1, seed + 77));
    const auto lps = build_minimax_lp(s);
    REQUIRE(lps.max_violation(sp) <= kLpTolerance);
    CHECK(verify_dual_certificate(s, star_dual_certificate(n)).objective <=
          lps.objective_at(sp) + kLpTolerance);
  }
}
