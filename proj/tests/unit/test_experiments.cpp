#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "esflux/experiments.hpp"

using namespace esflux;

TEST_CASE("problems") {
  const auto bc = burgers_bc_problem();
  CHECK(bc.a == -10.0);
  CHECK(bc.b == 10.0);
  CHECK(bc.initial(-10.0) == doctest::Approx(1.0));
  CHECK(bc.left(0.0) == doctest::Approx(1.0));
  CHECK(bc.right(0.0) == doctest::Approx(-1.0));
  CHECK(bc.left(1.0) == doctest::Approx(0.9));
  const auto pulse = pulse_problem();
  CHECK(pulse.left(5.0) == doctest::Approx(1.02));
  CHECK(pulse.right(3.0) == 1.0);
  CHECK(pulse.initial(0.3) == 1.0);
  CHECK(problem_by_id("pulse").id == "pulse");
  CHECK_THROWS_AS(problem_by_id("nope"), ConfigError);
}

TEST_CASE("convergence sizes") {
  const std::vector<int> expected{64, 78, 96, 116, 142, 172, 210, 256};
  CHECK(convergence_sizes() == expected);
}

TEST_CASE("burgers boundary run") {
  ScalarRunConfig cfg;
  for (int t = 0; t <= 10; ++t) cfg.sample_times.push_back(t);
  const auto prob = burgers_bc_problem();
  const auto r = run_scalar_problem(prob, cfg);
  REQUIRE(r.snapshots.size() == 11);
  REQUIRE(r.entropy.size() == 11);
  for (int k = 0; k < cfg.n; ++k) {
    CHECK(r.snapshots[0].u[k] == prob.initial(r.grid.center(k)));
  }
  for (const auto& s : r.entropy) {
    CAPTURE(s.t);
    CHECK(s.max_abs <= 1e-12 * s.scale);
  }
  CHECK(r.snapshots.back().t == 10.0);
  CHECK(r.values == r.snapshots.back().u);
}

TEST_CASE("dissipative run only produces entropy") {
  ScalarRunConfig cfg;
  cfg.t_end = 4.0;
  cfg.sample_times = {1.0, 2.0, 3.0, 4.0};
  cfg.dissipative = true;
  cfg.alpha = AlphaProvider::jump_sensor();
  const auto r = run_scalar_problem(burgers_bc_problem(), cfg);
  for (const auto& s : r.entropy) CHECK(s.max_positive <= 1e-12 * s.scale);
}

TEST_CASE("comparison against a reference") {
  const auto prob = pulse_problem();
  const auto ref = reference_solution(prob, 2048, 10.0);

  // the reference sampled onto itself
  ScalarRunResult same{ref.grid, ref.values, 0, {}, {}};
  const auto zero = compare_to_reference(prob, same, ref);
  CHECK(zero.linf <= 1e-15);

  ConvergenceConfig cfg;
  cfg.sizes = {64, 96, 142};
  const auto table = run_convergence(prob, cfg, ref);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.metadata.at("p") == "2");
  CHECK(table.rows[0].error.l1 > table.rows[2].error.l1);
  const double order = eoc(table).global;
  CHECK(order > 3.3);
  CHECK(order < 4.7);

  std::ostringstream csv;
  write_convergence_csv(csv, table);
  CHECK(csv.str().find("# problem=pulse") != std::string::npos);

  cfg.t_end = 5.0;
  CHECK_THROWS_AS(run_convergence(prob, cfg, ref), IncompatibleGrids);
}
