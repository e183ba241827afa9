#include <doctest.h>

#include <cmath>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "esflux/diagnostics.hpp"
#include "esflux/reference.hpp"
#include "esflux/timeint.hpp"

using namespace esflux;

namespace {

using Bc = BoundaryCondition<Burgers::State>;

std::filesystem::path scratch_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "esflux_tests" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<double> run_periodic(int n, double t_end) {
  const Grid1D g(n, 0.0, 1.0);
  const Eno2Burgers eno(g, Bc::periodic(), Bc::periodic());
  std::vector<double> u(n);
  for (int k = 0; k < n; ++k) u[k] = 1.0 + 0.5 * std::sin(2 * std::numbers::pi * g.center(k));
  TimeLoopConfig tc;
  tc.t_end = t_end;
  tc.fixed_dt = 0.2 / 1.5 / 1024;
  auto rhs = [&](std::span<const double> v, double t, std::span<double> out) { eno.rhs(v, t, out); };
  return integrate<double>(rhs, std::move(u), tc, [](auto) { return 0.0; }).state;
}

}  // namespace

TEST_CASE("eno2 reconstruction") {
  auto c = eno2_reconstruct(3.0, 3.0, 3.0);
  CHECK(c.left == 3.0);
  CHECK(c.right == 3.0);
  auto l = eno2_reconstruct(4.0, 5.0, 6.0);
  CHECK(l.left == 4.5);
  CHECK(l.right == 5.5);
  auto j = eno2_reconstruct(0.0, 0.0, 1.0);
  CHECK(j.right == 0.0);
  CHECK(j.left == 0.0);
  // tie takes the left slope
  auto t = eno2_reconstruct(0.0, 1.0, 0.0);
  CHECK(t.left == 0.5);
  CHECK(t.right == 1.5);
}

TEST_CASE("eno2 rhs vanishes on constant data") {
  const Grid1D g(20, 0.0, 1.0, GridLayout::boundary_nodes);
  auto c = Bc::inflow([](double) { return Burgers::make(0.7); });
  const Eno2Burgers eno(g, c, c);
  const std::vector<double> u(20, 0.7);
  for (double r : eno.rhs(u, 0.0)) CHECK(r == 0.0);
}

TEST_CASE("eno2 telescopes") {
  const Grid1D g(40, -1.0, 1.0, GridLayout::boundary_nodes);
  const Eno2Burgers eno(g, Bc::inflow([](double) { return Burgers::make(1.2); }), Bc::outflow());
  std::vector<double> u(40);
  for (int k = 0; k < 40; ++k) u[k] = 1.0 + 0.3 * std::sin(3 * g.center(k));
  const auto ext = eno.fill_ghosts(u, 0.0);
  const auto f = eno.interface_fluxes(ext);
  double total = 0.0;
  for (double r : eno.rhs(u, 0.0)) total += g.dx() * r;
  CHECK(std::abs(total - (f.front() - f.back())) <= 1e-13);
}

TEST_CASE("eno2 self convergence before shock formation") {
  const int fine = 2048;
  const auto ref = run_periodic(fine, 0.1);
  std::vector<double> errs;
  for (int n : {64, 128, 256, 512}) {
    const auto u = run_periodic(n, 0.1);
    errs.push_back(error_norms(u, ref, 1.0).l1);
  }
  ConvergenceTable t;
  for (std::size_t i = 0; i < errs.size(); ++i) t.add(64 << i, {errs[i], errs[i], errs[i]});
  CHECK(eoc(t).global >= 1.8);
}

TEST_CASE("pulse reference") {
  const auto prob = pulse_problem();
  const auto ref = reference_solution(prob, 1024, 10.0);
  double dev = 0.0;
  for (double v : ref.values) dev = std::max(dev, std::abs(v - 1.0));
  CHECK(dev > 0.015);
  CHECK(dev < 0.021);
  for (int k = 0; k < ref.grid.n; ++k) {
    if (ref.grid.center(k) > 5.0) CHECK(std::abs(ref.values[k] - 1.0) < 1e-14);
  }
  const double inflow_tv = 2.0 * (1.0 - std::exp(-25.0)) / 50.0;
  CHECK(total_variation(ref.values) <= inflow_tv + 1e-10);
}

TEST_CASE("reference cache") {
  const auto dir = scratch_dir("cache");
  ReferenceOptions o;
  o.cache_dir = dir;
  const auto prob = pulse_problem();
  const auto first = reference_solution(prob, 256, 2.0, o);
  const auto path = reference_cache_path(dir, prob.id, 256, 2.0);
  REQUIRE(std::filesystem::exists(path));
  const auto second = reference_solution(prob, 256, 2.0, o);
  REQUIRE(second.values.size() == first.values.size());
  for (std::size_t i = 0; i < first.values.size(); ++i) {
    CHECK(std::bit_cast<std::uint64_t>(first.values[i]) ==
          std::bit_cast<std::uint64_t>(second.values[i]));
  }
  const auto back = read_reference(path);
  CHECK(back.grid.layout == GridLayout::boundary_nodes);
  CHECK(back.t_end == 2.0);
  CHECK(back.problem == prob.id);
}

TEST_CASE("reference file errors") {
  const auto dir = scratch_dir("bad");
  CHECK_THROWS_AS(read_reference(dir / "missing.bin"), IoError);
  {
    std::ofstream out(dir / "junk.bin");
    out << "not a reference";
  }
  CHECK_THROWS_AS(read_reference(dir / "junk.bin"), IoError);
}

TEST_CASE("total variation") {
  const std::vector<double> v{0.0, 1.0, -1.0, -1.0};
  CHECK(total_variation(v) == 3.0);
  CHECK(total_variation(std::vector<double>{}) == 0.0);
}
