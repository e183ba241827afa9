#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "esflux/diagnostics.hpp"
#include "esflux/problems.hpp"
#include "esflux/reference.hpp"

namespace esflux {

struct ScalarRunConfig {
  int p = 3;
  int q = 5;
  int n = 100;
  double cfl = 0.25;
  double t_end = 10.0;
  // Times at which snapshots and entropy diagnostics are taken.
  std::vector<double> sample_times;
  AlphaProvider alpha = AlphaProvider::constant(0.0);
  bool dissipative = false;
};

struct Snapshot {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> u;
};

struct ScalarRunResult {
  Grid1D grid;
  std::vector<double> values;
  long steps = 0;
  std::vector<Snapshot> snapshots;
  std::vector<EntropySample> entropy;
};

// Burgers with Tadmor's flux (optionally blended with Godunov) on the
// boundary_nodes grid, SSPRK(3,3) with dt = cfl dx / max|u|.
ScalarRunResult run_scalar_problem(const ScalarProblem& problem, const ScalarRunConfig& cfg);

// 2 round(32 2^(i/3.5)), i = 0..count-1: even sizes spaced evenly in log N
// from 64 (64..256 for count = 8).
std::vector<int> convergence_sizes(int count = 8);

struct ConvergenceConfig {
  int p = 2;
  int q = 3;
  std::vector<int> sizes = convergence_sizes();
  double t_end = 10.0;
  // cfl = cfl_scale * 64 / N
  double cfl_scale = 0.5;
  int n_reference = 16384;
};

// Interpolates the reference (including its boundary data nodes) onto the
// coarse nodes and returns the discrete error norms over [a, b].
ErrorNorms compare_to_reference(const ScalarProblem& problem, const ScalarRunResult& run,
                                const ReferenceField& ref);

ConvergenceTable run_convergence(const ScalarProblem& problem, const ConvergenceConfig& cfg,
                                 const ReferenceField& ref,
                                 const std::function<void(int, const ErrorNorms&)>& progress = {});

}  // namespace esflux
