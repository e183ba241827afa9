#include "esflux/experiments.hpp"

#include <cmath>
#include <sstream>

#include "esflux/timeint.hpp"

namespace esflux {

ScalarRunResult run_scalar_problem(const ScalarProblem& problem, const ScalarRunConfig& cfg) {
  const Grid1D grid(cfg.n, problem.a, problem.b, GridLayout::boundary_nodes);
  SchemeConfig<Burgers> sc;
  sc.p = cfg.p;
  sc.q = cfg.q;
  sc.family.base = tadmor_flux();
  if (cfg.dissipative) sc.family.dissipative = godunov_flux();
  sc.alpha = cfg.alpha;
  const Scheme1D<Burgers> scheme(Burgers{}, grid, sc, problem.left_bc(), problem.right_bc());

  std::vector<Burgers::State> u(cfg.n);
  for (int k = 0; k < cfg.n; ++k) u[k] = Burgers::make(problem.initial(grid.center(k)));

  TimeLoopConfig tc;
  tc.cfl = cfg.cfl;
  tc.t_end = cfg.t_end;
  tc.stop_times = cfg.sample_times;

  ScalarRunResult out{grid, {}, 0, {}, {}};
  auto wanted = [&](double t) {
    for (double s : cfg.sample_times) {
      if (s == t) return true;
    }
    return false;
  };
  auto hook = [&](const StepInfo& info, std::span<const Burgers::State> v) {
    if (!info.at_stop || !wanted(info.t)) return;
    Snapshot snap{info.t, {}, {}};
    for (int k = 0; k < grid.n; ++k) {
      snap.x.push_back(grid.center(k));
      snap.u.push_back(v[k](0));
    }
    out.snapshots.push_back(std::move(snap));
    out.entropy.push_back(summarize(entropy_residual_field(scheme, v, info.t)));
  };
  auto rhs = [&](std::span<const Burgers::State> v, double t, std::span<Burgers::State> r) {
    scheme.rhs(v, t, r);
  };
  auto dt = [&](std::span<const Burgers::State> v) {
    return cfl_dt(Burgers{}, v, grid.dx(), cfg.cfl);
  };
  auto res = integrate<Burgers::State>(rhs, std::move(u), tc, dt, hook);
  out.steps = res.steps;
  out.values.reserve(cfg.n);
  for (const auto& s : res.state) out.values.push_back(s(0));
  return out;
}

std::vector<int> convergence_sizes(int count) {
  std::vector<int> ns;
  for (int i = 0; i < count; ++i) {
    ns.push_back(2 * static_cast<int>(std::lround(32.0 * std::pow(2.0, i / 3.5))));
  }
  return ns;
}

ErrorNorms compare_to_reference(const ScalarProblem& problem, const ScalarRunResult& run,
                                const ReferenceField& ref) {
  if (ref.grid.layout != GridLayout::boundary_nodes || ref.grid.a != problem.a ||
      ref.grid.b != problem.b) {
    throw IncompatibleGrids("reference grid does not cover the problem domain");
  }
  std::vector<double> nodes;
  nodes.reserve(ref.values.size() + 2);
  nodes.push_back(problem.left(ref.t_end));
  nodes.insert(nodes.end(), ref.values.begin(), ref.values.end());
  nodes.push_back(problem.right(ref.t_end));
  std::vector<double> sampled(run.values.size());
  for (std::size_t k = 0; k < sampled.size(); ++k) {
    sampled[k] = lagrange_sample(nodes, problem.a, ref.grid.dx(), run.grid.center(static_cast<int>(k)));
  }
  return pointwise_error_norms(run.values, sampled, problem.b - problem.a);
}

ConvergenceTable run_convergence(const ScalarProblem& problem, const ConvergenceConfig& cfg,
                                 const ReferenceField& ref,
                                 const std::function<void(int, const ErrorNorms&)>& progress) {
  if (ref.t_end != cfg.t_end) throw IncompatibleGrids("reference end time differs from the study");
  ConvergenceTable table;
  std::ostringstream sizes;
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) sizes << (i ? " " : "") << cfg.sizes[i];
  table.metadata["problem"] = problem.id;
  table.metadata["p"] = std::to_string(cfg.p);
  table.metadata["q"] = std::to_string(cfg.q);
  table.metadata["t_end"] = std::to_string(cfg.t_end);
  table.metadata["sizes"] = sizes.str();
  table.metadata["size_rule"] = "N_i = 2*round(32*2^(i/3.5))";
  table.metadata["cfl_rule"] = "cfl = " + std::to_string(cfg.cfl_scale) + "*64/N";
  table.metadata["reference"] = "eno2-lxf N=" + std::to_string(ref.grid.n);
  table.metadata["comparison"] = "6-point Lagrange interpolation of the reference at coarse nodes";
  for (int n : cfg.sizes) {
    ScalarRunConfig rc;
    rc.p = cfg.p;
    rc.q = cfg.q;
    rc.n = n;
    rc.cfl = cfg.cfl_scale * 64.0 / n;
    rc.t_end = cfg.t_end;
    const auto run = run_scalar_problem(problem, rc);
    const auto e = compare_to_reference(problem, run, ref);
    table.add(n, e);
    if (progress) progress(n, e);
  }
  return table;
}

}  // namespace esflux
