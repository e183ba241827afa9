#include "esflux/checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "esflux/diagnostics.hpp"
#include "esflux/experiments.hpp"
#include "esflux/order_probe.hpp"

namespace esflux {

namespace {

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

template <ConservationLaw Law>
std::vector<typename Law::State> wavy_field(const Law& law, const Grid1D& g);

template <>
std::vector<Burgers::State> wavy_field(const Burgers&, const Grid1D& g) {
  std::vector<Burgers::State> u(g.n);
  for (int k = 0; k < g.n; ++k) u[k] = Burgers::make(0.4 + 0.5 * std::sin(1.3 * g.center(k)));
  return u;
}

template <>
std::vector<EulerState> wavy_field(const Euler2D& law, const Grid1D& g) {
  std::vector<EulerState> u(g.n);
  for (int k = 0; k < g.n; ++k) {
    const double x = g.center(k);
    u[k] = law.to_conservative({1.0 + 0.3 * std::sin(x), 0.8 * std::cos(2 * x), 0.2, 1.0 + 0.2 * std::cos(x)});
  }
  return u;
}

template <ConservationLaw Law>
double worst_telescoping(const Law& law, const FluxFamily<Law>& fam,
                         const typename Law::State& data) {
  using Bc = BoundaryCondition<typename Law::State>;
  const auto in = Bc::inflow([data](double) { return data; });
  const std::pair<Bc, Bc> cases[] = {{Bc::periodic(), Bc::periodic()},
                                     {in, Bc::outflow()},
                                     {Bc::reflective(), Bc::reflective()},
                                     {in, Bc::reflective()}};
  double worst = 0.0;
  for (int p = 1; p <= 3; ++p) {
    SchemeConfig<Law> cfg;
    cfg.p = p;
    cfg.q = 2 * p - 1;
    cfg.family = fam;
    const Grid1D g(24, -2.0, 3.0);
    for (const auto& [l, r] : cases) {
      const Scheme1D<Law> s(law, g, cfg, l, r);
      const auto u = wavy_field(law, g);
      const auto c = conservation_check(s, std::span<const typename Law::State>(u), 0.4);
      worst = std::max(worst, c.defect / c.scale);
    }
  }
  return worst;
}

}  // namespace

CheckResult matrix_invariant_check(int max_p) {
  CheckResult r{"matrix invariants", true, ""};
  int count = 0;
  for (int p = 1; p <= max_p; ++p) {
    for (int q = 1; q <= 2 * p - 1; ++q) {
      const auto fam = boundary_matrices(p, q);
      for (int idx = -p; idx <= p; ++idx) {
        const auto& a = fam[idx];
        ++count;
        const bool ok = a.sum() == 1 && a.has_zero_diagonal() && a.is_symmetric() &&
                        reflect(fam[-idx]) == a;
        if (!ok) {
          r.passed = false;
          r.detail = "A^{" + std::to_string(p) + "," + std::to_string(idx) + "} at q = " +
                     std::to_string(q) + " breaks an invariant";
          return r;
        }
      }
    }
  }
  r.detail = std::to_string(count) + " matrices: sum 1, zero diagonal, symmetric, mirrored";
  return r;
}

CheckResult two_point_flux_check(int pairs, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0), pos(0.2, 3.0);
  const Burgers b;
  const Euler2D e;
  double ec = 0.0, diss = -1e300;
  const auto tad = tadmor_flux();
  const auto god = godunov_flux();
  const auto ece = ec_euler_flux(e);
  const auto llfe = llf_flux(e);
  for (int i = 0; i < pairs; ++i) {
    const auto l = Burgers::make(u(rng)), r = Burgers::make(u(rng));
    ec = std::max(ec, std::abs(entropy_condition_residual(tad, b, l, r)) /
                          entropy_condition_scale(tad, b, l, r));
    diss = std::max(diss, entropy_condition_residual(god, b, l, r) /
                              entropy_condition_scale(god, b, l, r));
    const auto el = e.to_conservative({pos(rng), u(rng), u(rng), pos(rng)});
    const auto er = e.to_conservative({pos(rng), u(rng), u(rng), pos(rng)});
    for (Axis a : {Axis::x, Axis::y}) {
      ec = std::max(ec, std::abs(entropy_condition_residual(ece, e, el, er, a)) /
                            entropy_condition_scale(ece, e, el, er, a));
      diss = std::max(diss, entropy_condition_residual(llfe, e, el, er, a) /
                                entropy_condition_scale(llfe, e, el, er, a));
    }
  }
  const bool ok = ec <= 1e-11 && diss <= 1e-12;
  return {"two-point entropy condition", ok,
          "max |EC residual|/scale " + sci(ec) + ", max dissipative residual/scale " + sci(diss)};
}

CheckResult telescoping_check() {
  const Burgers b;
  const Euler2D e;
  FluxFamily<Burgers> fb{tadmor_flux(), godunov_flux(), BlendOrder::left_first};
  FluxFamily<Euler2D> fe{ec_euler_flux(e), std::nullopt, BlendOrder::left_first};
  const double w = std::max(worst_telescoping(b, fb, Burgers::make(0.9)),
                            worst_telescoping(e, fe, e.to_conservative({1.0, 0.5, 0.0, 1.0})));
  return {"conservation telescoping", w <= 1e-12, "max defect/scale " + sci(w)};
}

CheckResult order_probe_check() {
  CheckResult r{"Taylor order probe", true, ""};
  std::ostringstream d;
  d.precision(3);
  for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 5}}) {
    const auto f = probe_family(boundary_matrices(p, q));
    const bool ok = f.interior >= 2 * p - 0.1 && f.min_boundary() >= q - 0.1;
    r.passed = r.passed && ok;
    if (p > 2) d << "; ";
    d << "(p,q)=(" << p << "," << q << "): interior " << f.interior << ", boundary min "
      << f.min_boundary();
  }
  r.detail = d.str();
  return r;
}

CheckResult linear_advection_check() {
  const auto w = linear_flux_weights(interior_matrix(2));
  const RationalVector expected{make_rational(-1, 12), make_rational(7, 12), make_rational(7, 12),
                                make_rational(-1, 12)};
  std::string got;
  for (const auto& x : w) got += (got.empty() ? "" : ", ") + to_string(x);
  return {"linear advection weights", w == expected, "(" + got + ")"};
}

CheckResult condition_growth_check() {
  const double c2 = construction_condition_number(2);
  const double c3 = construction_condition_number(3);
  const double c4 = construction_condition_number(4);
  return {"condition number growth", c2 < c3 && c3 < c4,
          "p=2: " + sci(c2) + ", p=3: " + sci(c3) + ", p=4: " + sci(c4)};
}

CheckResult entropy_conservation_check() {
  ScalarRunConfig cfg;
  for (int t = 0; t <= 10; ++t) cfg.sample_times.push_back(t);
  const auto run = run_scalar_problem(burgers_bc_problem(), cfg);
  double worst = 0.0;
  for (const auto& s : run.entropy) worst = std::max(worst, s.max_abs / s.scale);
  return {"entropy conservation (Burgers, boundary data)", worst <= 1e-12,
          "max |residual|/scale " + sci(worst) + " over " + std::to_string(run.entropy.size()) +
              " samples"};
}

std::vector<CheckResult> run_all_checks() {
  return {matrix_invariant_check(),  two_point_flux_check(),   telescoping_check(),
          order_probe_check(),       linear_advection_check(), condition_growth_check(),
          entropy_conservation_check()};
}

}  // namespace esflux
