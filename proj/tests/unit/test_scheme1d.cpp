#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "esflux/diagnostics.hpp"
#include "esflux/timeint.hpp"

using namespace esflux;

namespace {

using BState = Burgers::State;
using BBoundary = BoundaryCondition<BState>;

SchemeConfig<Burgers> burgers_config(int p, int q, bool dissipative = false, double alpha = 0.0) {
  SchemeConfig<Burgers> cfg;
  cfg.p = p;
  cfg.q = q;
  cfg.family.base = tadmor_flux();
  if (dissipative) cfg.family.dissipative = godunov_flux();
  cfg.alpha = AlphaProvider::constant(alpha);
  return cfg;
}

std::vector<BState> smooth_field(const Grid1D& g, double shift) {
  std::vector<BState> u(g.n);
  for (int k = 0; k < g.n; ++k) {
    const double x = g.center(k);
    u[k] = Burgers::make(0.5 + 0.3 * std::sin(0.7 * x + shift) + 0.1 * std::cos(1.9 * x));
  }
  return u;
}

struct BcCase {
  const char* name;
  BBoundary left;
  BBoundary right;
};

std::vector<BcCase> bc_cases() {
  auto in_l = BBoundary::inflow([](double t) { return Burgers::make(0.9 + std::cos(t) / 10); });
  auto in_r = BBoundary::inflow([](double t) { return Burgers::make(-0.9 - std::cos(t) / 10); });
  return {{"periodic", BBoundary::periodic(), BBoundary::periodic()},
          {"inflow/outflow", in_l, BBoundary::outflow()},
          {"inflow/inflow", in_l, in_r},
          {"outflow/outflow", BBoundary::outflow(), BBoundary::outflow()},
          {"reflective", BBoundary::reflective(), BBoundary::reflective()},
          {"inflow/reflective", in_l, BBoundary::reflective()}};
}

}  // namespace

TEST_CASE("grid") {
  const Grid1D g(10, 0.0, 1.0);
  CHECK(g.dx() == 0.1);
  CHECK(g.center(0) == doctest::Approx(0.05));
  const Grid1D n(9, -1.0, 1.0, GridLayout::boundary_nodes);
  CHECK(n.dx() == doctest::Approx(0.2));
  CHECK(n.center(0) == doctest::Approx(-0.8));
  CHECK(n.center(8) == doctest::Approx(0.8));
  CHECK_THROWS_AS(Grid1D(0, 0.0, 1.0), GridTooSmall);
}

TEST_CASE("fill ghosts") {
  const Grid1D g(8, 0.0, 1.0);
  auto inflow = BBoundary::inflow(
      [](double t) { return Burgers::make(0.9 + std::cos(std::numbers::pi * t / 2) / 10); });
  Scheme1D<Burgers> s(Burgers{}, g, burgers_config(2, 3), inflow, BBoundary::outflow());
  std::vector<BState> u(8);
  for (int k = 0; k < 8; ++k) u[k] = Burgers::make(0.1 * k);
  u[7] = Burgers::make(0.7);
  const auto ext = s.fill_ghosts(u, 0.0);
  REQUIRE(ext.size() == 12);
  CHECK(ext[1](0) == doctest::Approx(1.0));  // cell 0
  CHECK(ext[10](0) == 0.7);                  // cell N+1

  Scheme1D<Burgers> per(Burgers{}, g, burgers_config(2, 3), BBoundary::periodic(),
                        BBoundary::periodic());
  const auto pe = per.fill_ghosts(u, 0.0);
  CHECK(pe[0] == u[6]);
  CHECK(pe[1] == u[7]);
  CHECK(pe[10] == u[0]);
  CHECK(pe[11] == u[1]);

  Scheme1D<Burgers> refl(Burgers{}, g, burgers_config(2, 3), BBoundary::reflective(),
                         BBoundary::reflective());
  const auto re = refl.fill_ghosts(u, 0.0);
  CHECK(re[1] == -u[0]);
  CHECK(re[0] == -u[1]);
  CHECK(re[10] == -u[7]);
  CHECK(re[11] == -u[6]);

  const Euler2D law;
  SchemeConfig<Euler2D> ecfg;
  ecfg.family.base = ec_euler_flux(law);
  Scheme1D<Euler2D> wall(law, g, ecfg, BoundaryCondition<EulerState>::reflective(),
                         BoundaryCondition<EulerState>::reflective());
  std::vector<EulerState> w(8, law.to_conservative({1.0, 2.0, 1.0, 3.0}));
  const auto we = wall.fill_ghosts(w, 0.0);
  const auto prim = law.to_primitive(we[1]);
  CHECK(prim.rho == 1.0);
  CHECK(prim.vx == -2.0);
  CHECK(prim.vy == 1.0);
  CHECK(prim.p == doctest::Approx(3.0));
}

TEST_CASE("scheme construction errors") {
  const auto out = BBoundary::outflow();
  CHECK_THROWS_AS(Scheme1D<Burgers>(Burgers{}, Grid1D(6, 0, 1), burgers_config(3, 5), out, out),
                  GridTooSmall);
  CHECK_NOTHROW(Scheme1D<Burgers>(Burgers{}, Grid1D(7, 0, 1), burgers_config(3, 5), out, out));
  CHECK_THROWS_AS(
      Scheme1D<Burgers>(Burgers{}, Grid1D(20, 0, 1), burgers_config(2, 3), BBoundary::periodic(), out),
      ConfigError);
  CHECK_THROWS_AS(Scheme1D<Burgers>(Burgers{}, Grid1D(20, 0, 1), burgers_config(2, 3),
                                    BBoundary{BoundaryKind::inflow, {}}, out),
                  ConfigError);
  CHECK_THROWS_AS(Scheme1D<Burgers>(Burgers{}, Grid1D(20, 0, 1), burgers_config(2, 4), out, out),
                  InvalidOrder);
}

TEST_CASE("interface matrix selection") {
  const auto fam = boundary_matrices(3, 5);
  CHECK(interface_matrix(50, 100, fam, true, true).boundary_tag() == 0);
  for (int m = 1; m <= 3; ++m) {
    CHECK(interface_matrix(97 + m, 100, fam, true, true).boundary_tag() == m);
    CHECK(interface_matrix(3 - m, 100, fam, true, true).boundary_tag() == -m);
  }
  CHECK(interface_matrix(97, 100, fam, true, true).boundary_tag() == 0);
  CHECK(interface_matrix(3, 100, fam, true, true).boundary_tag() == 0);
  for (int i = 0; i <= 100; ++i) CHECK(interface_matrix(i, 100, fam, false, false).boundary_tag() == 0);
  CHECK_THROWS_AS(interface_matrix(0, 6, fam, true, true), GridTooSmall);

  // No stencil reaches past the data ghosts 0 and N+1.
  for (int i = 0; i <= 100; ++i) {
    const auto& a = interface_matrix(i, 100, fam, true, true);
    CHECK(i + a.min_offset() >= 0);
    CHECK(i + a.max_offset() <= 101);
  }
}

TEST_CASE("constant state is steady") {
  for (int p = 1; p <= 3; ++p) {
    const Grid1D g(20, -1.0, 1.0);
    auto data = BBoundary::inflow([](double) { return Burgers::make(0.8); });
    Scheme1D<Burgers> s(Burgers{}, g, burgers_config(p, 2 * p - 1), data, data);
    std::vector<BState> u(20, Burgers::make(0.8));
    for (const auto& r : s.rhs(u, 0.3)) CHECK(std::abs(r(0)) <= 1e-14);
    const auto rep = entropy_residual_field(s, std::span<const BState>(u), 0.3);
    CHECK(rep.max_abs <= 1e-14);
  }
}

TEST_CASE("periodic advection order") {
  const LinearAdvection law;
  SchemeConfig<LinearAdvection> cfg;
  cfg.p = 2;
  cfg.q = 3;
  cfg.family.base = central_flux(law);
  std::vector<double> errs;
  std::vector<double> ns{16, 32, 64, 128};
  for (double nd : ns) {
    const int n = static_cast<int>(nd);
    const Grid1D g(n, 0.0, 2 * std::numbers::pi);
    Scheme1D<LinearAdvection> s(law, g, cfg, BoundaryCondition<LinearAdvection::State>::periodic(),
                                BoundaryCondition<LinearAdvection::State>::periodic());
    std::vector<LinearAdvection::State> u(n);
    for (int k = 0; k < n; ++k) u[k] = LinearAdvection::make(std::sin(g.center(k)));
    const auto r = s.rhs(u, 0.0);
    double e = 0.0;
    for (int k = 0; k < n; ++k) e = std::max(e, std::abs(r[k](0) + std::cos(g.center(k))));
    errs.push_back(e);
  }
  ConvergenceTable t;
  for (std::size_t i = 0; i < ns.size(); ++i) t.add(static_cast<int>(ns[i]), {errs[i], errs[i], errs[i]});
  CHECK(eoc(t, Norm::linf).global >= 3.9);
}

TEST_CASE("conservation telescoping and entropy residual") {
  for (int p = 1; p <= 3; ++p) {
    for (const auto& c : bc_cases()) {
      CAPTURE(p);
      CAPTURE(c.name);
      const Grid1D g(24, -3.0, 3.0,
                     c.left.carries_data() ? GridLayout::boundary_nodes : GridLayout::cell_centered);
      Scheme1D<Burgers> ec(Burgers{}, g, burgers_config(p, 2 * p - 1), c.left, c.right);
      Scheme1D<Burgers> ds(Burgers{}, g, burgers_config(p, 2 * p - 1, true, 0.7), c.left, c.right);
      const auto u = smooth_field(g, 0.3 * p);
      const std::span<const BState> su(u);
      for (const auto* s : {&ec, &ds}) {
        const auto d = conservation_check(*s, su, 0.4);
        CHECK(d.defect <= 1e-12 * d.scale);
      }
      const auto rep = entropy_residual_field(ec, su, 0.4);
      CHECK(rep.max_abs <= 1e-12 * rep.scale);
      const auto drep = entropy_residual_field(ds, su, 0.4);
      CHECK(drep.max_positive <= 1e-12 * drep.scale);
    }
  }
}

TEST_CASE("euler telescoping and entropy residual along a line") {
  const Euler2D law;
  using S = EulerState;
  for (int p = 1; p <= 3; ++p) {
    SchemeConfig<Euler2D> cfg;
    cfg.p = p;
    cfg.q = 2 * p - 1;
    cfg.family.base = ec_euler_flux(law);
    auto in = BoundaryCondition<S>::inflow([&](double) { return law.to_conservative({1.4, 3.0, 0.0, 1.0}); });
    for (Axis axis : {Axis::x, Axis::y}) {
      for (auto [l, r] : {std::pair{in, BoundaryCondition<S>::outflow()},
                          std::pair{BoundaryCondition<S>::reflective(), BoundaryCondition<S>::reflective()}}) {
        const Grid1D g(20, 0.0, 1.0);
        Scheme1D<Euler2D> s(law, g, cfg, l, r, axis);
        std::vector<S> u(20);
        for (int k = 0; k < 20; ++k) {
          const double x = g.center(k);
          u[k] = law.to_conservative({1.0 + 0.3 * std::sin(6 * x), 0.5 * std::cos(5 * x),
                                      0.2 * std::sin(3 * x), 1.0 + 0.2 * std::cos(4 * x)});
        }
        const std::span<const S> su(u);
        const auto d = conservation_check(s, su, 0.0);
        CHECK(d.defect <= 1e-12 * d.scale);
        const auto rep = entropy_residual_field(s, su, 0.0);
        CHECK(rep.max_abs <= 1e-12 * rep.scale);
      }
    }
  }
}

TEST_CASE("dissipative blend at a shock") {
  const Grid1D g(20, -1.0, 1.0);
  Scheme1D<Burgers> s(Burgers{}, g, burgers_config(2, 3, true, 1.0), BBoundary::outflow(),
                      BBoundary::outflow());
  std::vector<BState> u(20);
  for (int k = 0; k < 20; ++k) u[k] = Burgers::make(g.center(k) < 0 ? 2.0 : -2.0);
  const auto rep = entropy_residual_field(s, std::span<const BState>(u), 0.0);
  CHECK(rep.max_positive <= 1e-12 * rep.scale);
  CHECK(*std::min_element(rep.residual.begin(), rep.residual.end()) < -1e-6);
}

TEST_CASE("alpha providers") {
  const auto c = AlphaProvider::constant(0.0);
  CHECK(c(Burgers::make(1), Burgers::make(-1)) == 0.0);
  const auto j = AlphaProvider::jump_sensor();
  CHECK(j(Burgers::make(0.3), Burgers::make(0.3)) == 0.0);
  // 4 / (4 + eps) with eps = 1e-12
  CHECK(j(Burgers::make(2), Burgers::make(-2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(AlphaProvider::jump_sensor(2.0)(Burgers::make(2), Burgers::make(-2)) == 1.0);
  for (double a : {0.0, 0.3, 1.0, 5.0}) {
    const double v = j(Burgers::make(a), Burgers::make(-0.5 * a + 0.1));
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK_THROWS_AS(AlphaProvider::constant(1.5), ConfigError);
}

TEST_CASE("rhs is pure") {
  const Grid1D g(30, -2.0, 2.0, GridLayout::boundary_nodes);
  auto in = BBoundary::inflow([](double t) { return Burgers::make(1 + 0.1 * t); });
  Scheme1D<Burgers> s(Burgers{}, g, burgers_config(3, 5, true, 0.0), in, BBoundary::outflow());
  const auto u = smooth_field(g, 0.1);
  CHECK(s.rhs(u, 0.2) == s.rhs(u, 0.2));
}

TEST_CASE("residual scales cubically") {
  const Grid1D g(24, -3.0, 3.0);
  Scheme1D<Burgers> s(Burgers{}, g, burgers_config(2, 3, true, 0.5), BBoundary::outflow(),
                      BBoundary::outflow());
  auto u = smooth_field(g, 0.0);
  for (auto& x : u) x(0) = (x(0) - 0.5) * 4.0;  // sign changes so g is active
  auto u2 = u;
  for (auto& x : u2) x *= 2.0;
  const auto r1 = entropy_residual_field(s, std::span<const BState>(u), 0.0);
  const auto r2 = entropy_residual_field(s, std::span<const BState>(u2), 0.0);
  for (std::size_t k = 0; k < r1.residual.size(); ++k) {
    CHECK(r2.residual[k] == doctest::Approx(8.0 * r1.residual[k]).epsilon(1e-9).scale(1e-9));
  }
}

TEST_CASE("total entropy decays for dissipative periodic runs") {
  const Grid1D g(64, 0.0, 2.0);
  Scheme1D<Burgers> s(Burgers{}, g, burgers_config(2, 3, true, 1.0), BBoundary::periodic(),
                      BBoundary::periodic());
  std::vector<BState> u(64);
  for (int k = 0; k < 64; ++k) u[k] = Burgers::make(0.5 + std::sin(std::numbers::pi * g.center(k)));
  TimeLoopConfig tc;
  tc.cfl = 0.25;
  tc.t_end = 1.5;
  std::vector<double> totals;
  auto rhs = [&](std::span<const BState> v, double t, std::span<BState> out) { s.rhs(v, t, out); };
  auto dt = [&](std::span<const BState> v) { return cfl_dt(Burgers{}, v, g.dx(), tc.cfl); };
  integrate<BState>(rhs, u, tc, dt, [&](const StepInfo&, std::span<const BState> v) {
    double total = 0.0;
    for (const auto& x : v) total += g.dx() * 0.5 * x(0) * x(0);
    totals.push_back(total);
  });
  REQUIRE(totals.size() > 10);
  for (std::size_t i = 1; i < totals.size(); ++i) {
    CHECK(totals[i] <= totals[i - 1] + 1e-8 * std::abs(totals[i - 1]));
  }
  CHECK(totals.back() < totals.front() - 1e-3);
}
