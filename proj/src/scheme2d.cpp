#include "esflux/scheme2d.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

namespace esflux {

Grid2D::Grid2D(int cells_x, int cells_y, double length_x, double length_y, double origin_x,
               double origin_y)
    : nx(cells_x), ny(cells_y), x0(origin_x), y0(origin_y), lx(length_x), ly(length_y) {
  if (nx < 1 || ny < 1) throw GridTooSmall("2D grid needs at least one cell per direction");
  if (!(lx > 0.0) || !(ly > 0.0)) throw Error("2D grid needs positive extents");
  solid.assign(size(), 0);
}

std::size_t Grid2D::fluid_cells() const {
  std::size_t n = 0;
  for (char s : solid) n += s == 0;
  return n;
}

Grid2D build_ffs_grid(int ny, int nx) {
  if (ny < 5 || ny % 5 != 0) {
    throw MisalignedStep("ny = " + std::to_string(ny) + " does not put the step top on a face");
  }
  if (nx != 3 * ny) {
    throw MisalignedStep("nx must be 3 ny for square cells on the 3 x 1 domain");
  }
  Grid2D g(nx, ny, 3.0, 1.0);
  const int step_i = 3 * nx / 15;  // x = 3/5
  const int step_j = ny / 5;       // y = 1/5
  for (int j = 0; j < step_j; ++j) {
    for (int i = step_i; i < nx; ++i) g.solid[g.index(i, j)] = 1;
  }
  return g;
}

Primitive ffs_inflow() { return {1.4, 3.0, 0.0, 1.0}; }

Scheme2D<Euler2D> make_ffs_scheme(const FfsConfig& cfg) {
  const Euler2D law;
  const EulerState inflow = law.to_conservative(ffs_inflow());
  SchemeConfig<Euler2D> sc;
  sc.p = cfg.p;
  sc.q = cfg.q;
  sc.family.base = ec_euler_flux(law);
  sc.family.dissipative = llf_flux(law);
  sc.alpha = cfg.alpha;
  DomainBoundaries<EulerState> bc;
  bc.left = BoundaryCondition<EulerState>::inflow([inflow](double) { return inflow; });
  bc.right = BoundaryCondition<EulerState>::outflow();
  return Scheme2D<Euler2D>(law, build_ffs_grid(cfg.ny, cfg.nx), sc, bc);
}

FfsResult run_ffs(const FfsConfig& cfg, const std::function<void(const StepInfo&)>& progress) {
  const auto scheme = make_ffs_scheme(cfg);
  const auto& grid = scheme.grid();
  const Euler2D& law = scheme.law();
  const EulerState inflow = law.to_conservative(ffs_inflow());
  std::vector<EulerState> u(grid.size());
  for (std::size_t c = 0; c < u.size(); ++c) u[c] = grid.solid[c] ? EulerState::Zero() : inflow;

  FfsResult out;
  out.grid = grid;
  TimeLoopConfig tc;
  tc.cfl = cfg.cfl;
  tc.t_end = cfg.t_end;
  tc.stop_times = cfg.snapshot_times;
  auto rhs = [&](std::span<const EulerState> v, double t, std::span<EulerState> r) {
    scheme.rhs(v, t, r);
  };
  auto dt = [&](std::span<const EulerState> v) { return cfl_dt_fluid(law, grid, v, cfg.cfl); };
  auto hook = [&](const StepInfo& info, std::span<const EulerState> v) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!grid.solid[c]) law.to_primitive(v[c]);  // throws on loss of positivity
    }
    if (info.at_stop) {
      for (double s : cfg.snapshot_times) {
        if (s == info.t) out.snapshots.push_back({info.t, {v.begin(), v.end()}});
      }
    }
    if (progress) progress(info);
  };
  try {
    auto res = integrate<EulerState>(rhs, std::move(u), tc, dt, hook);
    out.field = std::move(res.state);
    out.t = res.t;
    out.steps = res.steps;
  } catch (const IntegrationError&) {
    throw;
  } catch (const Error& e) {
    throw IntegrationError(e.what(), -1, std::numeric_limits<double>::quiet_NaN());
  }

  out.min_density = std::numeric_limits<double>::infinity();
  out.min_pressure = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < out.field.size(); ++c) {
    if (grid.solid[c]) continue;
    const Primitive w = law.to_primitive(out.field[c]);
    out.min_density = std::min(out.min_density, w.rho);
    out.min_pressure = std::min(out.min_pressure, w.p);
  }
  return out;
}

double max_density_upstream(const Grid2D& grid, std::span<const EulerState> field, double x_max) {
  double m = 0.0;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      if (grid.is_solid(i, j) || grid.center_x(i) >= x_max) continue;
      m = std::max(m, field[grid.index(i, j)](0));
    }
  }
  return m;
}

void write_field_csv(std::ostream& out, const Grid2D& grid, std::span<const EulerState> field,
                     const Euler2D& law) {
  out << "i,j,x,y,solid,rho,vx,vy,p\n" << std::setprecision(17);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      out << i << ',' << j << ',' << grid.center_x(i) << ',' << grid.center_y(j) << ',';
      if (grid.is_solid(i, j)) {
        out << "1,,,,\n";
        continue;
      }
      const Primitive w = law.to_primitive(field[grid.index(i, j)]);
      out << "0," << w.rho << ',' << w.vx << ',' << w.vy << ',' << w.p << '\n';
    }
  }
}

ScalarField2D density_field(const Grid2D& grid, std::span<const EulerState> field) {
  ScalarField2D f{grid.nx, grid.ny, grid.x0, grid.y0, grid.dx(), grid.dy(), {}};
  f.values.resize(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    f.values[c] = grid.solid[c] ? std::numeric_limits<double>::quiet_NaN() : field[c](0);
  }
  return f;
}

ScalarField2D pressure_field(const Grid2D& grid, std::span<const EulerState> field,
                             const Euler2D& law) {
  ScalarField2D f{grid.nx, grid.ny, grid.x0, grid.y0, grid.dx(), grid.dy(), {}};
  f.values.resize(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    f.values[c] = grid.solid[c] ? std::numeric_limits<double>::quiet_NaN() : law.pressure(field[c]);
  }
  return f;
}

}  // namespace esflux
