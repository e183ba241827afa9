#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "esflux/plot.hpp"
#include "esflux/scheme1d.hpp"
#include "esflux/timeint.hpp"

namespace esflux {

// Cell-centred nx by ny grid on [x0, x0 + lx] x [y0, y0 + ly] with an optional
// solid mask. Cell (i, j) is stored at j * nx + i.
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double lx = 1.0;
  double ly = 1.0;
  std::vector<char> solid;

  Grid2D() = default;
  Grid2D(int cells_x, int cells_y, double length_x, double length_y, double origin_x = 0.0,
         double origin_y = 0.0);

  double dx() const { return lx / nx; }
  double dy() const { return ly / ny; }
  double center_x(int i) const { return x0 + (i + 0.5) * dx(); }
  double center_y(int j) const { return y0 + (j + 0.5) * dy(); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  bool is_solid(int i, int j) const { return solid[index(i, j)] != 0; }
  std::size_t fluid_cells() const;
};

// Domain [0,3] x [0,1] with the step x >= 3/5, y < 1/5 masked out. The step
// edges must fall on cell faces: ny % 5 == 0 and nx == 3 ny. Throws
// MisalignedStep.
Grid2D build_ffs_grid(int ny, int nx);

// A maximal run of fluid cells along one grid line with the boundary
// conditions at its two ends.
template <class State>
struct LineSegment {
  Axis axis = Axis::x;
  // Row index j for x-lines, column index i for y-lines.
  int line = 0;
  int first = 0;
  int count = 0;
  BoundaryCondition<State> lower;
  BoundaryCondition<State> upper;
};

// Conditions on the four sides of the box; faces between fluid and solid
// cells are always reflective walls.
template <class State>
struct DomainBoundaries {
  BoundaryCondition<State> left = BoundaryCondition<State>::reflective();
  BoundaryCondition<State> right = BoundaryCondition<State>::reflective();
  BoundaryCondition<State> bottom = BoundaryCondition<State>::reflective();
  BoundaryCondition<State> top = BoundaryCondition<State>::reflective();
};

template <class State>
std::vector<LineSegment<State>> build_segments(const Grid2D& grid,
                                               const DomainBoundaries<State>& bc) {
  using Bc = BoundaryCondition<State>;
  std::vector<LineSegment<State>> out;
  auto scan = [&](Axis axis, int lines, int length, auto solid_at, const Bc& lo, const Bc& hi) {
    for (int line = 0; line < lines; ++line) {
      int s = 0;
      while (s < length) {
        if (solid_at(line, s)) {
          ++s;
          continue;
        }
        int e = s;
        while (e + 1 < length && !solid_at(line, e + 1)) ++e;
        out.push_back({axis, line, s, e - s + 1, s == 0 ? lo : Bc::reflective(),
                       e == length - 1 ? hi : Bc::reflective()});
        s = e + 1;
      }
    }
  };
  scan(Axis::x, grid.ny, grid.nx, [&](int j, int i) { return grid.is_solid(i, j); }, bc.left,
       bc.right);
  scan(Axis::y, grid.nx, grid.ny, [&](int i, int j) { return grid.is_solid(i, j); }, bc.bottom,
       bc.top);
  return out;
}

// Dimension-by-dimension scheme: the x- and y-line flux differences of the
// 1D machinery are summed into one right-hand side. Solid cells keep a zero
// derivative and are never read.
template <ConservationLaw Law>
class Scheme2D {
 public:
  using State = typename Law::State;
  using Segment = LineSegment<State>;

  Scheme2D(Law law, Grid2D grid, const SchemeConfig<Law>& cfg, DomainBoundaries<State> bc)
      : line_(std::move(law), cfg), grid_(std::move(grid)), bc_(std::move(bc)) {
    for (const auto* side : {&bc_.left, &bc_.right, &bc_.bottom, &bc_.top}) {
      if (side->kind == BoundaryKind::periodic) {
        throw ConfigError("periodic sides are not supported in 2D");
      }
      if (side->kind == BoundaryKind::inflow && !side->inflow_state) {
        throw ConfigError("inflow boundary without data");
      }
    }
    segments_ = build_segments(grid_, bc_);
    for (const auto& s : segments_) {
      if (s.count < line_.min_cells(s.lower.carries_data(), s.upper.carries_data())) {
        throw GridTooSmall("a grid line of " + std::to_string(s.count) +
                           " fluid cells is too short for p = " + std::to_string(cfg.p));
      }
    }
  }

  const Law& law() const { return line_.law(); }
  const Grid2D& grid() const { return grid_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const LineOperator<Law>& line() const { return line_; }

  // Interface fluxes of one segment, f_{i+1/2} for i = 0..count.
  std::vector<State> segment_fluxes(const Segment& s, std::span<const State> field,
                                    double t) const {
    const int h = line_.halo();
    std::vector<State> ext(s.count + 2 * h);
    for (int k = 0; k < s.count; ++k) ext[k + h] = field[cell_index(s, k)];
    fill_line_halo(law(), std::span<State>(ext), s.count, h, s.lower, s.upper, t, s.axis);
    std::vector<State> flux(s.count + 1);
    line_.fluxes(ext.data(), s.count, s.lower.carries_data(), s.upper.carries_data(), s.axis,
                 flux.data(), nullptr);
    return flux;
  }

  void rhs(std::span<const State> field, double t, std::span<State> out) const {
    check_size(field.size());
    for (auto& v : out) v.setZero();
    for (const auto& s : segments_) {
      const auto flux = segment_fluxes(s, field, t);
      const double inv = 1.0 / (s.axis == Axis::x ? grid_.dx() : grid_.dy());
      for (int k = 0; k < s.count; ++k) out[cell_index(s, k)] += (flux[k] - flux[k + 1]) * inv;
    }
  }

  std::vector<State> rhs(std::span<const State> field, double t) const {
    std::vector<State> out(field.size());
    rhs(field, t, std::span<State>(out));
    return out;
  }

  // Sum over fluid cells of dx dy rhs against the fluxes through the ends of
  // every segment.
  struct Balance {
    State total;
    State boundary;
    double defect = 0.0;
    double scale = 1.0;
  };

  Balance balance(std::span<const State> field, double t) const {
    Balance b{State::Zero(), State::Zero(), 0.0, 1.0};
    const auto r = rhs(field, t);
    const double area = grid_.dx() * grid_.dy();
    for (int j = 0; j < grid_.ny; ++j) {
      for (int i = 0; i < grid_.nx; ++i) {
        if (!grid_.is_solid(i, j)) b.total += area * r[grid_.index(i, j)];
      }
    }
    for (const auto& s : segments_) {
      const auto flux = segment_fluxes(s, field, t);
      const double width = s.axis == Axis::x ? grid_.dy() : grid_.dx();
      b.boundary += width * (flux.front() - flux.back());
      b.scale = std::max({b.scale, flux.front().template lpNorm<Eigen::Infinity>(),
                          flux.back().template lpNorm<Eigen::Infinity>()});
    }
    b.defect = (b.total - b.boundary).template lpNorm<Eigen::Infinity>();
    return b;
  }

  std::size_t cell_index(const Segment& s, int k) const {
    return s.axis == Axis::x ? grid_.index(s.first + k, s.line) : grid_.index(s.line, s.first + k);
  }

 private:
  void check_size(std::size_t size) const {
    if (size != grid_.size()) throw Error("field does not match the 2D grid");
  }

  LineOperator<Law> line_;
  Grid2D grid_;
  DomainBoundaries<State> bc_;
  std::vector<Segment> segments_;
};

// dt = lambda / (sx/dx + sy/dy) over the fluid cells.
template <ConservationLaw Law>
double cfl_dt_fluid(const Law& law, const Grid2D& grid, std::span<const typename Law::State> field,
                    double lambda) {
  double sx = 0.0, sy = 0.0;
  for (std::size_t c = 0; c < field.size(); ++c) {
    if (grid.solid[c]) continue;
    sx = std::max(sx, law.max_wavespeed(field[c], Axis::x));
    sy = std::max(sy, law.max_wavespeed(field[c], Axis::y));
  }
  const double rate = sx / grid.dx() + sy / grid.dy();
  if (rate == 0.0) throw Error("zero wavespeed everywhere");
  return lambda / rate;
}

// ---------------------------------------------------------------------------
// Forward-facing step

// rho = 1.4, vx = 3, vy = 0, p = 1
Primitive ffs_inflow();

struct FfsConfig {
  int nx = 240;
  int ny = 80;
  int p = 2;
  int q = 3;
  double cfl = 0.3;
  double t_end = 3.0;
  AlphaProvider alpha = AlphaProvider::jump_sensor();
  std::vector<double> snapshot_times;
};

struct FieldSnapshot {
  double t = 0.0;
  std::vector<EulerState> field;
};

struct FfsResult {
  Grid2D grid;
  std::vector<EulerState> field;
  double t = 0.0;
  long steps = 0;
  std::vector<FieldSnapshot> snapshots;
  double min_density = 0.0;
  double min_pressure = 0.0;
};

Scheme2D<Euler2D> make_ffs_scheme(const FfsConfig& cfg);

// Runs the step problem from the uniform inflow state. `progress` is called
// after every step. Throws IntegrationError when the solution breaks down.
FfsResult run_ffs(const FfsConfig& cfg,
                  const std::function<void(const StepInfo&)>& progress = {});

// Largest density in fluid cells whose centre lies left of x_max.
double max_density_upstream(const Grid2D& grid, std::span<const EulerState> field, double x_max);

// "i,j,x,y,solid,rho,vx,vy,p" for all nx*ny cells; the primitive columns
// are empty for solid cells.
void write_field_csv(std::ostream& out, const Grid2D& grid, std::span<const EulerState> field,
                     const Euler2D& law = Euler2D{});

// Contour-ready fields with NaN in solid cells.
ScalarField2D density_field(const Grid2D& grid, std::span<const EulerState> field);
ScalarField2D pressure_field(const Grid2D& grid, std::span<const EulerState> field,
                             const Euler2D& law = Euler2D{});

}  // namespace esflux
