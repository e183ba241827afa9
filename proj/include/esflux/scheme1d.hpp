#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "esflux/combined_flux.hpp"
#include "esflux/errors.hpp"

namespace esflux {

// Where the grid points sit in [a, b].
//  cell_centered:  dx = (b-a)/n, x_k = a + (k+1/2) dx; walls and periodic
//                  seams lie on the end faces.
//  boundary_nodes: dx = (b-a)/(n+1), x_k = a + (k+1) dx; the two data ghost
//                  points sit exactly on a and b, so boundary data are
//                  imposed where they are given.
enum class GridLayout { cell_centered, boundary_nodes };

struct Grid1D {
  int n = 0;
  double a = 0.0;
  double b = 1.0;
  GridLayout layout = GridLayout::cell_centered;

  Grid1D() = default;
  Grid1D(int cells, double left, double right, GridLayout lay = GridLayout::cell_centered)
      : n(cells), a(left), b(right), layout(lay) {
    if (n < 1) throw GridTooSmall("grid needs at least one cell");
    if (!(b > a)) throw Error("grid needs b > a");
  }

  double dx() const { return layout == GridLayout::cell_centered ? (b - a) / n : (b - a) / (n + 1); }

  // Interior cell k = 0..n-1.
  double center(int k) const {
    return layout == GridLayout::cell_centered ? a + (k + 0.5) * dx() : a + (k + 1) * dx();
  }
};

enum class BoundaryKind { periodic, inflow, outflow, reflective };

std::string to_string(BoundaryKind kind);
BoundaryKind parse_boundary_kind(const std::string& text);

template <class State>
struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::periodic;
  // Ghost value for inflow boundaries, defined for all t >= 0.
  std::function<State(double)> inflow_state;

  static BoundaryCondition periodic() { return {BoundaryKind::periodic, {}}; }
  static BoundaryCondition outflow() { return {BoundaryKind::outflow, {}}; }
  static BoundaryCondition reflective() { return {BoundaryKind::reflective, {}}; }
  static BoundaryCondition inflow(std::function<State(double)> data) {
    return {BoundaryKind::inflow, std::move(data)};
  }

  // Inflow and outflow carry data in one ghost cell and use boundary matrices.
  bool carries_data() const { return kind == BoundaryKind::inflow || kind == BoundaryKind::outflow; }
};

// Blend weight per interface. The jump sensor
//   alpha = min(1, C |uR - uL| / (|uL| + |uR| + eps))
// stands in for a full entropy-inequality predictor.
struct AlphaProvider {
  enum class Kind { constant, jump_sensor };

  Kind kind = Kind::constant;
  double value = 0.0;
  double c = 1.0;
  double eps = 1e-12;

  static AlphaProvider constant(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
    return {Kind::constant, alpha, 1.0, 1e-12};
  }
  static AlphaProvider jump_sensor(double c = 1.0, double eps = 1e-12) {
    if (!(c >= 0.0) || !(eps > 0.0)) throw ConfigError("jump sensor needs C >= 0, eps > 0");
    return {Kind::jump_sensor, 0.0, c, eps};
  }

  template <class State>
  double operator()(const State& left, const State& right) const {
    if (kind == Kind::constant) return value;
    return std::min(1.0, c * (right - left).norm() / (left.norm() + right.norm() + eps));
  }
};

template <ConservationLaw Law>
struct SchemeConfig {
  int p = 2;
  int q = 3;
  FluxFamily<Law> family;
  AlphaProvider alpha = AlphaProvider::constant(0.0);
};

// Picks the matrix for interface i + 1/2, i = 0..n (cells are numbered 1..n
// with data ghosts 0 and n+1). Sides that carry data use A^{p,-p..-1} on the
// left and A^{p,1..p} on the right so that no stencil reaches past the ghost.
const FluxMatrix& interface_matrix(int interface, int n, const BoundaryFamily& family,
                                   bool left_data, bool right_data);

// Interface-flux machinery for one line of cells, shared by the 1D and 2D
// schemes. A line is n cells with a halo of p states on each side; `ext`
// points at the first halo state, so cell c (1-based) is ext[c + p - 1].
template <ConservationLaw Law>
class LineOperator {
 public:
  using State = typename Law::State;

  LineOperator(Law law, const SchemeConfig<Law>& cfg)
      : law_(std::move(law)),
        cfg_(cfg),
        family_(boundary_matrices(cfg.p, cfg.q)),
        stencils_() {
    for (int idx = -cfg.p; idx <= cfg.p; ++idx) stencils_.emplace_back(family_[idx]);
    if (cfg.family.dissipative) {
      for (int idx = -cfg.p; idx <= cfg.p; ++idx) {
        if (!blend_positivity_check(family_[idx])) {
          throw ConfigError("matrix A^{" + std::to_string(cfg.p) + "," + std::to_string(idx) +
                            "} has a negative interface entry; blending is not dissipative");
        }
      }
    }
  }

  const Law& law() const { return law_; }
  const SchemeConfig<Law>& config() const { return cfg_; }
  int p() const { return cfg_.p; }
  int halo() const { return cfg_.p; }
  const BoundaryFamily& matrices() const { return family_; }

  int min_cells(bool left_data, bool right_data) const {
    return (left_data || right_data) ? 2 * cfg_.p + 1 : cfg_.p;
  }

  const CompiledStencil& stencil(int interface, int n, bool left_data, bool right_data) const {
    const int p = cfg_.p;
    if (left_data && interface < p) return stencils_[interface];  // A^{p, interface - p}
    if (right_data && interface > n - p) return stencils_[p + interface - (n - p)];
    return stencils_[p];
  }

  // Fluxes f_{i+1/2}, i = 0..n, and the blend weight used at each.
  void fluxes(const State* ext, int n, bool left_data, bool right_data, Axis axis, State* flux,
              double* alpha) const {
    if (n < min_cells(left_data, right_data)) {
      throw GridTooSmall("line of " + std::to_string(n) + " cells is too short for p = " +
                         std::to_string(cfg_.p));
    }
    const bool blend = cfg_.family.dissipative.has_value();
    for (int i = 0; i <= n; ++i) {
      const State* origin = ext + (i + cfg_.p - 1);
      const double a = blend ? cfg_.alpha(origin[0], origin[1]) : 0.0;
      flux[i] = detail::combined_flux_at(stencil(i, n, left_data, right_data), cfg_.family, origin,
                                         axis, a);
      if (alpha) alpha[i] = a;
    }
  }

  void entropy_fluxes(const State* ext, int n, bool left_data, bool right_data, Axis axis,
                      const double* alpha, double* out) const {
    for (int i = 0; i <= n; ++i) {
      const State* origin = ext + (i + cfg_.p - 1);
      out[i] = detail::combined_entropy_flux_at(stencil(i, n, left_data, right_data), cfg_.family,
                                                law_, origin, axis, alpha ? alpha[i] : 0.0);
    }
  }

 private:
  Law law_;
  SchemeConfig<Law> cfg_;
  BoundaryFamily family_;
  std::vector<CompiledStencil> stencils_;
};

// Fills the p halo states on each side of a line from its n interior states
// (ext[p .. p+n-1] must already hold them).
template <ConservationLaw Law>
void fill_line_halo(const Law& law, std::span<typename Law::State> ext, int n, int halo,
                    const BoundaryCondition<typename Law::State>& left,
                    const BoundaryCondition<typename Law::State>& right, double t, Axis axis) {
  auto cell = [&](int c) -> typename Law::State& { return ext[c + halo - 1]; };
  switch (left.kind) {
    case BoundaryKind::periodic:
      for (int j = 0; j < halo; ++j) cell(-j) = cell(n - j);
      break;
    case BoundaryKind::reflective:
      for (int j = 1; j <= halo; ++j) cell(1 - j) = law.mirror(cell(j), axis);
      break;
    case BoundaryKind::inflow:
      cell(0) = left.inflow_state(t);
      for (int j = 1; j < halo; ++j) cell(-j) = cell(0);
      break;
    case BoundaryKind::outflow:
      for (int j = 0; j < halo; ++j) cell(-j) = cell(1);
      break;
  }
  switch (right.kind) {
    case BoundaryKind::periodic:
      for (int j = 1; j <= halo; ++j) cell(n + j) = cell(j);
      break;
    case BoundaryKind::reflective:
      for (int j = 1; j <= halo; ++j) cell(n + j) = law.mirror(cell(n + 1 - j), axis);
      break;
    case BoundaryKind::inflow:
      cell(n + 1) = right.inflow_state(t);
      for (int j = 2; j <= halo; ++j) cell(n + j) = cell(n + 1);
      break;
    case BoundaryKind::outflow:
      for (int j = 1; j <= halo; ++j) cell(n + j) = cell(n);
      break;
  }
}

// Semidiscrete scheme du_k/dt = (f_{k-1/2} - f_{k+1/2}) / dx on a 1D grid.
template <ConservationLaw Law>
class Scheme1D {
 public:
  using State = typename Law::State;
  using Boundary = BoundaryCondition<State>;

  struct InterfaceData {
    std::vector<State> flux;  // f_{i+1/2}, i = 0..n
    std::vector<double> alpha;
  };

  Scheme1D(Law law, Grid1D grid, const SchemeConfig<Law>& cfg, Boundary left, Boundary right,
           Axis axis = Axis::x)
      : line_(std::move(law), cfg),
        grid_(grid),
        left_(std::move(left)),
        right_(std::move(right)),
        axis_(axis) {
    if ((left_.kind == BoundaryKind::periodic) != (right_.kind == BoundaryKind::periodic)) {
      throw ConfigError("periodic boundaries must be set on both sides");
    }
    if ((left_.kind == BoundaryKind::inflow && !left_.inflow_state) ||
        (right_.kind == BoundaryKind::inflow && !right_.inflow_state)) {
      throw ConfigError("inflow boundary without data");
    }
    if (grid_.n < 2 * cfg.p + 1) {
      throw GridTooSmall("need N >= 2p+1 = " + std::to_string(2 * cfg.p + 1) + " cells, got " +
                         std::to_string(grid_.n));
    }
  }

  const Law& law() const { return line_.law(); }
  const Grid1D& grid() const { return grid_; }
  const SchemeConfig<Law>& config() const { return line_.config(); }
  const LineOperator<Law>& line() const { return line_; }
  int halo() const { return line_.halo(); }
  Axis axis() const { return axis_; }
  const Boundary& left() const { return left_; }
  const Boundary& right() const { return right_; }

  const FluxMatrix& interface_matrix(int interface) const {
    return esflux::interface_matrix(interface, grid_.n, line_.matrices(), left_.carries_data(),
                                    right_.carries_data());
  }

  // Interior states plus halo; cell c (1-based) at index c + halo - 1.
  std::vector<State> fill_ghosts(std::span<const State> u, double t) const {
    check_size(u.size());
    std::vector<State> ext(grid_.n + 2 * halo());
    std::copy(u.begin(), u.end(), ext.begin() + halo());
    fill_line_halo(law(), std::span<State>(ext), grid_.n, halo(), left_, right_, t, axis_);
    return ext;
  }

  InterfaceData interface_fluxes(std::span<const State> ext) const {
    InterfaceData d{std::vector<State>(grid_.n + 1), std::vector<double>(grid_.n + 1)};
    line_.fluxes(ext.data(), grid_.n, left_.carries_data(), right_.carries_data(), axis_,
                 d.flux.data(), d.alpha.data());
    return d;
  }

  std::vector<double> interface_entropy_fluxes(std::span<const State> ext,
                                               std::span<const double> alpha) const {
    std::vector<double> out(grid_.n + 1);
    line_.entropy_fluxes(ext.data(), grid_.n, left_.carries_data(), right_.carries_data(), axis_,
                         alpha.data(), out.data());
    return out;
  }

  void rhs(std::span<const State> u, double t, std::span<State> out) const {
    const auto ext = fill_ghosts(u, t);
    const auto d = interface_fluxes(ext);
    const double inv_dx = 1.0 / grid_.dx();
    for (int k = 0; k < grid_.n; ++k) out[k] = (d.flux[k] - d.flux[k + 1]) * inv_dx;
  }

  std::vector<State> rhs(std::span<const State> u, double t) const {
    std::vector<State> out(grid_.n);
    rhs(u, t, std::span<State>(out));
    return out;
  }

 private:
  void check_size(std::size_t size) const {
    if (size != static_cast<std::size_t>(grid_.n)) {
      throw Error("state has " + std::to_string(size) + " cells, grid has " +
                  std::to_string(grid_.n));
    }
  }

  LineOperator<Law> line_;
  Grid1D grid_;
  Boundary left_;
  Boundary right_;
  Axis axis_;
};

}  // namespace esflux
