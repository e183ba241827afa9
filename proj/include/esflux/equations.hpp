#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <span>

#include "esflux/errors.hpp"

namespace esflux {

enum class Axis { x = 0, y = 1 };

// Analytic ingredients of one conservation law. The potential satisfies
// psi = <v, f> - F in every direction.
template <class L>
concept ConservationLaw = requires(const L& law, const typename L::State& u, Axis a) {
  { L::kVars } -> std::convertible_to<int>;
  { law.flux(u, a) } -> std::convertible_to<typename L::State>;
  { law.entropy(u) } -> std::convertible_to<double>;
  { law.entropy_flux(u, a) } -> std::convertible_to<double>;
  { law.entropy_variables(u) } -> std::convertible_to<typename L::State>;
  { law.potential(u, a) } -> std::convertible_to<double>;
  { law.max_wavespeed(u, a) } -> std::convertible_to<double>;
  { law.mirror(u, a) } -> std::convertible_to<typename L::State>;
};

// ---------------------------------------------------------------------------
// Burgers: u_t + (u^2/2)_x = 0 with the square entropy U = u^2/2.

struct BurgersEntropy {
  double U;
  double F;
  double v;
  double psi;
};

inline double burgers_flux(double u) { return 0.5 * u * u; }

inline BurgersEntropy burgers_entropy(double u) {
  return {0.5 * u * u, u * u * u / 3.0, u, u * u * u / 6.0};
}

struct Burgers {
  static constexpr int kVars = 1;
  using State = Eigen::Matrix<double, 1, 1>;

  static State make(double u) {
    State s;
    s(0) = u;
    return s;
  }

  State flux(const State& u, Axis = Axis::x) const { return make(burgers_flux(u(0))); }
  double entropy(const State& u) const { return burgers_entropy(u(0)).U; }
  double entropy_flux(const State& u, Axis = Axis::x) const { return burgers_entropy(u(0)).F; }
  State entropy_variables(const State& u) const { return u; }
  double potential(const State& u, Axis = Axis::x) const { return burgers_entropy(u(0)).psi; }
  double max_wavespeed(const State& u, Axis = Axis::x) const { return std::abs(u(0)); }
  // Reflection negates the (only) velocity.
  State mirror(const State& u, Axis = Axis::x) const { return -u; }
};

// Linear advection u_t + a u_x = 0 with U = u^2/2.
struct LinearAdvection {
  static constexpr int kVars = 1;
  using State = Eigen::Matrix<double, 1, 1>;
  double speed = 1.0;

  static State make(double u) {
    State s;
    s(0) = u;
    return s;
  }
  State flux(const State& u, Axis = Axis::x) const { return speed * u; }
  double entropy(const State& u) const { return 0.5 * u(0) * u(0); }
  double entropy_flux(const State& u, Axis = Axis::x) const { return 0.5 * speed * u(0) * u(0); }
  State entropy_variables(const State& u) const { return u; }
  double potential(const State& u, Axis = Axis::x) const { return 0.5 * speed * u(0) * u(0); }
  double max_wavespeed(const State&, Axis = Axis::x) const { return std::abs(speed); }
  State mirror(const State& u, Axis = Axis::x) const { return -u; }
};

// ---------------------------------------------------------------------------
// Two-dimensional compressible Euler, ideal gas. Conserved state is
// (rho, rho vx, rho vy, E).

using EulerState = Eigen::Vector4d;

struct Primitive {
  double rho;
  double vx;
  double vy;
  double p;
};

struct EulerEntropy {
  double U;
  double Fx;
  double Fy;
  EulerState v;
  double psi_x;
  double psi_y;
};

class Euler2D {
 public:
  static constexpr int kVars = 4;
  using State = EulerState;

  explicit Euler2D(double gamma = 1.4) : gamma_(gamma) {
    if (!(gamma > 1.0)) throw Error("Euler2D: gamma must exceed 1");
  }

  double gamma() const { return gamma_; }

  State to_conservative(const Primitive& w) const {
    if (!(w.rho > 0.0) || !(w.p > 0.0)) {
      throw NonPhysicalState("non-physical primitive state (rho = " + std::to_string(w.rho) +
                             ", p = " + std::to_string(w.p) + ")");
    }
    State u;
    u << w.rho, w.rho * w.vx, w.rho * w.vy,
        w.p / (gamma_ - 1.0) + 0.5 * w.rho * (w.vx * w.vx + w.vy * w.vy);
    return u;
  }

  Primitive to_primitive(const State& u) const {
    const double rho = u(0);
    if (!(rho > 0.0)) throw NonPhysicalState("non-positive density " + std::to_string(rho));
    const double vx = u(1) / rho;
    const double vy = u(2) / rho;
    const double p = (gamma_ - 1.0) * (u(3) - 0.5 * rho * (vx * vx + vy * vy));
    if (!(p > 0.0)) throw NonPhysicalState("non-positive pressure " + std::to_string(p));
    return {rho, vx, vy, p};
  }

  double pressure(const State& u) const { return to_primitive(u).p; }

  // s = ln p - gamma ln rho
  double specific_entropy(const State& u) const {
    const Primitive w = to_primitive(u);
    return std::log(w.p) - gamma_ * std::log(w.rho);
  }

  double sound_speed(const State& u) const {
    const Primitive w = to_primitive(u);
    return std::sqrt(gamma_ * w.p / w.rho);
  }

  State flux(const State& u, Axis axis) const {
    const Primitive w = to_primitive(u);
    const double vn = axis == Axis::x ? w.vx : w.vy;
    State f;
    f(0) = u(0) * vn;
    f(1) = u(1) * vn;
    f(2) = u(2) * vn;
    f(axis == Axis::x ? 1 : 2) += w.p;
    f(3) = vn * (u(3) + w.p);
    return f;
  }

  double entropy(const State& u) const { return -u(0) * specific_entropy(u) / (gamma_ - 1.0); }

  double entropy_flux(const State& u, Axis axis) const {
    const Primitive w = to_primitive(u);
    return (axis == Axis::x ? w.vx : w.vy) * entropy(u);
  }

  State entropy_variables(const State& u) const {
    const Primitive w = to_primitive(u);
    const double s = std::log(w.p) - gamma_ * std::log(w.rho);
    const double beta = w.rho / (2.0 * w.p);
    State v;
    v << (gamma_ - s) / (gamma_ - 1.0) - beta * (w.vx * w.vx + w.vy * w.vy), 2.0 * beta * w.vx,
        2.0 * beta * w.vy, -2.0 * beta;
    return v;
  }

  double potential(const State& u, Axis axis) const { return axis == Axis::x ? u(1) : u(2); }

  double max_wavespeed(const State& u, Axis axis) const {
    const Primitive w = to_primitive(u);
    return std::abs(axis == Axis::x ? w.vx : w.vy) + std::sqrt(gamma_ * w.p / w.rho);
  }

  // Same density and pressure, face-normal velocity negated.
  State mirror(const State& u, Axis axis) const {
    State m = u;
    const int k = axis == Axis::x ? 1 : 2;
    m(k) = -m(k);
    return m;
  }

 private:
  double gamma_;
};

EulerEntropy euler_entropy(const Euler2D& law, const EulerState& u);

// Largest directional signal speed over a field.
template <ConservationLaw Law>
double max_wavespeed(const Law& law, std::span<const typename Law::State> field, Axis axis) {
  double s = 0.0;
  for (const auto& u : field) s = std::max(s, law.max_wavespeed(u, axis));
  return s;
}

static_assert(ConservationLaw<Burgers>);
static_assert(ConservationLaw<Euler2D>);
static_assert(ConservationLaw<LinearAdvection>);

}  // namespace esflux
