#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "esflux/equations.hpp"
#include "esflux/errors.hpp"

namespace esflux {

struct TimeLoopConfig {
  double cfl = 0.25;
  double t_end = 0.0;
  std::optional<double> fixed_dt;
  // Extra times the loop must land on exactly (snapshots, diagnostics).
  std::vector<double> stop_times;
  long max_steps = 100000000;

  void validate() const {
    if (!(cfl > 0.0)) throw ConfigError("cfl must be positive");
    if (!(t_end >= 0.0)) throw ConfigError("end time must be non-negative");
    if (fixed_dt && !(*fixed_dt > 0.0)) throw ConfigError("fixed dt must be positive");
  }
};

struct StepInfo {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  // True when t is one of the requested stop times (or the start / end).
  bool at_stop = false;
};

template <class State>
struct IntegrationResult {
  std::vector<State> state;
  double t = 0.0;
  long steps = 0;
};

namespace detail {

inline bool finite(double x) { return std::isfinite(x); }
template <class Derived>
bool finite(const Eigen::MatrixBase<Derived>& x) {
  return x.allFinite();
}

}  // namespace detail

// One SSPRK(3,3) step in Shu-Osher form, evaluated as
//   u1 = u + dt L0,  u2 = u + dt/4 (L0 + L1),  u3 = u + dt/6 (L0 + L1 + 4 L2)
// with stage times t, t + dt, t + dt/2. `rhs(u, t, out)` writes L(u, t).
template <class State, class Rhs>
std::vector<State> ssprk33_step(Rhs&& rhs, std::span<const State> u, double t, double dt) {
  if (!(dt > 0.0)) throw Error("ssprk33_step needs dt > 0");
  const std::size_t n = u.size();
  std::vector<State> l0(n), l1(n), l2(n), stage(n);
  rhs(u, t, std::span<State>(l0));
  for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + dt * l0[i];
  rhs(std::span<const State>(stage), t + dt, std::span<State>(l1));
  for (std::size_t i = 0; i < n; ++i) {
    l0[i] = l0[i] + l1[i];
    stage[i] = u[i] + (0.25 * dt) * l0[i];
  }
  rhs(std::span<const State>(stage), t + 0.5 * dt, std::span<State>(l2));
  for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + dt * ((l0[i] + 4.0 * l2[i]) / 6.0);
  return stage;
}

// dt = lambda dx / max wavespeed, capped at `remaining`.
template <ConservationLaw Law>
double cfl_dt(const Law& law, std::span<const typename Law::State> field, double dx, double lambda,
              double remaining = std::numeric_limits<double>::infinity()) {
  const double s = max_wavespeed(law, field, Axis::x);
  if (s == 0.0) return remaining;
  return std::min(lambda * dx / s, remaining);
}

// 2D form dt = lambda / (sx/dx + sy/dy).
template <ConservationLaw Law>
double cfl_dt_2d(const Law& law, std::span<const typename Law::State> field, double dx, double dy,
                 double lambda, double remaining = std::numeric_limits<double>::infinity()) {
  const double rate = max_wavespeed(law, field, Axis::x) / dx + max_wavespeed(law, field, Axis::y) / dy;
  if (rate == 0.0) return remaining;
  return std::min(lambda / rate, remaining);
}

// Advances u0 to cfg.t_end. `dt_of(u)` gives the stable step for the current
// state (ignored when cfg.fixed_dt is set); the step is clipped so that every
// stop time and t_end are hit exactly. `hook` runs at the start and after every
// accepted step. Failures inside the loop are rethrown as IntegrationError.
template <class State, class Rhs, class DtFn>
IntegrationResult<State> integrate(
    Rhs&& rhs, std::vector<State> u0, const TimeLoopConfig& cfg, DtFn&& dt_of,
    const std::function<void(const StepInfo&, std::span<const State>)>& hook = {}) {
  cfg.validate();
  std::vector<double> stops;
  for (double s : cfg.stop_times) {
    if (s > 0.0 && s < cfg.t_end) stops.push_back(s);
  }
  stops.push_back(cfg.t_end);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

  IntegrationResult<State> res{std::move(u0), 0.0, 0};
  if (hook) hook({0, 0.0, 0.0, true}, res.state);
  std::size_t next = 0;
  while (res.t < cfg.t_end) {
    if (res.steps >= cfg.max_steps) {
      throw IntegrationError("step limit reached", static_cast<int>(res.steps), res.t);
    }
    const double target = stops[next];
    double dt = 0.0;
    try {
      dt = cfg.fixed_dt ? *cfg.fixed_dt : dt_of(std::span<const State>(res.state));
      if (!(dt > 0.0)) throw Error("non-positive time step");
      const double remaining = target - res.t;
      bool lands = false;
      if (dt >= remaining * (1.0 - 1e-12)) {
        dt = remaining;
        lands = true;
      }
      res.state = ssprk33_step<State>(rhs, std::span<const State>(res.state), res.t, dt);
      res.t = lands ? target : res.t + dt;
      ++res.steps;
      for (const auto& s : res.state) {
        if (!detail::finite(s)) throw NonPhysicalState("non-finite value in state");
      }
      if (lands) ++next;
      if (hook) hook({res.steps, res.t, dt, lands}, res.state);
    } catch (const IntegrationError&) {
      throw;
    } catch (const Error& e) {
      throw IntegrationError(e.what(), static_cast<int>(res.steps), res.t);
    }
  }
  return res;
}

}  // namespace esflux
