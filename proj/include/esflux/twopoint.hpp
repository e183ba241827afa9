#pragma once

#include <algorithm>
#include <functional>
#include <string>

#include "esflux/equations.hpp"

namespace esflux {

// Logarithmic mean (a - b) / (ln a - ln b) for a, b > 0. Near a == b the
// Ismail-Roe series in u = ((a-b)/(a+b))^2 is used; the switch happens at
// u < 1e-4 where the four retained terms are exact to working precision.
double log_mean(double a, double b);

double tadmor_burgers(double u_left, double u_right);
double godunov_burgers(double u_left, double u_right);

// Kinetic-energy-preserving entropy conservative flux for U = -rho s/(gamma-1)
// (logarithmic means of rho and beta = rho/(2p), arithmetic means elsewhere).
EulerState ec_euler(const Euler2D& law, const EulerState& left, const EulerState& right,
                    Axis axis);

// Local Lax-Friedrichs (Rusanov) flux with the larger endpoint wavespeed.
template <ConservationLaw Law>
typename Law::State llf(const Law& law, const typename Law::State& left,
                        const typename Law::State& right, Axis axis) {
  const double lambda = std::max(law.max_wavespeed(left, axis), law.max_wavespeed(right, axis));
  return 0.5 * (law.flux(left, axis) + law.flux(right, axis)) - 0.5 * lambda * (right - left);
}

enum class Symmetry { symmetric, non_symmetric };
enum class Dissipation { conservative, dissipative };

template <ConservationLaw Law>
struct TwoPointFlux {
  using State = typename Law::State;

  std::string name;
  std::function<State(const State&, const State&, Axis)> eval;
  Symmetry symmetry = Symmetry::symmetric;
  Dissipation dissipation = Dissipation::conservative;

  State operator()(const State& left, const State& right, Axis axis) const {
    return eval(left, right, axis);
  }
  bool is_symmetric() const { return symmetry == Symmetry::symmetric; }
};

TwoPointFlux<Burgers> tadmor_flux();
TwoPointFlux<Burgers> godunov_flux();
TwoPointFlux<Euler2D> ec_euler_flux(const Euler2D& law);
// Arithmetic mean a (uL + uR)/2, entropy conservative for linear advection.
TwoPointFlux<LinearAdvection> central_flux(const LinearAdvection& law);

template <ConservationLaw Law>
TwoPointFlux<Law> llf_flux(const Law& law) {
  return {"llf",
          [law](const typename Law::State& l, const typename Law::State& r, Axis a) {
            return llf(law, l, r, a);
          },
          Symmetry::non_symmetric, Dissipation::dissipative};
}

// H(uL, uR) = 1/2 <vL + vR, h> - 1/2 (psiL + psiR) for an already evaluated h.
template <ConservationLaw Law>
double numerical_entropy_flux(const Law& law, const typename Law::State& h,
                              const typename Law::State& left, const typename Law::State& right,
                              Axis axis) {
  const auto vl = law.entropy_variables(left);
  const auto vr = law.entropy_variables(right);
  return 0.5 * (vl + vr).dot(h) - 0.5 * (law.potential(left, axis) + law.potential(right, axis));
}

template <ConservationLaw Law>
double numerical_entropy_flux(const TwoPointFlux<Law>& flux, const Law& law,
                              const typename Law::State& left, const typename Law::State& right,
                              Axis axis = Axis::x) {
  return numerical_entropy_flux(law, flux(left, right, axis), left, right, axis);
}

// <vR - vL, h(uL, uR)> - (psiR - psiL): zero for entropy conservative fluxes,
// non-positive for entropy dissipative ones.
template <ConservationLaw Law>
double entropy_condition_residual(const TwoPointFlux<Law>& flux, const Law& law,
                                  const typename Law::State& left,
                                  const typename Law::State& right, Axis axis = Axis::x) {
  const auto h = flux(left, right, axis);
  const typename Law::State dv = law.entropy_variables(right) - law.entropy_variables(left);
  return dv.dot(h) - (law.potential(right, axis) - law.potential(left, axis));
}

// Magnitude of the terms that cancel in the residual above; residuals are
// compared relative to this.
template <ConservationLaw Law>
double entropy_condition_scale(const TwoPointFlux<Law>& flux, const Law& law,
                               const typename Law::State& left, const typename Law::State& right,
                               Axis axis = Axis::x) {
  const auto h = flux(left, right, axis);
  return std::max({1.0, std::abs(law.entropy_variables(right).dot(h)),
                   std::abs(law.entropy_variables(left).dot(h)),
                   std::abs(law.potential(right, axis)), std::abs(law.potential(left, axis))});
}

}  // namespace esflux
