#include "esflux/twopoint.hpp"

#include <cmath>

namespace esflux {

double log_mean(double a, double b) {
  const double sum = a + b;
  const double f = (a - b) / sum;
  const double u = f * f;
  if (u < 1e-4) {
    return 0.5 * sum / (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0))));
  }
  // ln(a/b) = 2 atanh(f); avoids the cancellation in ln a - ln b.
  return 0.5 * sum * f / std::atanh(f);
}

double tadmor_burgers(double u_left, double u_right) {
  return (u_left * u_left + u_left * u_right + u_right * u_right) / 6.0;
}

double godunov_burgers(double u_left, double u_right) {
  if (u_left <= u_right) {
    if (u_left <= 0.0 && 0.0 <= u_right) return 0.0;
    return u_left > 0.0 ? burgers_flux(u_left) : burgers_flux(u_right);
  }
  const double shock_speed = 0.5 * (u_left + u_right);
  return shock_speed < 0.0 ? burgers_flux(u_right) : burgers_flux(u_left);
}

EulerState ec_euler(const Euler2D& law, const EulerState& left, const EulerState& right,
                    Axis axis) {
  const Primitive l = law.to_primitive(left);
  const Primitive r = law.to_primitive(right);
  const double beta_l = 0.5 * l.rho / l.p;
  const double beta_r = 0.5 * r.rho / r.p;

  const double rho_ln = log_mean(l.rho, r.rho);
  const double beta_ln = log_mean(beta_l, beta_r);
  const double rho_avg = 0.5 * (l.rho + r.rho);
  const double beta_avg = 0.5 * (beta_l + beta_r);
  const double vx = 0.5 * (l.vx + r.vx);
  const double vy = 0.5 * (l.vy + r.vy);
  const double v2_avg = 0.5 * ((l.vx * l.vx + l.vy * l.vy) + (r.vx * r.vx + r.vy * r.vy));
  const double p_hat = 0.5 * rho_avg / beta_avg;
  const double vn = axis == Axis::x ? vx : vy;

  EulerState h;
  h(0) = rho_ln * vn;
  h(1) = h(0) * vx;
  h(2) = h(0) * vy;
  h(axis == Axis::x ? 1 : 2) += p_hat;
  h(3) = (0.5 / ((law.gamma() - 1.0) * beta_ln) - 0.5 * v2_avg) * h(0) + vx * h(1) + vy * h(2);
  return h;
}

TwoPointFlux<Burgers> tadmor_flux() {
  return {"tadmor",
          [](const Burgers::State& l, const Burgers::State& r, Axis) {
            return Burgers::make(tadmor_burgers(l(0), r(0)));
          },
          Symmetry::symmetric, Dissipation::conservative};
}

TwoPointFlux<Burgers> godunov_flux() {
  return {"godunov",
          [](const Burgers::State& l, const Burgers::State& r, Axis) {
            return Burgers::make(godunov_burgers(l(0), r(0)));
          },
          Symmetry::non_symmetric, Dissipation::dissipative};
}

TwoPointFlux<Euler2D> ec_euler_flux(const Euler2D& law) {
  return {"ec_euler",
          [law](const EulerState& l, const EulerState& r, Axis a) { return ec_euler(law, l, r, a); },
          Symmetry::symmetric, Dissipation::conservative};
}

TwoPointFlux<LinearAdvection> central_flux(const LinearAdvection& law) {
  return {"central",
          [law](const LinearAdvection::State& l, const LinearAdvection::State& r, Axis) {
            return LinearAdvection::State(0.5 * law.speed * (l + r));
          },
          Symmetry::symmetric, Dissipation::conservative};
}

}  // namespace esflux
