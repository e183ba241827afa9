#pragma once

#include <functional>
#include <string>

#include "esflux/scheme1d.hpp"

namespace esflux {

// Scalar Burgers initial-boundary value problem with data on both ends.
struct ScalarProblem {
  std::string id;
  double a = 0.0;
  double b = 1.0;
  std::function<double(double)> initial;
  std::function<double(double)> left;
  std::function<double(double)> right;

  BoundaryCondition<Burgers::State> left_bc() const;
  BoundaryCondition<Burgers::State> right_bc() const;
};

// Omega = [-10, 10], u0 = sin(-pi x / 20), u_l = 9/10 + cos(pi t / 2)/10,
// u_r = -u_l.
ScalarProblem burgers_bc_problem();

// u0 = 1, u_l = 1 + exp(-(t-5)^2)/50, u_r = 1 on [-10, 10].
ScalarProblem pulse_problem();

ScalarProblem problem_by_id(const std::string& id);

}  // namespace esflux
