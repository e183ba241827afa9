#include "esflux/problems.hpp"

#include <cmath>
#include <numbers>

namespace esflux {

BoundaryCondition<Burgers::State> ScalarProblem::left_bc() const {
  auto f = left;
  return BoundaryCondition<Burgers::State>::inflow([f](double t) { return Burgers::make(f(t)); });
}

BoundaryCondition<Burgers::State> ScalarProblem::right_bc() const {
  auto f = right;
  return BoundaryCondition<Burgers::State>::inflow([f](double t) { return Burgers::make(f(t)); });
}

ScalarProblem burgers_bc_problem() {
  using std::numbers::pi;
  return {"burgers-bc", -10.0, 10.0, [](double x) { return std::sin(-pi * x / 20.0); },
          [](double t) { return 0.9 + std::cos(pi * t / 2.0) / 10.0; },
          [](double t) { return -0.9 - std::cos(pi * t / 2.0) / 10.0; }};
}

ScalarProblem pulse_problem() {
  return {"pulse", -10.0, 10.0, [](double) { return 1.0; },
          [](double t) { return 1.0 + std::exp(-(t - 5.0) * (t - 5.0)) / 50.0; },
          [](double) { return 1.0; }};
}

ScalarProblem problem_by_id(const std::string& id) {
  if (id == "burgers-bc") return burgers_bc_problem();
  if (id == "pulse") return pulse_problem();
  throw ConfigError("unknown problem '" + id + "'");
}

}  // namespace esflux
