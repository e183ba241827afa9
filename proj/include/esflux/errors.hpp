#pragma once

#include <stdexcept>
#include <string>

namespace esflux {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Density or pressure left the admissible set.
class NonPhysicalState : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class WindowMismatch : public Error {
 public:
  using Error::Error;
};

class GridTooSmall : public Error {
 public:
  using Error::Error;
};

class MisalignedStep : public Error {
 public:
  using Error::Error;
};

class IncompatibleGrids : public Error {
 public:
  using Error::Error;
};

class ZeroError : public Error {
 public:
  using Error::Error;
};

class EmptyData : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Wraps a failure inside the time loop with the step and time it happened at.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, int step, double time)
      : Error(what + " (step " + std::to_string(step) + ", t = " +
              std::to_string(time) + ")"),
        step_(step),
        time_(time) {}
  int step() const { return step_; }
  double time() const { return time_; }

 private:
  int step_;
  double time_;
};

}  // namespace esflux
