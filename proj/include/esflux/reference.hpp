#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "esflux/problems.hpp"
#include "esflux/scheme1d.hpp"

namespace esflux {

// Face values of the centre cell of (u_{k-1}, u_k, u_{k+1}) from the
// smoother of the two one-sided slopes (ties take the left one).
struct FaceValues {
  double left;
  double right;
};
FaceValues eno2_reconstruct(double u_left, double u_centre, double u_right);

// Second-order ENO finite volume scheme for Burgers with the global
// Lax-Friedrichs flux. Data boundaries set the first ghost from the data and
// extrapolate the second linearly.
class Eno2Burgers {
 public:
  using Boundary = BoundaryCondition<Burgers::State>;
  static constexpr int kHalo = 2;

  Eno2Burgers(Grid1D grid, Boundary left, Boundary right);

  const Grid1D& grid() const { return grid_; }

  std::vector<double> fill_ghosts(std::span<const double> u, double t) const;
  // Interface fluxes f_{i+1/2}, i = 0..N.
  std::vector<double> interface_fluxes(std::span<const double> ext) const;
  void rhs(std::span<const double> u, double t, std::span<double> out) const;
  std::vector<double> rhs(std::span<const double> u, double t) const;

 private:
  Grid1D grid_;
  Boundary left_;
  Boundary right_;
};

struct ReferenceField {
  std::string problem;
  Grid1D grid;
  double t_end = 0.0;
  std::vector<double> values;
};

struct ReferenceOptions {
  double cfl = 0.4;
  // Empty: no caching.
  std::filesystem::path cache_dir;
};

// Runs the problem with Eno2Burgers + SSPRK(3,3) on n_fine nodes
// (boundary_nodes layout) to t_end. Results are cached under cache_dir keyed
// by (problem, N, T); a hit returns the stored field bit for bit.
ReferenceField reference_solution(const ScalarProblem& problem, int n_fine, double t_end,
                                  const ReferenceOptions& opts = {});

std::filesystem::path reference_cache_path(const std::filesystem::path& dir,
                                           const std::string& problem, int n, double t_end);
void write_reference(const std::filesystem::path& path, const ReferenceField& field);
ReferenceField read_reference(const std::filesystem::path& path);

double total_variation(std::span<const double> values);

}  // namespace esflux
