#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "esflux/scheme1d.hpp"

namespace esflux {

struct EntropyReport {
  double t = 0.0;
  // r_k = <v_k, (f_{k-1/2} - f_{k+1/2})/dx> + (F_{k+1/2} - F_{k-1/2})/dx
  std::vector<double> residual;
  double max_abs = 0.0;
  double max_positive = 0.0;
  double total_entropy = 0.0;
  // max(1, max|U|, max|F|) over the cells; tolerances are relative to it.
  double scale = 1.0;
};

template <ConservationLaw Law>
EntropyReport entropy_residual_field(const Scheme1D<Law>& scheme,
                                     std::span<const typename Law::State> u, double t) {
  const auto& law = scheme.law();
  const auto ext = scheme.fill_ghosts(u, t);
  const auto d = scheme.interface_fluxes(ext);
  const auto F = scheme.interface_entropy_fluxes(ext, d.alpha);
  const double dx = scheme.grid().dx();
  const Axis axis = scheme.axis();

  EntropyReport rep;
  rep.t = t;
  rep.residual.resize(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto v = law.entropy_variables(u[k]);
    const double r = v.dot(d.flux[k] - d.flux[k + 1]) / dx + (F[k + 1] - F[k]) / dx;
    rep.residual[k] = r;
    rep.max_abs = std::max(rep.max_abs, std::abs(r));
    rep.max_positive = std::max(rep.max_positive, r);
    const double U = law.entropy(u[k]);
    rep.total_entropy += dx * U;
    rep.scale = std::max({rep.scale, std::abs(U), std::abs(law.entropy_flux(u[k], axis))});
  }
  return rep;
}

struct ConservationDefect {
  double defect = 0.0;
  double scale = 1.0;
};

// |dx sum_k rhs_k - (f_{1/2} - f_{N+1/2})| together with the magnitude of
// the fluxes involved.
template <ConservationLaw Law>
ConservationDefect conservation_check(const Scheme1D<Law>& scheme,
                                      std::span<const typename Law::State> u, double t) {
  const auto ext = scheme.fill_ghosts(u, t);
  const auto d = scheme.interface_fluxes(ext);
  const auto rhs = scheme.rhs(u, t);
  const double dx = scheme.grid().dx();
  typename Law::State total = Law::State::Zero();
  for (const auto& r : rhs) total += dx * r;
  const typename Law::State expected = d.flux.front() - d.flux.back();
  ConservationDefect out;
  out.defect = (total - expected).template lpNorm<Eigen::Infinity>();
  for (const auto& f : d.flux) out.scale = std::max(out.scale, f.template lpNorm<Eigen::Infinity>());
  return out;
}

// ---------------------------------------------------------------------------
// Errors and convergence

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

enum class Norm { l1, l2, linf };

std::string to_string(Norm norm);
Norm parse_norm(const std::string& text);
double select(const ErrorNorms& e, Norm norm);

// Averages consecutive blocks of fine.size()/n_coarse values. Throws
// IncompatibleGrids when the sizes do not divide.
std::vector<double> restrict_block_average(std::span<const double> fine, std::size_t n_coarse);

// Discrete norms of a - b, each value weighted by length / size.
ErrorNorms pointwise_error_norms(std::span<const double> a, std::span<const double> b,
                                 double length);

// Restricts the fine field onto the coarse cells by block averaging and
// compares. Throws IncompatibleGrids.
ErrorNorms error_norms(std::span<const double> coarse, std::span<const double> fine,
                       double length);

// Lagrange interpolation of nodal data (x_j = x0 + j dx) at x using the
// `points` nodes nearest to x.
double lagrange_sample(std::span<const double> values, double x0, double dx, double x,
                       int points = 6);

struct ConvergenceRow {
  int n = 0;
  ErrorNorms error;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  // Free-form key/value metadata written alongside the table.
  std::map<std::string, std::string> metadata;

  void add(int n, const ErrorNorms& e);
};

struct EocResult {
  // Order between rows i and i+1.
  std::vector<double> pairwise;
  // Least-squares slope of -log e against log N.
  double global = 0.0;
};

// Throws EmptyData (fewer than two rows), ZeroError, Error for N not
// strictly increasing.
EocResult eoc(const ConvergenceTable& table, Norm norm = Norm::l1);

struct EntropySample {
  double t = 0.0;
  double max_abs = 0.0;
  double max_positive = 0.0;
  double total_entropy = 0.0;
  double scale = 1.0;
};

EntropySample summarize(const EntropyReport& report);

// "t,max_abs_residual,max_positive_residual,total_entropy,scale"
void write_entropy_csv(std::ostream& out, std::span<const EntropySample> series);
// "n,l1,l2,linf,eoc_l1,eoc_l2,eoc_linf" plus "# key=value" metadata lines.
void write_convergence_csv(std::ostream& out, const ConvergenceTable& table);

}  // namespace esflux
