#pragma once

#include <span>
#include <vector>

#include "esflux/flux_matrix.hpp"

namespace esflux {

struct OrderProbe {
  std::vector<double> dx;
  std::vector<double> error;
  // Least-squares slope of log error against log dx.
  double slope = 0.0;
};

// Truncation error of the flux difference
//   | (f_{k+1/2} - f_{k-1/2}) / dx - d/dx (u^2/2) |  at x_k,
// for Burgers with Tadmor's flux and u = sin x sampled at x_k + j dx. The left
// interface uses `left` (offset 0 = cell k-1), the right one `right` (offset
// 0 = cell k). Evaluated in 50-digit floating point so that errors far below
// double precision remain visible.
OrderProbe flux_difference_order(const FluxMatrix& left, const FluxMatrix& right,
                                 std::span<const double> dxs, double x_k = 0.3);

// 2^-4, ..., 2^-9
std::vector<double> default_probe_spacings();

struct FamilyOrders {
  double interior = 0.0;
  // Slopes for the cells between (A^{p,m-1}, A^{p,m}), m = 1..p, and the
  // mirrored left pairs (A^{p,-m}, A^{p,-m+1}).
  std::vector<double> right;
  std::vector<double> left;
  double min_boundary() const;
};

FamilyOrders probe_family(const BoundaryFamily& family,
                          std::span<const double> dxs = default_probe_spacings());

}  // namespace esflux
