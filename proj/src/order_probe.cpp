#include "esflux/order_probe.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

#include "esflux/errors.hpp"

namespace esflux {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& r) {
  return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

Real tadmor(const Real& a, const Real& b) { return (a * a + a * b + b * b) / 6; }

// `sample(j)` is u at offset j from the interface's left cell.
template <class Sample>
Real combined(const FluxMatrix& a, Sample&& sample) {
  Real acc = 0;
  for (int l = a.min_offset(); l <= a.max_offset(); ++l) {
    for (int m = a.min_offset(); m <= a.max_offset(); ++m) {
      if (a(l, m) != 0) acc += to_real(a(l, m)) * tadmor(sample(l), sample(m));
    }
  }
  return acc;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace

OrderProbe flux_difference_order(const FluxMatrix& left, const FluxMatrix& right,
                                 std::span<const double> dxs, double x_k) {
  if (dxs.size() < 2) throw EmptyData("order probe needs at least two spacings");
  OrderProbe out;
  const Real xk = x_k;
  const Real exact = sin(xk) * cos(xk);
  for (double h : dxs) {
    const Real dx = h;
    auto at_cell = [&](int j) { return Real(sin(xk + j * dx)); };
    const Real f_right = combined(right, [&](int j) { return at_cell(j); });
    const Real f_left = combined(left, [&](int j) { return at_cell(j - 1); });
    const Real err = abs((f_right - f_left) / dx - exact);
    out.dx.push_back(h);
    out.error.push_back(std::max(static_cast<double>(err), 1e-300));
  }
  out.slope = fit_slope(out.dx, out.error);
  return out;
}

std::vector<double> default_probe_spacings() {
  std::vector<double> out;
  for (int e = 4; e <= 9; ++e) out.push_back(std::ldexp(1.0, -e));
  return out;
}

double FamilyOrders::min_boundary() const {
  double m = std::numeric_limits<double>::infinity();
  for (double s : right) m = std::min(m, s);
  for (double s : left) m = std::min(m, s);
  return m;
}

FamilyOrders probe_family(const BoundaryFamily& family, std::span<const double> dxs) {
  FamilyOrders out;
  const int p = family.p();
  out.interior = flux_difference_order(family[0], family[0], dxs).slope;
  for (int m = 1; m <= p; ++m) {
    out.right.push_back(flux_difference_order(family[m - 1], family[m], dxs).slope);
    out.left.push_back(flux_difference_order(family[-m], family[-m + 1], dxs).slope);
  }
  return out;
}

}  // namespace esflux
