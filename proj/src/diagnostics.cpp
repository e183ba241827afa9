#include "esflux/diagnostics.hpp"

#include <iomanip>
#include <limits>
#include <ostream>

namespace esflux {

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::l1:
      return "l1";
    case Norm::l2:
      return "l2";
    case Norm::linf:
      return "linf";
  }
  return "unknown";
}

Norm parse_norm(const std::string& text) {
  if (text == "l1") return Norm::l1;
  if (text == "l2") return Norm::l2;
  if (text == "linf") return Norm::linf;
  throw ConfigError("unknown norm '" + text + "'");
}

double select(const ErrorNorms& e, Norm norm) {
  switch (norm) {
    case Norm::l1:
      return e.l1;
    case Norm::l2:
      return e.l2;
    case Norm::linf:
      return e.linf;
  }
  return e.l1;
}

std::vector<double> restrict_block_average(std::span<const double> fine, std::size_t n_coarse) {
  if (n_coarse == 0 || fine.size() % n_coarse != 0) {
    throw IncompatibleGrids("fine grid of " + std::to_string(fine.size()) +
                            " cells does not refine " + std::to_string(n_coarse) + " cells");
  }
  const std::size_t ratio = fine.size() / n_coarse;
  std::vector<double> out(n_coarse);
  for (std::size_t i = 0; i < n_coarse; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < ratio; ++j) s += fine[i * ratio + j];
    out[i] = s / static_cast<double>(ratio);
  }
  return out;
}

ErrorNorms pointwise_error_norms(std::span<const double> a, std::span<const double> b,
                                 double length) {
  if (a.size() != b.size()) throw IncompatibleGrids("fields differ in size");
  if (a.empty()) throw EmptyData("no values to compare");
  const double w = length / static_cast<double>(a.size());
  ErrorNorms e;
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    e.l1 += w * d;
    sq += w * d * d;
    e.linf = std::max(e.linf, d);
  }
  e.l2 = std::sqrt(sq);
  return e;
}

ErrorNorms error_norms(std::span<const double> coarse, std::span<const double> fine,
                       double length) {
  const auto restricted = restrict_block_average(fine, coarse.size());
  return pointwise_error_norms(coarse, restricted, length);
}

double lagrange_sample(std::span<const double> values, double x0, double dx, double x,
                       int points) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw EmptyData("no nodes to interpolate");
  points = std::min(points, n);
  const double s = (x - x0) / dx;
  int first = static_cast<int>(std::floor(s)) - (points - 1) / 2;
  first = std::clamp(first, 0, n - points);
  double result = 0.0;
  for (int j = 0; j < points; ++j) {
    double w = 1.0;
    for (int m = 0; m < points; ++m) {
      if (m != j) w *= (s - (first + m)) / static_cast<double>(j - m);
    }
    result += w * values[first + j];
  }
  return result;
}

void ConvergenceTable::add(int n, const ErrorNorms& e) { rows.push_back({n, e}); }

EocResult eoc(const ConvergenceTable& table, Norm norm) {
  const auto& rows = table.rows;
  if (rows.size() < 2) throw EmptyData("convergence table needs at least two rows");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double e = select(rows[i].error, norm);
    if (!(e > 0.0)) throw ZeroError("zero error at N = " + std::to_string(rows[i].n));
    if (i > 0 && rows[i].n <= rows[i - 1].n) throw Error("grid sizes must increase strictly");
    lx.push_back(std::log(static_cast<double>(rows[i].n)));
    ly.push_back(std::log(e));
  }
  EocResult out;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    out.pairwise.push_back(-(ly[i + 1] - ly[i]) / (lx[i + 1] - lx[i]));
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i] / n;
    my += ly[i] / n;
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  out.global = -sxy / sxx;
  return out;
}

EntropySample summarize(const EntropyReport& report) {
  return {report.t, report.max_abs, report.max_positive, report.total_entropy, report.scale};
}

void write_entropy_csv(std::ostream& out, std::span<const EntropySample> series) {
  out << "t,max_abs_residual,max_positive_residual,total_entropy,scale\n";
  out << std::setprecision(17);
  for (const auto& s : series) {
    out << s.t << ',' << s.max_abs << ',' << s.max_positive << ',' << s.total_entropy << ','
        << s.scale << '\n';
  }
}

void write_convergence_csv(std::ostream& out, const ConvergenceTable& table) {
  for (const auto& [k, v] : table.metadata) out << "# " << k << '=' << v << '\n';
  out << "n,l1,l2,linf,eoc_l1,eoc_l2,eoc_linf\n";
  out << std::setprecision(17);
  std::vector<EocResult> orders;
  const bool have_orders = table.rows.size() >= 2;
  if (have_orders) {
    for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) orders.push_back(eoc(table, n));
  }
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    out << r.n << ',' << r.error.l1 << ',' << r.error.l2 << ',' << r.error.linf;
    for (std::size_t k = 0; k < 3; ++k) {
      out << ',';
      if (have_orders && i > 0) out << orders[k].pairwise[i - 1];
    }
    out << '\n';
  }
  if (have_orders) {
    out << "global," << orders[0].global << ',' << orders[1].global << ',' << orders[2].global
        << ",,,\n";
  }
}

}  // namespace esflux
