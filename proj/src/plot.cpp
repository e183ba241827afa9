#include "esflux/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace esflux {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

const char* const kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

struct Axis1 {
  double lo, hi;
  bool log;
  double map(double v, double a, double b) const {
    const double t = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                         : (v - lo) / (hi - lo);
    return a + t * (b - a);
  }
};

Axis1 make_axis(double lo, double hi, bool log) {
  if (log) {
    lo = std::pow(10.0, std::floor(std::log10(lo)));
    hi = std::pow(10.0, std::ceil(std::log10(hi)));
    if (hi <= lo) hi = lo * 10;
  } else if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  } else {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  return {lo, hi, log};
}

std::vector<double> ticks(const Axis1& a) {
  std::vector<double> t;
  if (a.log) {
    for (double v = a.lo; v <= a.hi * 1.0001; v *= 10) t.push_back(v);
    return t;
  }
  const double step = std::pow(10.0, std::floor(std::log10((a.hi - a.lo) / 5)));
  const double nice = (a.hi - a.lo) / step > 20 ? 5 * step : (a.hi - a.lo) / step > 10 ? 2 * step : step;
  for (double v = std::ceil(a.lo / nice) * nice; v <= a.hi; v += nice) t.push_back(v);
  return t;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(4) << v;
  return s.str();
}

}  // namespace

std::string line_plot_svg(const std::vector<Series>& series, const LinePlotOptions& opts) {
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  std::size_t points = 0;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw Error("series '" + s.label + "' has mismatched x and y");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if ((opts.log_x && s.x[i] <= 0) || (opts.log_y && s.y[i] <= 0)) continue;
      xlo = std::min(xlo, s.x[i]);
      xhi = std::max(xhi, s.x[i]);
      ylo = std::min(ylo, s.y[i]);
      yhi = std::max(yhi, s.y[i]);
      ++points;
    }
  }
  if (points == 0) throw EmptyData("nothing to plot");
  const Axis1 ax = make_axis(xlo, xhi, opts.log_x);
  const Axis1 ay = make_axis(ylo, yhi, opts.log_y);
  auto px = [&](double v) { return ax.map(v, kLeft, kWidth - kRight); };
  auto py = [&](double v) { return ay.map(v, kHeight - kBottom, kTop); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(opts.title) << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
      << "\" height=\"" << kHeight - kTop - kBottom << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : ticks(ax)) {
    svg << "<line x1=\"" << px(t) << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << px(t)
        << "\" y2=\"" << kHeight - kBottom + 5 << "\" stroke=\"black\"/>"
        << "<text x=\"" << px(t) << "\" y=\"" << kHeight - kBottom + 18
        << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
  }
  for (double t : ticks(ay)) {
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py(t) << "\" x2=\"" << kLeft << "\" y2=\""
        << py(t) << "\" stroke=\"black\"/>"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(t) + 4 << "\" text-anchor=\"end\">"
        << fmt(t) << "</text>\n";
  }
  svg << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">" << escape(opts.x_label) << "</text>\n";
  svg << "<text transform=\"translate(16," << (kTop + kHeight - kBottom) / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(opts.y_label) << "</text>\n";

  int colour = 0;
  double legend_y = kTop + 16;
  for (const auto& s : series) {
    const char* c = kColours[colour++ % 8];
    svg << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if ((opts.log_x && s.x[i] <= 0) || (opts.log_y && s.y[i] <= 0)) continue;
      svg << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    }
    svg << "\"/>\n";
    if (!s.label.empty()) {
      svg << "<line x1=\"" << kWidth - kRight - 150 << "\" y1=\"" << legend_y - 4 << "\" x2=\""
          << kWidth - kRight - 125 << "\" y2=\"" << legend_y - 4 << "\" stroke=\"" << c
          << "\" stroke-width=\"1.5\"" << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>"
          << "<text x=\"" << kWidth - kRight - 120 << "\" y=\"" << legend_y << "\">"
          << escape(s.label) << "</text>\n";
      legend_y += 16;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_line_plot(const std::filesystem::path& path, const std::vector<Series>& series,
                     const LinePlotOptions& opts) {
  write_text(path, line_plot_svg(series, opts));
}

std::vector<Series> convergence_series(
    const std::vector<std::pair<std::string, ConvergenceTable>>& tables, Norm norm) {
  std::vector<Series> out;
  for (const auto& [label, table] : tables) {
    Series s{label, {}, {}, false};
    for (const auto& r : table.rows) {
      s.x.push_back(r.n);
      s.y.push_back(select(r.error, norm));
    }
    if (!s.x.empty()) out.push_back(std::move(s));
  }
  if (out.empty()) throw EmptyData("no convergence data to plot");
  const double n0 = out.front().x.front();
  const double n1 = out.front().x.back();
  const double e0 = out.front().y.front();
  for (int order : {4, 6}) {
    out.push_back({"slope " + std::to_string(order),
                   {n0, n1},
                   {e0, e0 * std::pow(n1 / n0, -order)},
                   true});
  }
  return out;
}

void write_convergence_plot(const std::filesystem::path& path,
                            const std::vector<std::pair<std::string, ConvergenceTable>>& tables,
                            Norm norm) {
  LinePlotOptions o{"Convergence", "N", to_string(norm) + " error", true, true};
  write_line_plot(path, convergence_series(tables, norm), o);
}

std::vector<double> contour_levels(const ScalarField2D& field, int count) {
  if (count < 1) throw ConfigError("need at least one contour level");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : field.values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo <= hi)) throw EmptyData("field has no finite values");
  std::vector<double> levels;
  for (int k = 1; k <= count; ++k) levels.push_back(lo + k * (hi - lo) / (count + 1));
  return levels;
}

std::vector<Segment2D> contour_segments(const ScalarField2D& f, double level) {
  std::vector<Segment2D> out;
  auto xc = [&](int i) { return f.x0 + (i + 0.5) * f.dx; };
  auto yc = [&](int j) { return f.y0 + (j + 0.5) * f.dy; };
  for (int j = 0; j + 1 < f.ny; ++j) {
    for (int i = 0; i + 1 < f.nx; ++i) {
      // corners counter-clockwise from lower left
      const double v[4] = {f.at(i, j), f.at(i + 1, j), f.at(i + 1, j + 1), f.at(i, j + 1)};
      const double px[4] = {xc(i), xc(i + 1), xc(i + 1), xc(i)};
      const double py[4] = {yc(j), yc(j), yc(j + 1), yc(j + 1)};
      if (!std::all_of(v, v + 4, [](double x) { return std::isfinite(x); })) continue;
      std::vector<std::pair<double, double>> cuts;
      for (int e = 0; e < 4; ++e) {
        const int a = e, b = (e + 1) % 4;
        const bool above_a = v[a] >= level, above_b = v[b] >= level;
        if (above_a == above_b) continue;
        const double t = (level - v[a]) / (v[b] - v[a]);
        cuts.emplace_back(px[a] + t * (px[b] - px[a]), py[a] + t * (py[b] - py[a]));
      }
      if (cuts.size() == 2) {
        out.push_back({cuts[0].first, cuts[0].second, cuts[1].first, cuts[1].second});
      } else if (cuts.size() == 4) {
        // saddle: pair the crossings according to the centre value
        const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
        const bool centre_above = centre >= level;
        if (centre_above == (v[0] >= level)) {
          out.push_back({cuts[0].first, cuts[0].second, cuts[1].first, cuts[1].second});
          out.push_back({cuts[2].first, cuts[2].second, cuts[3].first, cuts[3].second});
        } else {
          out.push_back({cuts[0].first, cuts[0].second, cuts[3].first, cuts[3].second});
          out.push_back({cuts[1].first, cuts[1].second, cuts[2].first, cuts[2].second});
        }
      }
    }
  }
  return out;
}

std::string contour_svg(const ScalarField2D& f, const std::vector<double>& levels,
                        const std::string& title) {
  if (f.nx < 2 || f.ny < 2 || f.values.empty()) throw EmptyData("field too small to contour");
  if (levels.empty()) throw EmptyData("no contour levels");
  const double w = f.nx * f.dx, h = f.ny * f.dy;
  const double scale = std::min((kWidth - 40) / w, (kHeight - 70) / h);
  const double ox = 20, oy = 40;
  auto px = [&](double x) { return ox + (x - f.x0) * scale; };
  auto py = [&](double y) { return oy + (f.y0 + h - y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << oy + h * scale + 20 << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(title) << "</text>\n";
  // masked cells
  for (int j = 0; j < f.ny; ++j) {
    for (int i = 0; i < f.nx; ++i) {
      if (std::isfinite(f.at(i, j))) continue;
      svg << "<rect x=\"" << px(f.x0 + i * f.dx) << "\" y=\"" << py(f.y0 + (j + 1) * f.dy)
          << "\" width=\"" << f.dx * scale << "\" height=\"" << f.dy * scale
          << "\" fill=\"#999\"/>\n";
    }
  }
  svg << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << w * scale << "\" height=\""
      << h * scale << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t k = 0; k < levels.size(); ++k) {
    svg << "<path class=\"level\" data-level=\"" << levels[k]
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.6\" d=\"";
    for (const auto& s : contour_segments(f, levels[k])) {
      svg << 'M' << px(s.x0) << ' ' << py(s.y0) << 'L' << px(s.x1) << ' ' << py(s.y1);
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_contour_plot(const std::filesystem::path& path, const ScalarField2D& field,
                        const std::vector<double>& levels, const std::string& title) {
  write_text(path, contour_svg(field, levels, title));
}

}  // namespace esflux
