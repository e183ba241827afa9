#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "esflux/diagnostics.hpp"

namespace esflux {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

struct LinePlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

// Minimal SVG line chart. Throws EmptyData when there is nothing to draw and
// IoError when the file cannot be written.
std::string line_plot_svg(const std::vector<Series>& series, const LinePlotOptions& opts);
void write_line_plot(const std::filesystem::path& path, const std::vector<Series>& series,
                     const LinePlotOptions& opts);

// Error against N on log-log axes for each table, with dashed N^-4 and N^-6
// guides anchored at the first row of the first table.
std::vector<Series> convergence_series(const std::vector<std::pair<std::string, ConvergenceTable>>& tables,
                                       Norm norm = Norm::l1);
void write_convergence_plot(const std::filesystem::path& path,
                            const std::vector<std::pair<std::string, ConvergenceTable>>& tables,
                            Norm norm = Norm::l1);

// Cell-centred scalar field; NaN marks cells that are not drawn.
struct ScalarField2D {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double dx = 1.0;
  double dy = 1.0;
  std::vector<double> values;  // values[j * nx + i]

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
};

// `count` levels spaced evenly strictly between the finite min and max.
std::vector<double> contour_levels(const ScalarField2D& field, int count = 30);

struct Segment2D {
  double x0, y0, x1, y1;
};

// Marching squares over the cell centres; squares touching a NaN are skipped.
std::vector<Segment2D> contour_segments(const ScalarField2D& field, double level);

std::string contour_svg(const ScalarField2D& field, const std::vector<double>& levels,
                        const std::string& title);
void write_contour_plot(const std::filesystem::path& path, const ScalarField2D& field,
                        const std::vector<double>& levels, const std::string& title);

}  // namespace esflux
