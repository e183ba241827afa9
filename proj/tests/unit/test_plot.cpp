#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include "esflux/plot.hpp"

using namespace esflux;

namespace {

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("line plot") {
  Series s{"u", {0, 1, 2}, {1, 4, 9}, false};
  const auto svg = line_plot_svg({s}, {"title & more", "x", "u", false, false});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("title &amp; more") != std::string::npos);
  CHECK(count(svg, "<polyline") == 1);

  CHECK_THROWS_AS(line_plot_svg({}, {}), EmptyData);
  CHECK_THROWS_AS(line_plot_svg({Series{"e", {}, {}, false}}, {}), EmptyData);
  CHECK_THROWS_AS(line_plot_svg({Series{"bad", {1, 2}, {1}, false}}, {}), Error);
}

TEST_CASE("convergence plot has slope guides") {
  ConvergenceTable t;
  t.add(64, {1e-3, 1e-3, 1e-3});
  t.add(128, {6.25e-5, 6.25e-5, 6.25e-5});
  const auto series = convergence_series({{"p=2", t}});
  REQUIRE(series.size() == 3);
  CHECK(series[1].dashed);
  CHECK(series[2].dashed);
  CHECK(series[1].label == "slope 4");
  CHECK(series[2].label == "slope 6");
  CHECK(series[1].y[1] == doctest::Approx(1e-3 / 16));
  CHECK(series[2].y[1] == doctest::Approx(1e-3 / 64));
  const auto svg = line_plot_svg(series, {"c", "N", "e", true, true});
  CHECK(count(svg, "stroke-dasharray") >= 2);
  CHECK_THROWS_AS(convergence_series({}), EmptyData);

  const auto dir = std::filesystem::temp_directory_path() / "esflux_tests";
  std::filesystem::create_directories(dir);
  write_convergence_plot(dir / "conv.svg", {{"p=2", t}});
  CHECK(std::filesystem::file_size(dir / "conv.svg") > 100);
  CHECK_THROWS_AS(write_convergence_plot(dir / "missing" / "x.svg", {{"p=2", t}}), IoError);
}

TEST_CASE("contours") {
  ScalarField2D f{11, 5, 0.0, 0.0, 0.1, 0.1, {}};
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 11; ++i) f.values.push_back(f.x0 + (i + 0.5) * f.dx);
  }
  const auto levels = contour_levels(f);
  REQUIRE(levels.size() == 30);
  CHECK(levels.front() > 0.05);
  CHECK(levels.back() < 1.05);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    CHECK(levels[k] - levels[k - 1] == doctest::Approx(1.0 / 31));
  }

  // f = x: the 0.52 contour is the vertical line x = 0.52
  const auto segs = contour_segments(f, 0.52);
  CHECK(segs.size() == 4);
  for (const auto& s : segs) {
    CHECK(s.x0 == doctest::Approx(0.52));
    CHECK(s.x1 == doctest::Approx(0.52));
  }

  f.values[f.values.size() / 2] = std::numeric_limits<double>::quiet_NaN();
  const auto svg = contour_svg(f, levels, "rho");
  CHECK(count(svg, "class=\"level\"") == 30);
  CHECK(count(svg, "fill=\"#999\"") == 1);

  ScalarField2D blank{3, 3, 0, 0, 1, 1, std::vector<double>(9, std::nan(""))};
  CHECK_THROWS_AS(contour_levels(blank), EmptyData);
  CHECK_THROWS_AS(contour_svg(f, {}, "x"), EmptyData);
}
