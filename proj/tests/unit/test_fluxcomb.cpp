#include <doctest.h>

#include <random>

#include "esflux/combined_flux.hpp"
#include "golden.hpp"

using namespace esflux;

namespace {

Rational r(long long n, long long d = 1) { return Rational(n, d); }

void check_invariants(const FluxMatrix& a) {
  CHECK(a.has_zero_diagonal());
  CHECK(a.is_symmetric());
  CHECK(a.sum() == 1);
}

bool equals_golden(const FluxMatrix& a, const testing::GoldenMatrix& g) {
  if (static_cast<int>(g.size()) != a.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (static_cast<int>(g[i].size()) != a.size()) return false;
    for (int j = 0; j < a.size(); ++j) {
      if (a.at_position(i, j) != g[i][j]) return false;
    }
  }
  return true;
}


}  // namespace

TEST_CASE("lmr coefficients") {
  CHECK(lmr_coefficients(1) == RationalVector{r(1)});
  CHECK(lmr_coefficients(2) == RationalVector{r(4, 3), r(-1, 6)});
  CHECK(lmr_coefficients(3) == RationalVector{r(3, 2), r(-3, 10), r(1, 30)});
  for (int p = 1; p <= 6; ++p) {
    const auto c = lmr_coefficients(p);
    for (int k = 0; k < p; ++k) {
      Rational s = 0;
      for (int j = 1; j <= p; ++j) {
        Rational power = 1;
        for (int e = 0; e < 2 * k + 1; ++e) power *= j;
        s += c[j - 1] * power;
      }
      CHECK(s == (k == 0 ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(lmr_coefficients(0), InvalidOrder);
}

TEST_CASE("interior matrix") {
  for (int p = 1; p <= 5; ++p) {
    const auto a = interior_matrix(p);
    CHECK(a.min_offset() == -p + 1);
    CHECK(a.size() == 2 * p);
    CHECK(a.shift() == p);
    check_invariants(a);
  }
  const auto a = interior_matrix(2);
  CHECK(a(0, 1) == r(2, 3));
  CHECK(a(-1, 1) == r(-1, 12));
  CHECK(a(0, 2) == r(-1, 12));
  CHECK(a(-1, 2) == 0);
  CHECK(a(-1, 0) == 0);
}

TEST_CASE("shift and embed") {
  const auto a = interior_matrix(2);
  const auto b = shift_right(embed_right(a));
  CHECK(b.min_offset() == -2);
  CHECK(b.max_offset() == 2);
  CHECK(b.sum() == 1);
  CHECK(b.has_zero_diagonal());
  CHECK(shift_left(shift_right(a)) == a);
  CHECK(shift_right(shift_left(a)) == a);
  CHECK(embed_left(a).min_offset() == a.min_offset() - 1);
  CHECK(embed_left(a).sum() == 1);
}

TEST_CASE("golden boundary matrices") {
  const auto golden = testing::load_golden(testing::golden_path());
  REQUIRE(golden.size() == 12);
  for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 5}}) {
    const auto family = boundary_matrices(p, q);
    for (int idx = -p; idx <= p; ++idx) {
      CAPTURE(p);
      CAPTURE(idx);
      REQUIRE(golden.count({p, idx}) == 1);
      CHECK(equals_golden(family[idx], golden.at({p, idx})));
      CHECK(family[idx].boundary_tag() == idx);
      check_invariants(family[idx]);
    }
  }
}

TEST_CASE("boundary step") {
  const auto start = shift_right(embed_right(interior_matrix(2)));
  const auto step = boundary_step(start, 3);
  Rational s0 = 0;
  Rational s1 = 0;
  for (std::size_t i = 0; i < step.difference.size(); ++i) {
    const int m = step.difference_min_offset + static_cast<int>(i);
    s0 += step.difference[i];
    s1 += step.difference[i] * m;
  }
  CHECK(s0 == 0);
  CHECK(s1 == 2);
  CHECK(step.difference[0 - step.difference_min_offset] == 0);
  // The first step lands on the interior flux, now centred one cell left.
  CHECK(step.matrix == embed_left(interior_matrix(2)));
  CHECK_THROWS_AS(boundary_step(start, 0), InvalidOrder);
  CHECK_THROWS_AS(boundary_step(start, 4), InvalidOrder);
  CHECK_THROWS_AS(boundary_matrices(2, 4), InvalidOrder);
}

TEST_CASE("reflection and invariants for higher p") {
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= 2 * p - 1; ++q) {
      const auto family = boundary_matrices(p, q);
      for (int idx = -p; idx <= p; ++idx) {
        check_invariants(family[idx]);
        const auto& a = family[idx];
        const auto& m = family[-idx];
        for (int l = a.min_offset(); l <= a.max_offset(); ++l) {
          for (int k = a.min_offset(); k <= a.max_offset(); ++k) {
            CHECK(a(l, k) == m(1 - l, 1 - k));
          }
        }
      }
    }
  }
}

TEST_CASE("minimum norm boundary order") {
  // q below the maximum still satisfies the moment conditions up to q.
  const auto family = boundary_matrices(4, 6);
  auto start = shift_right(embed_right(family.interior()));
  for (int m = 1; m <= 4; ++m) {
    const auto step = boundary_step(start, 6);
    for (int j = 0; j <= 6; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < step.difference.size(); ++i) {
        const int off = step.difference_min_offset + static_cast<int>(i);
        Rational pw = 1;
        for (int e = 0; e < j; ++e) pw *= off;
        s += step.difference[i] * pw;
      }
      CHECK(s == (j == 1 ? 2 : 0));
    }
    CHECK(step.matrix == family[m]);
    start = shift_right(step.matrix);
  }
}

TEST_CASE("linear advection reduction") {
  const auto w = linear_flux_weights(interior_matrix(2));
  CHECK(w == RationalVector{r(-1, 12), r(7, 12), r(7, 12), r(-1, 12)});

  // Floating-point evaluation with the arithmetic mean on unit vectors.
  FluxFamily<LinearAdvection> fam{central_flux(LinearAdvection{}), std::nullopt};
  const CompiledStencil stencil(interior_matrix(2));
  const double expected[] = {-1.0 / 12, 7.0 / 12, 7.0 / 12, -1.0 / 12};
  for (int j = 0; j < 4; ++j) {
    std::vector<LinearAdvection::State> window(4, LinearAdvection::State::Zero());
    window[j](0) = 1.0;
    const auto f = evaluate_combined_flux<LinearAdvection>(stencil, fam, window);
    CHECK(f(0) == doctest::Approx(expected[j]).epsilon(1e-15));
  }
}

TEST_CASE("combined flux evaluation") {
  const Burgers law;
  FluxFamily<Burgers> ec{tadmor_flux(), std::nullopt};
  FluxFamily<Burgers> blended{tadmor_flux(), godunov_flux()};
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int p = 1; p <= 3; ++p) {
    const auto family = boundary_matrices(p, 2 * p - 1);
    for (int idx = -p; idx <= p; ++idx) {
      const CompiledStencil s(family[idx]);
      std::vector<Burgers::State> constant(s.size(), Burgers::make(1.3));
      CHECK(evaluate_combined_flux<Burgers>(s, ec, constant)(0) ==
            doctest::Approx(burgers_flux(1.3)).epsilon(1e-14));
      CHECK(combined_entropy_flux<Burgers>(s, ec, law, constant) ==
            doctest::Approx(law.entropy_flux(Burgers::make(1.3))).epsilon(1e-14));

      std::vector<Burgers::State> window(s.size());
      for (auto& u : window) u = Burgers::make(d(rng));
      CHECK(evaluate_combined_flux<Burgers>(s, blended, window, Axis::x, 0.0) ==
            evaluate_combined_flux<Burgers>(s, ec, window, Axis::x, 0.0));

      // Oracle: the literal double sum over the rational matrix.
      double oracle = 0.0;
      for (int l = family[idx].min_offset(); l <= family[idx].max_offset(); ++l) {
        for (int m = family[idx].min_offset(); m <= family[idx].max_offset(); ++m) {
          const double ul = window[l - s.min_offset()](0);
          const double um = window[m - s.min_offset()](0);
          oracle += to_double(family[idx](l, m)) * (ul * ul + ul * um + um * um) / 6.0;
        }
      }
      CHECK(evaluate_combined_flux<Burgers>(s, ec, window)(0) ==
            doctest::Approx(oracle).epsilon(1e-13));

      const double alpha = 0.4;
      double blend_oracle = oracle;
      const double u0 = window[-s.min_offset()](0);
      const double u1 = window[1 - s.min_offset()](0);
      const double w = to_double(family[idx](0, 1) + family[idx](1, 0));
      blend_oracle += w * alpha * (godunov_burgers(u0, u1) - tadmor_burgers(u0, u1));
      CHECK(evaluate_combined_flux<Burgers>(s, blended, window, Axis::x, alpha)(0) ==
            doctest::Approx(blend_oracle).epsilon(1e-13));
    }
  }
  const CompiledStencil s(interior_matrix(2));
  std::vector<Burgers::State> short_window(3, Burgers::make(1.0));
  CHECK_THROWS_AS(evaluate_combined_flux<Burgers>(s, ec, short_window), WindowMismatch);
}

TEST_CASE("blend argument order") {
  FluxFamily<Burgers> left{tadmor_flux(), godunov_flux(), BlendOrder::left_first};
  FluxFamily<Burgers> written{tadmor_flux(), godunov_flux(), BlendOrder::as_written};
  const CompiledStencil s(interior_matrix(1));
  std::vector<Burgers::State> shock{Burgers::make(2.0), Burgers::make(-1.0)};
  // g(2, -1) = f(2) = 2; g(-1, 2) = 0 (transonic rarefaction).
  CHECK(evaluate_combined_flux<Burgers>(s, left, shock, Axis::x, 1.0)(0) == 2.0);
  CHECK(evaluate_combined_flux<Burgers>(s, written, shock, Axis::x, 1.0)(0) == 0.0);
}

TEST_CASE("blend positivity") {
  const auto f2 = boundary_matrices(2, 3);
  const auto f3 = boundary_matrices(3, 5);
  CHECK(blend_positivity_check(f2.interior()));
  CHECK(blend_positivity_check(f3[3]));
  CHECK(f3[3](-1, 0) == r(161, 120));
  CHECK(f3[3](0, 1) == r(137, 360));
  FluxMatrix bad(1, 0, 2);
  bad(0, 1) = -1;
  bad(1, 0) = 3;
  CHECK_FALSE(blend_positivity_check(bad));
}

TEST_CASE("condition numbers") {
  const auto c1 = construction_condition_numbers(1, 1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] >= 1.0);
  CHECK(c1[0] < 10.0);
  const double k2 = construction_condition_number(2);
  const double k3 = construction_condition_number(3);
  const double k4 = construction_condition_number(4);
  CHECK(k2 < k3);
  CHECK(k3 < k4);
}

TEST_CASE("export formats") {
  const auto family = boundary_matrices(2, 3);
  const auto csv = to_csv(family[2]);
  CHECK(csv.rfind("row_offset,col_offset,numerator,denominator\n", 0) == 0);
  CHECK(csv.find("0,1,11,24") != std::string::npos);

  const auto golden_text = [] {
    std::ifstream in(testing::golden_path());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }();
  auto squash = [](std::string s) {
    std::string out;
    for (char c : s) {
      if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
  };
  const std::string all = squash(golden_text);
  for (int idx = -2; idx <= 2; ++idx) {
    CAPTURE(idx);
    CHECK(all.find(squash(to_latex(family[idx]))) != std::string::npos);
  }
}
