#include "esflux/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "esflux/errors.hpp"

namespace esflux {

double to_double(const Rational& r) {
  // Quad-ish intermediate keeps huge numerators/denominators from overflowing.
  using boost::multiprecision::cpp_bin_float_quad;
  const cpp_bin_float_quad num(boost::multiprecision::numerator(r));
  const cpp_bin_float_quad den(boost::multiprecision::denominator(r));
  return static_cast<double>(num / den);
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("cannot parse rational '" + text + "'");
  }
}

RationalVector solve_exact(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error("solve_exact: dimension mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw Error("solve_exact: matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularSystem("singular moment system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

RationalVector solve_min_norm(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t rows = a.size();
  if (rows == 0) throw Error("solve_min_norm: empty system");
  const std::size_t cols = a.front().size();
  if (rows == cols) return solve_exact(a, b);
  if (rows > cols) throw Error("solve_min_norm: overdetermined system");

  RationalMatrix gram(rows, RationalVector(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < cols; ++k) acc += a[i][k] * a[j][k];
      gram[i][j] = acc;
    }
  }
  const RationalVector y = solve_exact(gram, b);
  RationalVector x(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    Rational acc = 0;
    for (std::size_t i = 0; i < rows; ++i) acc += a[i][k] * y[i];
    x[k] = acc;
  }
  return x;
}

}  // namespace esflux
