#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace esflux {

// Arbitrary precision, always reduced, positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

double to_double(const Rational& r);

// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

// Parses "num/den" or "num".
Rational parse_rational(const std::string& text);

// Solves a x = b exactly by Gaussian elimination. Throws SingularSystem.
RationalVector solve_exact(RationalMatrix a, RationalVector b);

// Minimum Euclidean norm solution of an underdetermined full-row-rank system:
// x = A^T (A A^T)^{-1} b. Reduces to solve_exact for square systems.
RationalVector solve_min_norm(const RationalMatrix& a, const RationalVector& b);

}  // namespace esflux
