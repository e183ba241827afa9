#include "esflux/flux_matrix.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <sstream>

#include "esflux/errors.hpp"

namespace esflux {

FluxMatrix::FluxMatrix(int p, int min_offset, int size, int boundary_tag)
    : p_(p), lo_(min_offset), size_(size), tag_(boundary_tag), a_(size * size) {
  if (p < 1) throw InvalidOrder("flux matrix needs p >= 1");
  if (size < 1) throw Error("flux matrix needs a non-empty offset set");
}

std::size_t FluxMatrix::index(int l, int m) const {
  if (!contains(l) || !contains(m)) {
    throw Error("offset (" + std::to_string(l) + ", " + std::to_string(m) +
                ") outside flux matrix offsets");
  }
  return static_cast<std::size_t>((l - lo_) * size_ + (m - lo_));
}

Rational FluxMatrix::sum() const {
  Rational s = 0;
  for (const auto& e : a_) s += e;
  return s;
}

bool FluxMatrix::has_zero_diagonal() const {
  for (int l = lo_; l <= max_offset(); ++l) {
    if ((*this)(l, l) != 0) return false;
  }
  return true;
}

bool FluxMatrix::is_symmetric() const {
  for (int l = lo_; l <= max_offset(); ++l) {
    for (int m = l + 1; m <= max_offset(); ++m) {
      if ((*this)(l, m) != (*this)(m, l)) return false;
    }
  }
  return true;
}

bool FluxMatrix::operator==(const FluxMatrix& other) const {
  return p_ == other.p_ && lo_ == other.lo_ && size_ == other.size_ && a_ == other.a_;
}

RationalVector lmr_coefficients(int p) {
  if (p < 1) throw InvalidOrder("lmr_coefficients needs p >= 1");
  RationalMatrix a(p, RationalVector(p));
  RationalVector b(p, Rational(0));
  for (int k = 0; k < p; ++k) {
    for (int r = 1; r <= p; ++r) {
      a[k][r - 1] = Rational(boost::multiprecision::pow(BigInt(r), 2 * k + 1));
    }
  }
  b[0] = 1;
  return solve_exact(std::move(a), std::move(b));
}

FluxMatrix interior_matrix(int p) {
  const RationalVector c = lmr_coefficients(p);
  FluxMatrix a(p, -p + 1, 2 * p, 0);
  for (int l = -p + 1; l <= p; ++l) {
    for (int m = -p + 1; m <= p; ++m) {
      const int r = std::abs(l - m);
      if (std::min(l, m) <= 0 && std::max(l, m) > 0 && r <= p) a(l, m) = c[r - 1] / 2;
    }
  }
  return a;
}

namespace {

FluxMatrix reindexed(const FluxMatrix& a, int new_lo, int new_size, int delta) {
  // new(l, m) = a(l + delta, m + delta) where defined, zero elsewhere.
  FluxMatrix out(a.p(), new_lo, new_size, a.boundary_tag());
  for (int l = new_lo; l < new_lo + new_size; ++l) {
    for (int m = new_lo; m < new_lo + new_size; ++m) {
      if (a.contains(l + delta) && a.contains(m + delta)) out(l, m) = a(l + delta, m + delta);
    }
  }
  return out;
}

}  // namespace

FluxMatrix shift_right(const FluxMatrix& a) {
  return reindexed(a, a.min_offset() - 1, a.size(), 1);
}

FluxMatrix shift_left(const FluxMatrix& a) {
  return reindexed(a, a.min_offset() + 1, a.size(), -1);
}

FluxMatrix embed_right(const FluxMatrix& a) {
  return reindexed(a, a.min_offset(), a.size() + 1, 0);
}

FluxMatrix embed_left(const FluxMatrix& a) {
  return reindexed(a, a.min_offset() - 1, a.size() + 1, 0);
}

FluxMatrix reflect(const FluxMatrix& a) {
  FluxMatrix out(a.p(), 1 - a.max_offset(), a.size(), -a.boundary_tag());
  for (int l = out.min_offset(); l <= out.max_offset(); ++l) {
    for (int m = out.min_offset(); m <= out.max_offset(); ++m) out(l, m) = a(1 - l, 1 - m);
  }
  return out;
}

BoundaryStep boundary_step(const FluxMatrix& rebased, int q) {
  const int p = rebased.p();
  if (q < 1 || q > 2 * p - 1) {
    throw InvalidOrder("boundary order q = " + std::to_string(q) + " outside [1, " +
                       std::to_string(2 * p - 1) + "]");
  }
  if (!rebased.contains(0) || !rebased.contains(1)) {
    throw Error("boundary_step: offsets 0 and 1 must lie in the stencil");
  }
  std::vector<int> offsets;
  for (int m = rebased.min_offset(); m <= rebased.max_offset(); ++m) {
    if (m != 0) offsets.push_back(m);
  }
  const int rows = q + 1;
  const int cols = static_cast<int>(offsets.size());
  if (rows > cols) {
    throw InvalidOrder("boundary order q = " + std::to_string(q) + " needs at least " +
                       std::to_string(rows) + " stencil points");
  }

  RationalMatrix moments(rows, RationalVector(cols));
  Eigen::MatrixXd moments_fp(rows, cols);
  for (int j = 0; j < rows; ++j) {
    for (int c = 0; c < cols; ++c) {
      moments[j][c] = Rational(boost::multiprecision::pow(BigInt(offsets[c]), j));
      moments_fp(j, c) = to_double(moments[j][c]);
    }
  }
  RationalVector rhs(rows, Rational(0));
  rhs[1] = 2;

  const RationalVector d = solve_min_norm(moments, rhs);

  BoundaryStep step;
  step.matrix = rebased;
  step.difference_min_offset = rebased.min_offset();
  step.difference.assign(rebased.size(), Rational(0));
  for (int c = 0; c < cols; ++c) {
    const int m = offsets[c];
    step.matrix(0, m) += d[c] / 2;
    step.matrix(m, 0) += d[c] / 2;
    step.difference[m - rebased.min_offset()] = d[c];
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(moments_fp);
  const auto& sv = svd.singularValues();
  step.condition_number = sv(0) / sv(sv.size() - 1);
  return step;
}

BoundaryFamily::BoundaryFamily(int p, int q, std::vector<FluxMatrix> matrices,
                               std::vector<double> conditions)
    : p_(p), q_(q), matrices_(std::move(matrices)), conditions_(std::move(conditions)) {}

const FluxMatrix& BoundaryFamily::operator[](int index) const {
  if (index < -p_ || index > p_) throw Error("boundary family index out of range");
  return matrices_[index + p_];
}

BoundaryFamily boundary_matrices(int p, int q) {
  if (p < 1) throw InvalidOrder("boundary_matrices needs p >= 1");
  if (q < 1 || q > 2 * p - 1) {
    throw InvalidOrder("boundary order q = " + std::to_string(q) + " outside [1, " +
                       std::to_string(2 * p - 1) + "]");
  }
  std::vector<FluxMatrix> family(2 * p + 1);
  std::vector<double> conditions;
  family[p] = interior_matrix(p);

  FluxMatrix current = shift_right(embed_right(family[p]));
  for (int m = 1; m <= p; ++m) {
    BoundaryStep step = boundary_step(current, q);
    step.matrix.set_boundary_tag(m);
    conditions.push_back(step.condition_number);
    family[p + m] = step.matrix;
    family[p - m] = reflect(step.matrix);
    current = shift_right(step.matrix);
  }
  return BoundaryFamily(p, q, std::move(family), std::move(conditions));
}

bool blend_positivity_check(const FluxMatrix& a) {
  if (!a.contains(0) || !a.contains(1)) return false;
  return a(0, 1) >= 0 && a(1, 0) >= 0;
}

std::vector<double> construction_condition_numbers(int p, int q) {
  return boundary_matrices(p, q).condition_numbers();
}

double construction_condition_number(int p) {
  const auto c = construction_condition_numbers(p, 2 * p - 1);
  return *std::max_element(c.begin(), c.end());
}

RationalVector linear_flux_weights(const FluxMatrix& a) {
  RationalVector w(a.size(), Rational(0));
  for (int l = a.min_offset(); l <= a.max_offset(); ++l) {
    for (int m = a.min_offset(); m <= a.max_offset(); ++m) {
      const Rational half = a(l, m) / 2;
      w[l - a.min_offset()] += half;
      w[m - a.min_offset()] += half;
    }
  }
  return w;
}

std::string to_csv(const FluxMatrix& a) {
  std::ostringstream out;
  out << "row_offset,col_offset,numerator,denominator\n";
  for (int l = a.min_offset(); l <= a.max_offset(); ++l) {
    for (int m = a.min_offset(); m <= a.max_offset(); ++m) {
      out << l << ',' << m << ',' << boost::multiprecision::numerator(a(l, m)) << ','
          << boost::multiprecision::denominator(a(l, m)) << '\n';
    }
  }
  return out.str();
}

std::string to_latex(const FluxMatrix& a) {
  std::ostringstream out;
  out << "A^{" << a.p() << ", " << a.boundary_tag() << "} = \\left[\n";
  out << "\t\\begin{array}{" << std::string(a.size(), 'c') << "}\n";
  for (int row = 0; row < a.size(); ++row) {
    out << "\t\t";
    for (int col = 0; col < a.size(); ++col) {
      if (col > 0) out << " & ";
      const Rational& e = a.at_position(row, col);
      if (boost::multiprecision::denominator(e) == 1) {
        out << boost::multiprecision::numerator(e);
      } else {
        out << "\\frac{" << boost::multiprecision::numerator(e) << "}{"
            << boost::multiprecision::denominator(e) << "}";
      }
    }
    out << " \\\\\n";
  }
  out << "\t\\end{array}\n\t\\right]";
  return out.str();
}

}  // namespace esflux
