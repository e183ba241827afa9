#pragma once

#include <string>
#include <vector>

#include "esflux/rational.hpp"

namespace esflux {

// Coefficients A_lm of a linear combination flux
//
//   f_{k+1/2} = sum_{l,m in Z} A_lm h(u_{k+l}, u_{k+m}),
//
// stored densely over the contiguous offset set Z = {lo, ..., lo + size - 1}.
// Offset 0 is the cell left of the interface, offset 1 the cell right of it.
// The stencil shift is z = 1 - lo, so the centred interior set has z = p.
class FluxMatrix {
 public:
  FluxMatrix() = default;
  FluxMatrix(int p, int min_offset, int size, int boundary_tag = 0);

  int p() const { return p_; }
  int min_offset() const { return lo_; }
  int max_offset() const { return lo_ + size_ - 1; }
  int size() const { return size_; }
  int shift() const { return 1 - lo_; }
  // 0 for the interior flux, q > 0 right boundary family, q < 0 left.
  int boundary_tag() const { return tag_; }
  void set_boundary_tag(int tag) { tag_ = tag; }

  bool contains(int offset) const { return offset >= lo_ && offset <= max_offset(); }

  const Rational& operator()(int l, int m) const { return a_[index(l, m)]; }
  Rational& operator()(int l, int m) { return a_[index(l, m)]; }

  // Entry by zero-based row/column position (as printed).
  const Rational& at_position(int row, int col) const { return a_[row * size_ + col]; }

  Rational sum() const;
  bool has_zero_diagonal() const;
  bool is_symmetric() const;

  bool operator==(const FluxMatrix& other) const;

 private:
  std::size_t index(int l, int m) const;

  int p_ = 0;
  int lo_ = 0;
  int size_ = 0;
  int tag_ = 0;
  std::vector<Rational> a_;
};

// Coefficients c_p^r, r = 1..p, of the centred order-2p combination:
// sum r c^r = 1 and sum c^r r^(2k+1) = 0 for k = 1..p-1.
RationalVector lmr_coefficients(int p);

// Centred matrix over {-p+1, ..., p}. Only pairs straddling the interface
// (min(l,m) <= 0 < max(l,m)) at distance |l-m| <= p carry c^{|l-m|}/2.
FluxMatrix interior_matrix(int p);

// Re-express the flux relative to the next cell to the right: offsets drop by
// one, entries are unchanged (A~_lm = A_{l+1,m+1}).
FluxMatrix shift_right(const FluxMatrix& a);
FluxMatrix shift_left(const FluxMatrix& a);
// Append a zero row/column at max Z + 1 (resp. min Z - 1).
FluxMatrix embed_right(const FluxMatrix& a);
FluxMatrix embed_left(const FluxMatrix& a);

// Mirror image about the interface (offset l -> 1 - l). Maps the right
// boundary family onto the left one.
FluxMatrix reflect(const FluxMatrix& a);

struct BoundaryStep {
  FluxMatrix matrix;
  // Moment-difference vector indexed by offset (entry for offset 0 is zero).
  RationalVector difference;
  int difference_min_offset = 0;
  // 2-norm condition number of the moment system that was solved.
  double condition_number = 0.0;
};

// One construction step near the right boundary. `rebased` is the previous
// flux already shifted onto the new interface. Solves
//   sum_{m != 0} d_m m^j = 2 delta_{j1},  j = 0..q
// (minimum-norm solution when q < 2p-1) and returns B = rebased + d/2 on row
// and column 0. Throws InvalidOrder, SingularSystem.
BoundaryStep boundary_step(const FluxMatrix& rebased, int q);

// The 2p+1 matrices A^{p,-p}, ..., A^{p,p} for boundary order q.
class BoundaryFamily {
 public:
  BoundaryFamily(int p, int q, std::vector<FluxMatrix> matrices, std::vector<double> conditions);

  int p() const { return p_; }
  int q() const { return q_; }
  // index in {-p, ..., p}
  const FluxMatrix& operator[](int index) const;
  const FluxMatrix& interior() const { return (*this)[0]; }
  // Condition numbers of the p moment systems solved for the right family.
  const std::vector<double>& condition_numbers() const { return conditions_; }

 private:
  int p_;
  int q_;
  std::vector<FluxMatrix> matrices_;
  std::vector<double> conditions_;
};

BoundaryFamily boundary_matrices(int p, int q);

// True iff the entries coupling offsets 0 and 1 are non-negative, which is
// what blending in a dissipative flux at those entries requires.
bool blend_positivity_check(const FluxMatrix& a);

// Per-step condition numbers for boundary order q (default 2p-1) and their max.
std::vector<double> construction_condition_numbers(int p, int q);
double construction_condition_number(int p);

// Weights w_j with f = sum_j w_j u_{k+j} when h(a,b) = (a+b)/2 and f(u) = u.
RationalVector linear_flux_weights(const FluxMatrix& a);

// CSV rows "row_offset,col_offset,numerator,denominator" for every entry.
std::string to_csv(const FluxMatrix& a);
// LaTeX array in the layout "A^{p, q} = \left[ \begin{array}{...} ... \right]".
std::string to_latex(const FluxMatrix& a);

}  // namespace esflux
