#include "esflux/combined_flux.hpp"

#include "esflux/errors.hpp"

namespace esflux {

CompiledStencil::CompiledStencil(const FluxMatrix& a)
    : lo_(a.min_offset()), hi_(a.max_offset()), tag_(a.boundary_tag()) {
  for (int l = lo_; l <= hi_; ++l) {
    for (int m = lo_; m <= hi_; ++m) {
      if (a(l, m) == 0) continue;
      const double w = to_double(a(l, m));
      if (l == 0 && m == 1) {
        w01_ = w;
      } else if (l == 1 && m == 0) {
        w10_ = w;
      } else {
        ordered_.push_back({l, m, w});
      }
    }
  }
  for (int l = lo_; l <= hi_; ++l) {
    for (int m = l + 1; m <= hi_; ++m) {
      if ((l == 0 && m == 1)) continue;
      const Rational merged = a(l, m) + a(m, l);
      if (merged != 0) pairs_.push_back({l, m, to_double(merged)});
    }
  }
}

namespace detail {

void check_window(const CompiledStencil& stencil, std::size_t window_size, double alpha) {
  if (window_size != static_cast<std::size_t>(stencil.size())) {
    throw WindowMismatch("window of " + std::to_string(window_size) + " states for a stencil of " +
                         std::to_string(stencil.size()));
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("blend weight alpha outside [0, 1]");
}

}  // namespace detail
}  // namespace esflux
