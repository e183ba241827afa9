#pragma once

#include <optional>
#include <span>
#include <vector>

#include "esflux/flux_matrix.hpp"
#include "esflux/twopoint.hpp"

namespace esflux {

// Which argument order the dissipative flux gets at the blended entries.
// left_first: g(u_k, u_{k+1}) at both (0,1) and (1,0).
// as_written: g(u_{k+1}, u_k), the order the case labels produce when read
// literally.
enum class BlendOrder { left_first, as_written };

// Base entropy conservative flux h plus an optional dissipative flux g that
// is blended in only at the entries coupling offsets 0 and 1:
//   alpha g + (1 - alpha) h  there, h everywhere else.
template <ConservationLaw Law>
struct FluxFamily {
  TwoPointFlux<Law> base;
  std::optional<TwoPointFlux<Law>> dissipative;
  BlendOrder order = BlendOrder::left_first;
};

struct StencilTerm {
  int l;
  int m;
  double weight;
};

// Floating point view of a FluxMatrix, converted once. Terms for the
// interface pair (0,1)/(1,0) are kept apart so they can be blended.
class CompiledStencil {
 public:
  CompiledStencil() = default;
  explicit CompiledStencil(const FluxMatrix& a);

  int min_offset() const { return lo_; }
  int max_offset() const { return hi_; }
  int size() const { return hi_ - lo_ + 1; }
  int boundary_tag() const { return tag_; }

  // Every non-zero (l, m) except the interface pair.
  std::span<const StencilTerm> ordered_terms() const { return ordered_; }
  // Same, merged into l < m with weight A_lm + A_ml (for symmetric h).
  std::span<const StencilTerm> pair_terms() const { return pairs_; }
  double weight_01() const { return w01_; }
  double weight_10() const { return w10_; }

 private:
  int lo_ = 0;
  int hi_ = -1;
  int tag_ = 0;
  std::vector<StencilTerm> ordered_;
  std::vector<StencilTerm> pairs_;
  double w01_ = 0.0;
  double w10_ = 0.0;
};

namespace detail {

// `origin` points at the state with offset 0; offsets in
// [stencil.min_offset(), stencil.max_offset()] must be readable.
template <ConservationLaw Law>
typename Law::State combined_flux_at(const CompiledStencil& stencil, const FluxFamily<Law>& fam,
                                     const typename Law::State* origin, Axis axis,
                                     double alpha) {
  using State = typename Law::State;
  State acc = State::Zero();
  const auto& h = fam.base;
  if (h.is_symmetric()) {
    for (const auto& t : stencil.pair_terms()) acc += t.weight * h(origin[t.l], origin[t.m], axis);
  } else {
    for (const auto& t : stencil.ordered_terms()) {
      acc += t.weight * h(origin[t.l], origin[t.m], axis);
    }
  }

  const double w01 = stencil.weight_01();
  const double w10 = stencil.weight_10();
  if (w01 == 0.0 && w10 == 0.0) return acc;
  const State& u0 = origin[0];
  const State& u1 = origin[1];
  const State h01 = h(u0, u1, axis);
  const State h10 = h.is_symmetric() ? h01 : h(u1, u0, axis);
  if (alpha == 0.0 || !fam.dissipative) {
    acc += w01 * h01 + w10 * h10;
    return acc;
  }
  const State g = fam.order == BlendOrder::left_first ? (*fam.dissipative)(u0, u1, axis)
                                                      : (*fam.dissipative)(u1, u0, axis);
  // Both blended entries evaluate h with the left state first.
  acc += (w01 + w10) * (alpha * g + (1.0 - alpha) * h01);
  return acc;
}

template <ConservationLaw Law>
double combined_entropy_flux_at(const CompiledStencil& stencil, const FluxFamily<Law>& fam,
                                const Law& law, const typename Law::State* origin, Axis axis,
                                double alpha) {
  const auto& h = fam.base;
  auto entropy_flux = [&](const TwoPointFlux<Law>& flux, int l, int m) {
    return numerical_entropy_flux(law, flux(origin[l], origin[m], axis), origin[l], origin[m],
                                  axis);
  };
  double acc = 0.0;
  for (const auto& t : stencil.ordered_terms()) acc += t.weight * entropy_flux(h, t.l, t.m);

  const double w01 = stencil.weight_01();
  const double w10 = stencil.weight_10();
  if (w01 == 0.0 && w10 == 0.0) return acc;
  const double h01 = entropy_flux(h, 0, 1);
  if (alpha == 0.0 || !fam.dissipative) {
    return acc + w01 * h01 + w10 * entropy_flux(h, 1, 0);
  }
  const double g = fam.order == BlendOrder::left_first ? entropy_flux(*fam.dissipative, 0, 1)
                                                       : entropy_flux(*fam.dissipative, 1, 0);
  return acc + (w01 + w10) * (alpha * g + (1.0 - alpha) * h01);
}

void check_window(const CompiledStencil& stencil, std::size_t window_size, double alpha);

}  // namespace detail

// sum_{l,m} A_lm f_{l,m,alpha}(u_{k+l}, u_{k+m}). The window holds the states
// for offsets min_offset()..max_offset(), so offset 0 sits at position z-1.
template <ConservationLaw Law>
typename Law::State evaluate_combined_flux(const CompiledStencil& stencil,
                                           const FluxFamily<Law>& fam,
                                           std::span<const typename Law::State> window,
                                           Axis axis = Axis::x, double alpha = 0.0) {
  detail::check_window(stencil, window.size(), alpha);
  return detail::combined_flux_at(stencil, fam, window.data() - stencil.min_offset(), axis, alpha);
}

// Entropy flux consistent with evaluate_combined_flux: the same sum over the
// per-pair numerical entropy fluxes H (alpha G + (1 - alpha) H when blended).
template <ConservationLaw Law>
double combined_entropy_flux(const CompiledStencil& stencil, const FluxFamily<Law>& fam,
                             const Law& law, std::span<const typename Law::State> window,
                             Axis axis = Axis::x, double alpha = 0.0) {
  detail::check_window(stencil, window.size(), alpha);
  return detail::combined_entropy_flux_at(stencil, fam, law,
                                          window.data() - stencil.min_offset(), axis, alpha);
}

}  // namespace esflux
