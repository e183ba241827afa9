#include "esflux/scheme1d.hpp"

namespace esflux {

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::periodic:
      return "periodic";
    case BoundaryKind::inflow:
      return "inflow";
    case BoundaryKind::outflow:
      return "outflow";
    case BoundaryKind::reflective:
      return "reflective";
  }
  return "unknown";
}

BoundaryKind parse_boundary_kind(const std::string& text) {
  if (text == "periodic") return BoundaryKind::periodic;
  if (text == "inflow") return BoundaryKind::inflow;
  if (text == "outflow") return BoundaryKind::outflow;
  if (text == "reflective") return BoundaryKind::reflective;
  throw ConfigError("unknown boundary kind '" + text + "'");
}

const FluxMatrix& interface_matrix(int interface, int n, const BoundaryFamily& family,
                                   bool left_data, bool right_data) {
  const int p = family.p();
  if (n < 2 * p + 1) {
    throw GridTooSmall("need N >= 2p+1 = " + std::to_string(2 * p + 1) + " cells, got " +
                       std::to_string(n));
  }
  if (interface < 0 || interface > n) throw Error("interface index outside 0..N");
  if (left_data && interface < p) return family[interface - p];
  if (right_data && interface > n - p) return family[interface - (n - p)];
  return family.interior();
}

}  // namespace esflux
