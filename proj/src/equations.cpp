#include "esflux/equations.hpp"

namespace esflux {

EulerEntropy euler_entropy(const Euler2D& law, const EulerState& u) {
  const Primitive w = law.to_primitive(u);
  EulerEntropy e;
  e.U = law.entropy(u);
  e.Fx = w.vx * e.U;
  e.Fy = w.vy * e.U;
  e.v = law.entropy_variables(u);
  e.psi_x = u(1);
  e.psi_y = u(2);
  return e;
}

}  // namespace esflux
