#include "blendsem/initial_conditions.hpp"

#include <cmath>
#include <numbers>

#include "blendsem/euler.hpp"

namespace blendsem {

namespace {

template <class Primitives>
SolutionField fill_from_primitives(const Mesh2D& mesh, const ElementOperators& ops,
                                   const GasModel& gas, Primitives&& prim) {
  SolutionField u(mesh, ops.degree);
  const int nl = ops.num_nodes();
  for (int k = 0; k < mesh.num_elements(); ++k) {
    const Scalar ex0 = mesh.element_x0(k);
    const Scalar ey0 = mesh.element_y0(k);
    for (int j = 0; j < nl; ++j) {
      const Scalar y = map_to_element(ey0, mesh.dy(), ops.nodes(j));
      for (int i = 0; i < nl; ++i) {
        const Scalar x = map_to_element(ex0, mesh.dx(), ops.nodes(i));
        Scalar rho, v1, v2, p;
        prim(x, y, rho, v1, v2, p);
        u.node(k, i, j) = state_from_primitives(rho, v1, v2, p, gas);
      }
    }
  }
  return u;
}

}  // namespace

SolutionField init_khi(const Mesh2D& mesh, const ElementOperators& ops,
                       const GasModel& gas) {
  return fill_from_primitives(
      mesh, ops, gas,
      [](Scalar x, Scalar y, Scalar& rho, Scalar& v1, Scalar& v2, Scalar& p) {
        const Scalar b = std::tanh(15.0 * y + 7.5) - std::tanh(15.0 * y - 7.5);
        rho = 0.5 + 0.75 * b;
        v1 = 0.5 * (b - 1.0);
        v2 = 0.1 * std::sin(2.0 * std::numbers::pi * x);
        p = 1.0;
      });
}

SolutionField init_sedov(const Mesh2D& mesh, const ElementOperators& ops,
                         const GasModel& gas) {
  const Scalar sigma_rho = 0.25;
  const Scalar sigma_p = 0.15;
  const Scalar gm1 = gas.gamma - 1.0;
  return fill_from_primitives(
      mesh, ops, gas,
      [&](Scalar x, Scalar y, Scalar& rho, Scalar& v1, Scalar& v2, Scalar& p) {
        const Scalar r2 = x * x + y * y;
        rho = 1.0 + std::exp(-0.5 * r2 / (sigma_rho * sigma_rho)) /
                        (4.0 * std::numbers::pi * sigma_rho * sigma_rho);
        p = 1e-5 + gm1 * std::exp(-0.5 * r2 / (sigma_p * sigma_p)) /
                       (4.0 * std::numbers::pi * sigma_p * sigma_p);
        v1 = 0.0;
        v2 = 0.0;
      });
}

SolutionField init_uniform(const Mesh2D& mesh, const ElementOperators& ops,
                           const GasModel& gas, Scalar rho, Scalar v1, Scalar v2,
                           Scalar p) {
  return fill_from_primitives(
      mesh, ops, gas,
      [&](Scalar, Scalar, Scalar& r, Scalar& u1, Scalar& u2, Scalar& pp) {
        r = rho;
        u1 = v1;
        u2 = v2;
        pp = p;
      });
}

}  // namespace blendsem
