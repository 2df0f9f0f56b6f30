#include "blendsem/indicator.hpp"

#include <cmath>
#include <string>

#include "blendsem/errors.hpp"
#include "blendsem/euler.hpp"

namespace blendsem {

Scalar modal_energy_indicator(const SolutionField& u, const ElementOperators& ops,
                              const GasModel& gas, int element) {
  const int nl = ops.num_nodes();
  const int n = ops.degree;

  Mat p_nodal(nl, nl);
  for (int j = 0; j < nl; ++j) {
    for (int i = 0; i < nl; ++i) {
      const State s = u.node(element, i, j);
      if (!is_admissible(s, gas)) {
        throw InvalidStateError("modal_energy_indicator: inadmissible state at element " +
                                    std::to_string(element),
                                element, i, j);
      }
      p_nodal(i, j) = pressure(s, gas);
    }
  }

  // Tensor-product transform: modal(a, b) multiplies P_a(xi) P_b(eta).
  const Mat modal = ops.modal * p_nodal * ops.modal.transpose();

  Scalar total = 0.0, top = 0.0, second = 0.0, below_top = 0.0;
  for (int b = 0; b < nl; ++b) {
    for (int a = 0; a < nl; ++a) {
      const Scalar e = modal(a, b) * modal(a, b);
      const int shell = (a > b) ? a : b;
      total += e;
      if (shell == n) top += e;
      if (shell <= n - 1) below_top += e;
      if (shell == n - 1) second += e;
    }
  }

  if (total < 1e-28) return 0.0;
  const Scalar e_top = top / total;
  const Scalar e_second = (below_top > 0.0) ? second / below_top : 0.0;
  return (e_top > e_second) ? e_top : e_second;
}

Scalar indicator_threshold(int degree) {
  return 0.5 * std::pow(10.0, -1.8 * std::pow(degree + 1.0, 0.25));
}

Scalar indicator_alpha(Scalar energy, int degree, const IndicatorConfig& cfg) {
  const Scalar sharpness = 9.21024;
  const Scalar threshold = indicator_threshold(degree);
  Scalar a = 1.0 / (1.0 + std::exp(-sharpness / threshold * (energy - threshold)));
  if (a < cfg.alpha_min) a = 0.0;
  if (a > cfg.alpha_max) a = cfg.alpha_max;
  return a;
}

void propagation_sweep(Vec& alpha, const Mesh2D& mesh) {
  const Vec pre = alpha;
  for (int k = 0; k < mesh.num_elements(); ++k) {
    Scalar nb = pre(mesh.neighbor_left(k));
    nb = std::max(nb, pre(mesh.neighbor_right(k)));
    nb = std::max(nb, pre(mesh.neighbor_down(k)));
    nb = std::max(nb, pre(mesh.neighbor_up(k)));
    alpha(k) = std::max(pre(k), 0.5 * nb);
  }
}

void evaluate_indicator(const SolutionField& u, const ElementOperators& ops,
                        const Mesh2D& mesh, const GasModel& gas,
                        const IndicatorConfig& cfg, Vec& alpha) {
  alpha.resize(mesh.num_elements());
  for (int k = 0; k < mesh.num_elements(); ++k) {
    const Scalar energy = modal_energy_indicator(u, ops, gas, k);
    alpha(k) = indicator_alpha(energy, ops.degree, cfg);
  }
  propagation_sweep(alpha, mesh);
}

}  // namespace blendsem
