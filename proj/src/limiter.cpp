#include "blendsem/limiter.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "blendsem/errors.hpp"
#include "blendsem/euler.hpp"

namespace blendsem {

SolutionField compute_safe_candidate(const SolutionField& candidate,
                                     const SolutionField& blended_rhs,
                                     const SolutionField& fv_rhs, Scalar stage_dt) {
  SolutionField safe = candidate;
  safe.values() += stage_dt * (fv_rhs.values() - blended_rhs.values());
  return safe;
}

void verify_safe_state(const SolutionField& safe, const GasModel& gas, int stage) {
  const int nl = safe.nodes_1d();
  for (int k = 0; k < safe.num_elements(); ++k) {
    for (int j = 0; j < nl; ++j) {
      for (int i = 0; i < nl; ++i) {
        const State s = safe.node(k, i, j);
        if (!(s(0) > 0.0)) {
          throw SafeStateError("safe solution has non-positive density", stage, k, i, j,
                               "density", s(0));
        }
        const Scalar p = pressure(s, gas);
        if (!(p > 0.0)) {
          throw SafeStateError("safe solution has non-positive pressure", stage, k, i, j,
                               "pressure", p);
        }
      }
    }
  }
}

Scalar density_correction(const StageContext& ctx, int element) {
  const Scalar alpha = ctx.alpha->alpha(element);
  const Scalar beta = ctx.cfg.beta;
  const int nl = ctx.candidate->nodes_1d();

  Scalar alpha_new = alpha;
  for (int j = 0; j < nl; ++j) {
    for (int i = 0; i < nl; ++i) {
      const Scalar rho = (*ctx.candidate).node(element, i, j)(0);
      const Scalar rho_safe = (*ctx.safe).node(element, i, j)(0);
      const Scalar deficit = beta * rho_safe - rho;
      if (deficit <= 0.0) continue;
      const Scalar denom =
          ctx.stage_dt * ((*ctx.fv_rhs).node(element, i, j)(0) -
                          (*ctx.dg_rhs).node(element, i, j)(0));
      if (std::abs(denom) <= 1e-14) return 1.0;
      const Scalar node_alpha = alpha + deficit / denom;
      if (node_alpha > 1.0) return 1.0;
      if (node_alpha > alpha_new) alpha_new = node_alpha;
    }
  }
  if (alpha_new < alpha) alpha_new = alpha;
  if (alpha_new > 1.0) alpha_new = 1.0;
  return alpha_new;
}

Scalar pressure_correction(const StageContext& ctx, int element, Scalar alpha_start) {
  const Scalar beta = ctx.cfg.beta;
  const Scalar gm1 = ctx.gas.gamma - 1.0;
  const int nl = ctx.candidate->nodes_1d();

  Scalar alpha_new = alpha_start;
  for (int j = 0; j < nl; ++j) {
    for (int i = 0; i < nl; ++i) {
      const State u0 = (*ctx.candidate).node(element, i, j);
      const Scalar p_safe = pressure((*ctx.safe).node(element, i, j), ctx.gas);
      const Scalar floor = beta * p_safe;
      if (pressure(u0, ctx.gas) >= floor) continue;

      const State du = ctx.stage_dt * ((*ctx.fv_rhs).node(element, i, j) -
                                       (*ctx.dg_rhs).node(element, i, j));
      const Scalar tol = ctx.cfg.newton_tol * p_safe;

      // Newton on g(a) = p(u0 + (a - alpha_start) du) - floor.
      Scalar a = alpha_start;
      bool converged = false;
      for (int it = 0; it < ctx.cfg.newton_max_iter; ++it) {
        const State u = u0 + (a - alpha_start) * du;
        if (!(u(0) > 0.0)) break;  // iterate left the admissible branch
        const Scalar g = pressure(u, ctx.gas) - floor;
        if (std::abs(g) <= tol) {
          converged = true;
          break;
        }
        const Scalar v1 = u(1) / u(0);
        const Scalar v2 = u(2) / u(0);
        const Scalar dpda =
            gm1 * (0.5 * (v1 * v1 + v2 * v2) * du(0) - v1 * du(1) - v2 * du(2) + du(3));
        if (std::abs(dpda) < 1e-14) break;
        a -= g / dpda;
        if (a < 0.0 || a > 1.0) break;
      }
      if (!converged) return 1.0;
      if (a > alpha_new) alpha_new = a;
    }
  }
  if (alpha_new < alpha_start) alpha_new = alpha_start;
  if (alpha_new > 1.0) alpha_new = 1.0;
  return alpha_new;
}

void apply_correction(StageContext& ctx, int element, Scalar alpha_new) {
  const Scalar alpha = ctx.alpha->alpha(element);
  if (alpha_new < alpha) {
    throw std::invalid_argument("apply_correction: alpha_new below current alpha at element " +
                                std::to_string(element));
  }
  const Scalar dalpha = alpha_new - alpha;
  ctx.alpha->alpha(element) = alpha_new;
  ctx.alpha->alpha_correction(element) += dalpha;
  if (dalpha == 0.0) return;

  const int npe = ctx.candidate->nodes_per_element();
  const Eigen::Index c0 = static_cast<Eigen::Index>(element) * npe;
  const auto diff = ctx.fv_rhs->values().middleCols(c0, npe) -
                    ctx.dg_rhs->values().middleCols(c0, npe);
  ctx.candidate->values().middleCols(c0, npe) += dalpha * ctx.stage_dt * diff;
  ctx.blended_rhs->values().middleCols(c0, npe) += dalpha * diff;
}

LimiterReport limit_stage(StageContext& ctx) {
  LimiterReport report;
  report.min_density_margin = std::numeric_limits<Scalar>::infinity();
  report.min_pressure_margin = std::numeric_limits<Scalar>::infinity();

  const int nl = ctx.candidate->nodes_1d();
  for (int k = 0; k < ctx.candidate->num_elements(); ++k) {
    const Scalar alpha0 = ctx.alpha->alpha(k);

    const Scalar a_density = density_correction(ctx, k);
    if (a_density > ctx.alpha->alpha(k)) apply_correction(ctx, k, a_density);

    const Scalar a_pressure = pressure_correction(ctx, k, ctx.alpha->alpha(k));
    if (a_pressure > ctx.alpha->alpha(k)) apply_correction(ctx, k, a_pressure);

    const Scalar dalpha = ctx.alpha->alpha(k) - alpha0;
    if (dalpha > 0.0) ++report.elements_corrected;
    if (dalpha > report.max_dalpha) report.max_dalpha = dalpha;

    for (int j = 0; j < nl; ++j) {
      for (int i = 0; i < nl; ++i) {
        const State u = ctx.candidate->node(k, i, j);
        const State us = ctx.safe->node(k, i, j);
        const Scalar dm = u(0) - ctx.cfg.beta * us(0);
        const Scalar pm =
            pressure(u, ctx.gas) - ctx.cfg.beta * pressure(us, ctx.gas);
        if (dm < report.min_density_margin) report.min_density_margin = dm;
        if (pm < report.min_pressure_margin) report.min_pressure_margin = pm;
      }
    }
  }
  return report;
}

}  // namespace blendsem
