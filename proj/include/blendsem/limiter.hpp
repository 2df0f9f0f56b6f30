#ifndef BLENDSEM_LIMITER_HPP
#define BLENDSEM_LIMITER_HPP

#include "blendsem/field.hpp"
#include "blendsem/types.hpp"

namespace blendsem {

struct LimiterConfig {
  bool enabled = true;
  Scalar beta = 0.1;  // floor fraction of the safe solution, in (0, 1]
  int newton_max_iter = 10;
  Scalar newton_tol = 1e-12;  // relative to p_safe at the node
};

// Everything one RK stage hands to the positivity correction. candidate and
// blended_rhs are modified in place by the limiter; dg/fv derivatives and the
// safe solution are read-only context.
struct StageContext {
  Scalar stage_dt = 0.0;  // b_ss * dt of this stage
  SolutionField* candidate = nullptr;
  SolutionField* blended_rhs = nullptr;
  const SolutionField* safe = nullptr;
  const SolutionField* dg_rhs = nullptr;
  const SolutionField* fv_rhs = nullptr;
  BlendField* alpha = nullptr;
  GasModel gas;
  LimiterConfig cfg;
};

struct LimiterReport {
  Scalar max_dalpha = 0.0;
  int elements_corrected = 0;
  // worst post-limit slack: min over nodes of (rho - beta rho_safe) and
  // (p - beta p_safe); negative values mean floor violations survived.
  Scalar min_density_margin = 0.0;
  Scalar min_pressure_margin = 0.0;
};

// safe = candidate + stage_dt (fv - blended): the state the stage would have
// produced with alpha = 1 everywhere. Exact by construction, so the
// candidate/safe consistency invariant holds bitwise up to rounding.
SolutionField compute_safe_candidate(const SolutionField& candidate,
                                     const SolutionField& blended_rhs,
                                     const SolutionField& fv_rhs, Scalar stage_dt);

// Throws SafeStateError on the first node whose safe density or pressure is
// not strictly positive.
void verify_safe_state(const SolutionField& safe, const GasModel& gas, int stage);

// Closed-form density floor correction for one element; returns the raised
// coefficient in [alpha, 1].
Scalar density_correction(const StageContext& ctx, int element);

// Newton pressure floor correction for one element, starting from the
// post-density coefficient.
Scalar pressure_correction(const StageContext& ctx, int element, Scalar alpha_start);

// Shifts candidate and blended rhs of one element from the element's current
// alpha to alpha_new and records the increment.
void apply_correction(StageContext& ctx, int element, Scalar alpha_new);

// Density pass then pressure pass over every element.
LimiterReport limit_stage(StageContext& ctx);

}  // namespace blendsem

#endif
