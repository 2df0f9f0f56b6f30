#ifndef BLENDSEM_TIME_INTEGRATION_HPP
#define BLENDSEM_TIME_INTEGRATION_HPP

#include <functional>
#include <vector>

#include "blendsem/field.hpp"
#include "blendsem/limiter.hpp"
#include "blendsem/mesh.hpp"

namespace blendsem {

// Shu-Osher tableau: stage s (0-based) produces
//   u^{s+1} = sum_i a(s,i) u^{i} + dt sum_i b(s,i) udot^{i}
// where u^{0} is the step input and udot^{i} is the (limiter-corrected)
// derivative evaluated at u^{i} during stage i. The stage time step is
// b(s,s) dt.
struct RkScheme {
  int stages = 0;
  int order = 0;
  Mat a;
  Mat b;
};

// Five-stage fourth-order strong-stability-preserving scheme: optimal
// nonnegative Shu-Osher coefficients, effective SSP coefficient ~1.508.
RkScheme ssprk54();

// cfl * min over nodes of min(dx, dy) / ((2N+1) (|v1| + |v2| + 2c)).
Scalar compute_dt(const SolutionField& u, const Mesh2D& mesh, const GasModel& gas,
                  Scalar cfl);

// Evaluates both parts of the semi-discretization at u.
using RhsEvaluator =
    std::function<void(const SolutionField& u, SolutionField& dg, SolutionField& fv)>;

// Overwrites alpha from the current state (per-stage indicator mode).
using IndicatorEvaluator = std::function<void(const SolutionField& u, Vec& alpha)>;

struct StageRecord {
  Vec alpha;    // per-element coefficient after the stage's limiting
  Vec dalpha;   // limiter raise applied in this stage alone
  LimiterReport report;
};

struct StepRecord {
  std::vector<StageRecord> stages;
};

// One full RK step. alpha carries the step's blending coefficients and is
// updated in place by the limiter; the caller owns the indicator evaluation
// at step start and the retry-on-SafeStateError policy. Throws SafeStateError
// when any stage's all-FV solution is inadmissible.
SolutionField advance_step(const SolutionField& u, Scalar dt, const RkScheme& scheme,
                           const RhsEvaluator& rhs, BlendField& alpha,
                           const GasModel& gas, const LimiterConfig& limiter,
                           const IndicatorEvaluator* per_stage_indicator = nullptr,
                           StepRecord* record = nullptr);

}  // namespace blendsem

#endif
