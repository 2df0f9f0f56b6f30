#include "blendsem/time_integration.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "blendsem/errors.hpp"
#include "blendsem/euler.hpp"
#include "blendsem/rhs.hpp"

namespace blendsem {

RkScheme ssprk54() {
  RkScheme s;
  s.stages = 5;
  s.order = 4;
  s.a = Mat::Zero(5, 5);
  s.b = Mat::Zero(5, 5);

  s.a(0, 0) = 1.0;
  s.b(0, 0) = 0.391752226571890;

  s.a(1, 0) = 0.444370493651235;
  s.a(1, 1) = 0.555629506348765;
  s.b(1, 1) = 0.368410593050371;

  s.a(2, 0) = 0.620101851488403;
  s.a(2, 2) = 0.379898148511597;
  s.b(2, 2) = 0.251891774271694;

  s.a(3, 0) = 0.178079954393132;
  s.a(3, 3) = 0.821920045606868;
  s.b(3, 3) = 0.544974750228521;

  s.a(4, 2) = 0.517231671970585;
  s.a(4, 3) = 0.096059710526147;
  s.a(4, 4) = 0.386708617503269;
  s.b(4, 3) = 0.063692468666290;
  s.b(4, 4) = 0.226007483236906;

  return s;
}

Scalar compute_dt(const SolutionField& u, const Mesh2D& mesh, const GasModel& gas,
                  Scalar cfl) {
  const int nl = u.nodes_1d();
  const Scalar h = std::min(mesh.dx(), mesh.dy());
  const Scalar scale = 2.0 * u.degree() + 1.0;

  Scalar dt = std::numeric_limits<Scalar>::infinity();
  for (int k = 0; k < u.num_elements(); ++k) {
    for (int j = 0; j < nl; ++j) {
      for (int i = 0; i < nl; ++i) {
        const State s = u.node(k, i, j);
        if (!is_admissible(s, gas)) {
          throw InvalidStateError("compute_dt: inadmissible state at element " +
                                      std::to_string(k),
                                  k, i, j);
        }
        const Scalar c = sound_speed(s, gas);
        const Scalar speed =
            std::abs(s(1) / s(0)) + std::abs(s(2) / s(0)) + 2.0 * c;
        dt = std::min(dt, h / (scale * speed));
      }
    }
  }
  return cfl * dt;
}

SolutionField advance_step(const SolutionField& u, Scalar dt, const RkScheme& scheme,
                           const RhsEvaluator& rhs, BlendField& alpha,
                           const GasModel& gas, const LimiterConfig& limiter,
                           const IndicatorEvaluator* per_stage_indicator,
                           StepRecord* record) {
  const int ns = scheme.stages;

  // Registers indexed by stage solution / derivative number; entries are
  // dropped as soon as the tableau sparsity stops referencing them.
  std::vector<std::optional<SolutionField>> states(ns + 1);
  std::vector<std::optional<SolutionField>> derivs(ns);
  states[0] = u;

  SolutionField dg(*states[0]), fv(*states[0]);
  if (record) record->stages.clear();

  for (int s = 0; s < ns; ++s) {
    const SolutionField& stage_input = *states[s];

    if (per_stage_indicator) (*per_stage_indicator)(stage_input, alpha.alpha);

    rhs(stage_input, dg, fv);

    SolutionField blended(stage_input);
    blended_rhs(dg, fv, alpha, blended);

    const Scalar stage_dt = scheme.b(s, s) * dt;

    // Convex combination in delta form around the heaviest register: constant
    // fields pass through a zero-derivative stage bitwise because every
    // difference term vanishes exactly.
    int pivot = 0;
    for (int i = 1; i <= s; ++i) {
      if (scheme.a(s, i) > scheme.a(s, pivot)) pivot = i;
    }
    SolutionField candidate = *states[pivot];
    for (int i = 0; i <= s; ++i) {
      if (i != pivot && scheme.a(s, i) != 0.0) {
        candidate.values() +=
            scheme.a(s, i) * (states[i]->values() - states[pivot]->values());
      }
      if (i < s && scheme.b(s, i) != 0.0) {
        candidate.values() += dt * scheme.b(s, i) * derivs[i]->values();
      }
    }
    candidate.values() += stage_dt * blended.values();

    const SolutionField safe = compute_safe_candidate(candidate, blended, fv, stage_dt);
    verify_safe_state(safe, gas, s + 1);

    LimiterReport report;
    Vec correction_before = alpha.alpha_correction;
    if (limiter.enabled) {
      StageContext ctx;
      ctx.stage_dt = stage_dt;
      ctx.candidate = &candidate;
      ctx.blended_rhs = &blended;
      ctx.safe = &safe;
      ctx.dg_rhs = &dg;
      ctx.fv_rhs = &fv;
      ctx.alpha = &alpha;
      ctx.gas = gas;
      ctx.cfg = limiter;
      report = limit_stage(ctx);
    }

    if (record) {
      StageRecord rec;
      rec.alpha = alpha.alpha;
      rec.dalpha = alpha.alpha_correction - correction_before;
      rec.report = report;
      record->stages.push_back(std::move(rec));
    }

    states[s + 1] = std::move(candidate);
    derivs[s] = std::move(blended);

    // Drop registers the remaining rows never touch.
    for (int i = 0; i <= s; ++i) {
      bool needed = false;
      for (int sr = s + 1; sr < ns; ++sr) {
        if (scheme.a(sr, i) != 0.0) needed = true;
      }
      if (!needed) states[i].reset();
    }
    for (int i = 0; i <= s; ++i) {
      bool needed = false;
      for (int sr = s + 1; sr < ns; ++sr) {
        if (scheme.b(sr, i) != 0.0) needed = true;
      }
      if (!needed) derivs[i].reset();
    }
  }

  return std::move(*states[ns]);
}

}  // namespace blendsem
