#include "blendsem/driver.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <vector>

#include "blendsem/diagnostics.hpp"
#include "blendsem/errors.hpp"
#include "blendsem/initial_conditions.hpp"
#include "blendsem/time_integration.hpp"

namespace blendsem {

namespace {

SolutionField initialize(const RunConfig& cfg, const Mesh2D& mesh,
                         const ElementOperators& ops) {
  switch (cfg.experiment) {
    case Experiment::khi:
      return init_khi(mesh, ops, cfg.gas);
    case Experiment::sedov:
      return init_sedov(mesh, ops, cfg.gas);
    case Experiment::custom:
      break;
  }
  return init_uniform(mesh, ops, cfg.gas, cfg.custom_rho, cfg.custom_v1, cfg.custom_v2,
                      cfg.custom_p);
}

std::string snapshot_path(const std::string& dir, long step, Scalar t) {
  std::ostringstream name;
  name << dir << "/snapshots/snap_" << std::setw(6) << std::setfill('0') << step << '_'
       << std::fixed << std::setprecision(6) << t;
  return name.str();
}

SeriesRow make_row(Scalar t, const SolutionField& u, const ElementOperators& ops,
                   const Mesh2D& mesh, const GasModel& gas,
                   const std::vector<StageRecord>& window) {
  SeriesRow row;
  row.t = t;
  row.entropy = total_entropy(u, ops, mesh, gas);
  const AlphaStats a = alpha_statistics(window, false);
  const AlphaStats da = alpha_statistics(window, true);
  row.max_alpha = a.max;
  row.mean_alpha = a.mean;
  row.max_dalpha = da.max;
  row.mean_dalpha = da.mean;
  row.fv_fraction_percent = 100.0 * a.mean;
  row.totals = conserved_totals(u, ops, mesh);
  const auto minima = field_minima(u, gas);
  row.min_density = minima.first;
  row.min_pressure = minima.second;
  return row;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult result;

  const Mesh2D mesh(cfg.elements_x, cfg.elements_y, cfg.x0, cfg.x1, cfg.y0, cfg.y1);
  const ElementOperators ops = build_operators(cfg.degree);
  const RkScheme scheme = ssprk54();
  const GasModel gas = cfg.gas;

  SolutionField u = initialize(cfg, mesh, ops);
  BlendField alpha(mesh.num_elements());

  std::filesystem::create_directories(cfg.output.dir);
  const bool snapshots = cfg.output.snapshot_interval > 0.0;
  if (snapshots) std::filesystem::create_directories(cfg.output.dir + "/snapshots");

  SeriesWriter series;
  series.open(cfg.output.dir + "/series.csv");

  const RhsEvaluator rhs = [&](const SolutionField& state, SolutionField& dg,
                               SolutionField& fv) {
    eval_rhs_parts(state, ops, mesh, gas, cfg.surface_flux, cfg.volume_form, dg, fv);
  };
  const IndicatorEvaluator indicator_eval = [&](const SolutionField& state, Vec& a) {
    evaluate_indicator(state, ops, mesh, gas, cfg.indicator, a);
  };
  auto setup_step_alpha = [&](const SolutionField& state) {
    if (cfg.indicator.enabled) {
      indicator_eval(state, alpha.alpha);
    } else {
      alpha.alpha.setZero();
    }
    alpha.alpha_correction.setZero();
  };

  Scalar t = 0.0;
  long step = 0;

  try {
    // t = 0 row: the step-start coefficients as a one-sample window.
    setup_step_alpha(u);
    std::vector<StageRecord> window;
    {
      StageRecord initial;
      initial.alpha = alpha.alpha;
      initial.dalpha = Vec::Zero(mesh.num_elements());
      window.push_back(std::move(initial));
    }
    series.write_row(make_row(t, u, ops, mesh, gas, window));
    Scalar last_row_t = t;
    window.clear();

    Vec snap_alpha_max = alpha.alpha;
    if (snapshots) {
      write_snapshot(u, alpha.alpha, snap_alpha_max, ops, mesh, gas,
                     snapshot_path(cfg.output.dir, step, t));
    }

    const Scalar t_end = cfg.time.t_end;
    Scalar next_sample = cfg.output.sample_interval;
    Scalar next_snapshot = cfg.output.snapshot_interval;
    const Scalar t_eps = 1e-12 * std::max<Scalar>(1.0, std::abs(t_end));

    while (t < t_end - t_eps && step < cfg.time.max_steps) {
      setup_step_alpha(u);

      Scalar dt = compute_dt(u, mesh, gas, cfg.time.cfl);
      dt = std::min(dt, t_end - t);
      if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::runtime_error("time step collapsed to " + std::to_string(dt));
      }

      // Retry with halved dt when the all-FV stage solution goes inadmissible.
      const BlendField alpha_snapshot = alpha;
      StepRecord record;
      SolutionField u_next;
      int halvings = 0;
      while (true) {
        try {
          u_next = advance_step(u, dt, scheme, rhs, alpha, gas, cfg.limiter,
                                cfg.indicator.per_stage ? &indicator_eval : nullptr,
                                &record);
          break;
        } catch (const SafeStateError&) {
          ++halvings;
          if (halvings > cfg.time.dt_halving_max) throw;
          alpha = alpha_snapshot;
          dt *= 0.5;
        }
      }

      u = std::move(u_next);
      t += dt;
      ++step;
      for (StageRecord& rec : record.stages) {
        if (snap_alpha_max.size() == rec.alpha.size()) {
          snap_alpha_max = snap_alpha_max.cwiseMax(rec.alpha);
        }
        window.push_back(std::move(rec));
      }

      const bool finished = t >= t_end - t_eps;
      if (t + t_eps >= next_sample || finished) {
        series.write_row(make_row(t, u, ops, mesh, gas, window));
        last_row_t = t;
        window.clear();
        while (next_sample <= t + t_eps) next_sample += cfg.output.sample_interval;
      }
      if (snapshots && (t + t_eps >= next_snapshot || finished)) {
        write_snapshot(u, alpha.alpha, snap_alpha_max, ops, mesh, gas,
                       snapshot_path(cfg.output.dir, step, t));
        snap_alpha_max = alpha.alpha;
        while (next_snapshot <= t + t_eps) next_snapshot += cfg.output.snapshot_interval;
      }
    }

    // A row at the final time even when the loop stopped off the sample grid.
    if (last_row_t < t - t_eps) {
      if (window.empty()) {
        StageRecord current;
        current.alpha = alpha.alpha;
        current.dalpha = Vec::Zero(mesh.num_elements());
        window.push_back(std::move(current));
      }
      series.write_row(make_row(t, u, ops, mesh, gas, window));
      window.clear();
    }

    result.final_entropy = total_entropy(u, ops, mesh, gas);
    result.success = true;
    result.exit_code = 0;
  } catch (const SafeStateError& e) {
    result.abort_reason = e.what();
    result.abort_stage = e.stage;
    result.abort_element = e.element;
    result.abort_node_i = e.node_i;
    result.abort_node_j = e.node_j;
    result.abort_quantity = e.quantity;
  } catch (const InvalidStateError& e) {
    result.abort_reason = e.what();
    result.abort_element = e.element;
    result.abort_node_i = e.node_i;
    result.abort_node_j = e.node_j;
    result.abort_quantity = "state";
  } catch (const std::runtime_error& e) {
    result.abort_reason = e.what();
  }

  result.steps = step;
  result.t = t;
  return result;
}

}  // namespace blendsem
