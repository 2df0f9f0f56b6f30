#ifndef BLENDSEM_INDICATOR_HPP
#define BLENDSEM_INDICATOR_HPP

#include "blendsem/field.hpp"
#include "blendsem/lgl.hpp"
#include "blendsem/mesh.hpp"

namespace blendsem {

struct IndicatorConfig {
  bool enabled = false;
  Scalar alpha_min = 1e-3;  // logistic output below this snaps to 0
  Scalar alpha_max = 0.5;   // indicator clamp; the positivity limiter may exceed it
  bool per_stage = false;   // re-evaluate inside every RK stage instead of per step
};

// Relative modal energy of the two highest Legendre mode shells of the
// nodal pressure in one element. Shells group 2D modes by max(i, j).
Scalar modal_energy_indicator(const SolutionField& u, const ElementOperators& ops,
                              const GasModel& gas, int element);

// Modal-energy threshold marking the logistic midpoint for a given degree.
Scalar indicator_threshold(int degree);

// Logistic map from modal energy to a blending coefficient, with the
// small-value cutoff and the upper clamp applied.
Scalar indicator_alpha(Scalar energy, int degree, const IndicatorConfig& cfg);

// One simultaneous sweep alpha_k <- max(alpha_k, 0.5 alpha_E) over the four
// face neighbors, reading pre-sweep values only.
void propagation_sweep(Vec& alpha, const Mesh2D& mesh);

// Full per-field evaluation: indicator per element, then one sweep.
void evaluate_indicator(const SolutionField& u, const ElementOperators& ops,
                        const Mesh2D& mesh, const GasModel& gas,
                        const IndicatorConfig& cfg, Vec& alpha);

}  // namespace blendsem

#endif
