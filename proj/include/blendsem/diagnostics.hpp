#ifndef BLENDSEM_DIAGNOSTICS_HPP
#define BLENDSEM_DIAGNOSTICS_HPP

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "blendsem/field.hpp"
#include "blendsem/lgl.hpp"
#include "blendsem/mesh.hpp"
#include "blendsem/time_integration.hpp"

namespace blendsem {

// Quadrature-weighted integral of the entropy density over the domain.
Scalar total_entropy(const SolutionField& u, const ElementOperators& ops,
                     const Mesh2D& mesh, const GasModel& gas);

// Quadrature-weighted totals of (mass, x-momentum, y-momentum, energy).
Eigen::Vector4d conserved_totals(const SolutionField& u, const ElementOperators& ops,
                                 const Mesh2D& mesh);

// (min density, min pressure) over all nodes.
std::pair<Scalar, Scalar> field_minima(const SolutionField& u, const GasModel& gas);

struct AlphaStats {
  Scalar max = 0.0;
  Scalar mean = 0.0;
};

// max over stages and elements; mean averaged first over elements per stage,
// then over stages. use_correction switches from alpha to the limiter raise.
AlphaStats alpha_statistics(const std::vector<StageRecord>& window, bool use_correction);

struct SeriesRow {
  Scalar t = 0.0;
  Scalar entropy = 0.0;
  Scalar max_alpha = 0.0;
  Scalar mean_alpha = 0.0;
  Scalar max_dalpha = 0.0;
  Scalar mean_dalpha = 0.0;
  Scalar fv_fraction_percent = 0.0;
  Eigen::Vector4d totals = Eigen::Vector4d::Zero();
  Scalar min_density = 0.0;
  Scalar min_pressure = 0.0;
};

// Appends fixed-column CSV rows with 17-significant-digit floats.
class SeriesWriter {
 public:
  void open(const std::string& path);
  void write_row(const SeriesRow& row);
  bool is_open() const { return out_.is_open(); }

 private:
  std::ofstream out_;
  std::string path_;
};

// Rectilinear-grid VTK text snapshot plus a CSV sidecar with identical data.
// path_base gets ".vtk" and ".csv" appended. alpha_window_max is the
// per-element max over the current diagnostics window.
void write_snapshot(const SolutionField& u, const Vec& alpha, const Vec& alpha_window_max,
                    const ElementOperators& ops, const Mesh2D& mesh, const GasModel& gas,
                    const std::string& path_base);

}  // namespace blendsem

#endif
