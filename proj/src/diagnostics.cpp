#include "blendsem/diagnostics.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <stdexcept>

#include "blendsem/errors.hpp"
#include "blendsem/euler.hpp"

namespace blendsem {

Scalar total_entropy(const SolutionField& u, const ElementOperators& ops,
                     const Mesh2D& mesh, const GasModel& gas) {
  const int nl = ops.num_nodes();
  const Scalar jac = mesh.jacobian();
  Scalar total = 0.0;
  for (int k = 0; k < u.num_elements(); ++k) {
    for (int j = 0; j < nl; ++j) {
      for (int i = 0; i < nl; ++i) {
        const State s = u.node(k, i, j);
        if (!is_admissible(s, gas)) {
          throw InvalidStateError("total_entropy: inadmissible state", k, i, j);
        }
        total += ops.weights(i) * ops.weights(j) * jac * entropy_density(s, gas);
      }
    }
  }
  return total;
}

Eigen::Vector4d conserved_totals(const SolutionField& u, const ElementOperators& ops,
                                 const Mesh2D& mesh) {
  const int nl = ops.num_nodes();
  const Scalar jac = mesh.jacobian();
  Eigen::Vector4d total = Eigen::Vector4d::Zero();
  for (int k = 0; k < u.num_elements(); ++k) {
    for (int j = 0; j < nl; ++j) {
      for (int i = 0; i < nl; ++i) {
        total += ops.weights(i) * ops.weights(j) * jac * u.node(k, i, j);
      }
    }
  }
  return total;
}

std::pair<Scalar, Scalar> field_minima(const SolutionField& u, const GasModel& gas) {
  Scalar min_rho = std::numeric_limits<Scalar>::infinity();
  Scalar min_p = std::numeric_limits<Scalar>::infinity();
  const int nl = u.nodes_1d();
  for (int k = 0; k < u.num_elements(); ++k) {
    for (int j = 0; j < nl; ++j) {
      for (int i = 0; i < nl; ++i) {
        const State s = u.node(k, i, j);
        min_rho = std::min(min_rho, s(0));
        min_p = std::min(min_p, pressure(s, gas));
      }
    }
  }
  return {min_rho, min_p};
}

AlphaStats alpha_statistics(const std::vector<StageRecord>& window, bool use_correction) {
  if (window.empty()) {
    throw std::invalid_argument("alpha_statistics: empty window");
  }
  AlphaStats stats;
  Scalar mean_sum = 0.0;
  for (const StageRecord& rec : window) {
    const Vec& values = use_correction ? rec.dalpha : rec.alpha;
    if (values.size() == 0) {
      throw std::invalid_argument("alpha_statistics: empty stage record");
    }
    stats.max = std::max(stats.max, values.maxCoeff());
    mean_sum += values.mean();
  }
  stats.mean = mean_sum / static_cast<Scalar>(window.size());
  return stats;
}

void SeriesWriter::open(const std::string& path) {
  path_ = path;
  out_.open(path);
  if (!out_) throw std::runtime_error("cannot open series file '" + path + "'");
  out_ << "t,entropy,max_alpha,mean_alpha,max_dalpha,mean_dalpha,"
          "fv_fraction_percent,mass,momentum_x,momentum_y,energy,"
          "min_density,min_pressure\n";
}

void SeriesWriter::write_row(const SeriesRow& row) {
  // A never-opened stream is good(); check is_open explicitly.
  if (!out_.is_open() || !out_) {
    throw std::runtime_error("series file '" + path_ + "' is not writable");
  }
  out_ << std::setprecision(17);
  out_ << row.t << ',' << row.entropy << ',' << row.max_alpha << ',' << row.mean_alpha
       << ',' << row.max_dalpha << ',' << row.mean_dalpha << ','
       << row.fv_fraction_percent << ',' << row.totals(0) << ',' << row.totals(1) << ','
       << row.totals(2) << ',' << row.totals(3) << ',' << row.min_density << ','
       << row.min_pressure << '\n';
  out_.flush();
}

namespace {

void write_point_scalars(std::ostream& out, const char* name,
                         const std::vector<Scalar>& values) {
  out << "SCALARS " << name << " double\nLOOKUP_TABLE default\n";
  out << std::setprecision(17);
  for (const Scalar v : values) out << v << '\n';
}

}  // namespace

void write_snapshot(const SolutionField& u, const Vec& alpha, const Vec& alpha_window_max,
                    const ElementOperators& ops, const Mesh2D& mesh, const GasModel& gas,
                    const std::string& path_base) {
  const int nl = ops.num_nodes();
  const int nx = mesh.kx * nl;
  const int ny = mesh.ky * nl;
  const int num_points = nx * ny;

  // Global tensor grid including duplicated element-interface coordinates.
  std::vector<Scalar> xs(nx), ys(ny);
  for (int ex = 0; ex < mesh.kx; ++ex) {
    for (int i = 0; i < nl; ++i) {
      xs[ex * nl + i] =
          map_to_element(mesh.x0 + ex * mesh.dx(), mesh.dx(), ops.nodes(i));
    }
  }
  for (int ey = 0; ey < mesh.ky; ++ey) {
    for (int j = 0; j < nl; ++j) {
      ys[ey * nl + j] =
          map_to_element(mesh.y0 + ey * mesh.dy(), mesh.dy(), ops.nodes(j));
    }
  }

  std::vector<Scalar> rho(num_points), v1(num_points), v2(num_points), p(num_points),
      logrho(num_points), a(num_points), a_max(num_points);
  for (int gy = 0; gy < ny; ++gy) {
    const int ey = gy / nl, j = gy % nl;
    for (int gx = 0; gx < nx; ++gx) {
      const int ex = gx / nl, i = gx % nl;
      const int k = mesh.element_index(ex, ey);
      const State s = u.node(k, i, j);
      const int idx = gy * nx + gx;
      rho[idx] = s(0);
      v1[idx] = s(1) / s(0);
      v2[idx] = s(2) / s(0);
      p[idx] = pressure(s, gas);
      logrho[idx] = std::log10(s(0));
      a[idx] = alpha(k);
      a_max[idx] = alpha_window_max(k);
    }
  }

  const std::string vtk_path = path_base + ".vtk";
  std::ofstream vtk(vtk_path);
  if (!vtk) throw std::runtime_error("cannot open snapshot file '" + vtk_path + "'");
  vtk << "# vtk DataFile Version 3.0\n";
  vtk << "blendsem snapshot\n";
  vtk << "ASCII\n";
  vtk << "DATASET RECTILINEAR_GRID\n";
  vtk << "DIMENSIONS " << nx << ' ' << ny << " 1\n";
  vtk << std::setprecision(17);
  vtk << "X_COORDINATES " << nx << " double\n";
  for (const Scalar x : xs) vtk << x << '\n';
  vtk << "Y_COORDINATES " << ny << " double\n";
  for (const Scalar y : ys) vtk << y << '\n';
  vtk << "Z_COORDINATES 1 double\n0\n";
  vtk << "POINT_DATA " << num_points << '\n';
  write_point_scalars(vtk, "density", rho);
  write_point_scalars(vtk, "velocity_x", v1);
  write_point_scalars(vtk, "velocity_y", v2);
  write_point_scalars(vtk, "pressure", p);
  write_point_scalars(vtk, "log10_density", logrho);
  write_point_scalars(vtk, "alpha", a);
  write_point_scalars(vtk, "alpha_window_max", a_max);
  if (!vtk) throw std::runtime_error("write failed for snapshot file '" + vtk_path + "'");

  const std::string csv_path = path_base + ".csv";
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("cannot open snapshot file '" + csv_path + "'");
  csv << "x,y,density,velocity_x,velocity_y,pressure,log10_density,alpha,"
         "alpha_window_max\n";
  csv << std::setprecision(17);
  for (int gy = 0; gy < ny; ++gy) {
    for (int gx = 0; gx < nx; ++gx) {
      const int idx = gy * nx + gx;
      csv << xs[gx] << ',' << ys[gy] << ',' << rho[idx] << ',' << v1[idx] << ','
          << v2[idx] << ',' << p[idx] << ',' << logrho[idx] << ',' << a[idx] << ','
          << a_max[idx] << '\n';
    }
  }
  if (!csv) throw std::runtime_error("write failed for snapshot file '" + csv_path + "'");
}

}  // namespace blendsem
