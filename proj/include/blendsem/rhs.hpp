#ifndef BLENDSEM_RHS_HPP
#define BLENDSEM_RHS_HPP

#include <utility>

#include "blendsem/field.hpp"
#include "blendsem/fluxes.hpp"
#include "blendsem/lgl.hpp"
#include "blendsem/mesh.hpp"

namespace blendsem {

enum class VolumeForm { standard, split };

// Single-valued numerical fluxes on element faces, evaluated once per face
// and consumed by both the DG and the FV assembly. Sharing them is what keeps
// the blended scheme conservative for arbitrary per-element alpha.
struct FaceFluxes {
  // col(k, n): flux through the right face (x) / top face (y) of element k at
  // face node n, oriented along the positive axis.
  Eigen::Matrix4Xd x;
  Eigen::Matrix4Xd y;

  void resize(const Mesh2D& mesh, int degree) {
    const Eigen::Index cols =
        static_cast<Eigen::Index>(mesh.num_elements()) * (degree + 1);
    x.resize(4, cols);
    y.resize(4, cols);
  }
};

// Throws InvalidStateError carrying the node location on the first
// inadmissible node, scanning in element-major order.
void require_admissible_field(const SolutionField& u, const GasModel& gas,
                              const char* where);

// --- assembly kernels, parameterized on the flux callables ------------------
// Flux callables have the signature State(const State&, const State&,
// const GasModel&, Axis); the first argument is the state on the negative
// side of the interface.

template <class SurfFlux>
void compute_face_fluxes(const SolutionField& u, const Mesh2D& mesh, const GasModel& gas,
                         SurfFlux&& flux, FaceFluxes& out) {
  const int nl = u.nodes_1d();
  for (int k = 0; k < mesh.num_elements(); ++k) {
    const int right = mesh.neighbor_right(k);
    const int up = mesh.neighbor_up(k);
    for (int n = 0; n < nl; ++n) {
      out.x.col(static_cast<Eigen::Index>(k) * nl + n) =
          flux(u.node(k, nl - 1, n), u.node(right, 0, n), gas, Axis::x);
      out.y.col(static_cast<Eigen::Index>(k) * nl + n) =
          flux(u.node(k, n, nl - 1), u.node(up, n, 0), gas, Axis::y);
    }
  }
}

// High-order DG derivative: volume term (standard derivative of the nodal
// flux, or two-point flux differencing) plus boundary corrections against the
// shared face fluxes.
template <class VolFlux>
void assemble_dg(const SolutionField& u, const ElementOperators& ops, const Mesh2D& mesh,
                 const GasModel& gas, VolumeForm form, VolFlux&& vol_flux,
                 const FaceFluxes& faces, SolutionField& out) {
  const int nl = ops.num_nodes();
  const Mat& d = ops.deriv;
  out.set_zero();

  Eigen::Matrix4Xd line_flux(4, nl);
  Eigen::Matrix4Xd acc(4, nl);

  for (int k = 0; k < mesh.num_elements(); ++k) {
    for (int dir = 0; dir < 2; ++dir) {
      const Axis axis = static_cast<Axis>(dir);
      const Scalar metric = (dir == 0) ? mesh.metric_x() : mesh.metric_y();
      const int face_lo = (dir == 0) ? mesh.neighbor_left(k) : mesh.neighbor_down(k);
      const Eigen::Matrix4Xd& face = (dir == 0) ? faces.x : faces.y;

      for (int line = 0; line < nl; ++line) {
        auto node_at = [&](int m) {
          return (dir == 0) ? u.node(k, m, line) : u.node(k, line, m);
        };
        auto out_at = [&](int m) {
          return (dir == 0) ? out.node(k, m, line) : out.node(k, line, m);
        };

        if (form == VolumeForm::standard) {
          for (int m = 0; m < nl; ++m) {
            line_flux.col(m) = physical_flux(node_at(m), gas, axis);
          }
          for (int m = 0; m < nl; ++m) {
            out_at(m) -= (line_flux * d.row(m).transpose()) / metric;
          }
        } else {
          acc.setZero();
          for (int m = 0; m < nl; ++m) {
            acc.col(m) += d(m, m) * physical_flux(node_at(m), gas, axis);
            for (int q = m + 1; q < nl; ++q) {
              const State fs = vol_flux(node_at(m), node_at(q), gas, axis);
              acc.col(m) += d(m, q) * fs;
              acc.col(q) += d(q, m) * fs;
            }
          }
          for (int m = 0; m < nl; ++m) {
            out_at(m) -= 2.0 / metric * acc.col(m);
          }
        }

        // Boundary corrections: lift the difference between the physical
        // boundary flux and the single-valued face flux.
        const Eigen::Index lo = static_cast<Eigen::Index>(face_lo) * nl + line;
        const Eigen::Index hi = static_cast<Eigen::Index>(k) * nl + line;
        out_at(0) -= (physical_flux(node_at(0), gas, axis) - face.col(lo)) /
                     (metric * ops.weights(0));
        out_at(nl - 1) += (physical_flux(node_at(nl - 1), gas, axis) - face.col(hi)) /
                          (metric * ops.weights(nl - 1));
      }
    }
  }
}

// First-order FV on the subcell grid spanned by the LGL nodes; the nodal
// values act as subcell means with widths weight * metric. Element-boundary
// fluxes are the shared face fluxes.
template <class SurfFlux>
void assemble_fv(const SolutionField& u, const ElementOperators& ops, const Mesh2D& mesh,
                 const GasModel& gas, SurfFlux&& flux, const FaceFluxes& faces,
                 SolutionField& out) {
  const int nl = ops.num_nodes();
  out.set_zero();

  Eigen::Matrix4Xd subflux(4, nl + 1);

  for (int k = 0; k < mesh.num_elements(); ++k) {
    for (int dir = 0; dir < 2; ++dir) {
      const Axis axis = static_cast<Axis>(dir);
      const Scalar metric = (dir == 0) ? mesh.metric_x() : mesh.metric_y();
      const int face_lo = (dir == 0) ? mesh.neighbor_left(k) : mesh.neighbor_down(k);
      const Eigen::Matrix4Xd& face = (dir == 0) ? faces.x : faces.y;

      for (int line = 0; line < nl; ++line) {
        auto node_at = [&](int m) {
          return (dir == 0) ? u.node(k, m, line) : u.node(k, line, m);
        };
        auto out_at = [&](int m) {
          return (dir == 0) ? out.node(k, m, line) : out.node(k, line, m);
        };

        subflux.col(0) = face.col(static_cast<Eigen::Index>(face_lo) * nl + line);
        subflux.col(nl) = face.col(static_cast<Eigen::Index>(k) * nl + line);
        for (int m = 1; m < nl; ++m) {
          subflux.col(m) = flux(node_at(m - 1), node_at(m), gas, axis);
        }
        for (int m = 0; m < nl; ++m) {
          out_at(m) += (subflux.col(m) - subflux.col(m + 1)) / (metric * ops.weights(m));
        }
      }
    }
  }
}

// --- concrete entry points ---------------------------------------------------

// DG part of the semi-discretization. The split form pairs the derivative
// matrix with the EC/KEP two-point flux.
SolutionField dg_rhs(const SolutionField& u, const ElementOperators& ops,
                     const Mesh2D& mesh, const GasModel& gas, FluxKind surface,
                     VolumeForm form);

// Subcell FV part.
SolutionField fv_rhs(const SolutionField& u, const ElementOperators& ops,
                     const Mesh2D& mesh, const GasModel& gas, FluxKind surface);

// Computes both parts with one admissibility sweep and one shared face-flux
// pass. This is the production path used by the time integrator.
void eval_rhs_parts(const SolutionField& u, const ElementOperators& ops,
                    const Mesh2D& mesh, const GasModel& gas, FluxKind surface,
                    VolumeForm form, SolutionField& dg, SolutionField& fv);

// u_dot = (1 - alpha_k) dg + alpha_k fv per element. Throws
// std::invalid_argument when any alpha is outside [0, 1].
void blended_rhs(const SolutionField& dg, const SolutionField& fv,
                 const BlendField& alpha, SolutionField& out);

}  // namespace blendsem

#endif
