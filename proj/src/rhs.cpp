#include "blendsem/rhs.hpp"

#include <stdexcept>
#include <string>

#include "blendsem/errors.hpp"

namespace blendsem {

void require_admissible_field(const SolutionField& u, const GasModel& gas,
                              const char* where) {
  const int nl = u.nodes_1d();
  for (int k = 0; k < u.num_elements(); ++k) {
    for (int j = 0; j < nl; ++j) {
      for (int i = 0; i < nl; ++i) {
        const State s = u.node(k, i, j);
        if (!is_admissible(s, gas)) {
          throw InvalidStateError(std::string(where) + ": inadmissible state at element " +
                                      std::to_string(k) + " node (" + std::to_string(i) +
                                      ", " + std::to_string(j) + "), rho = " +
                                      std::to_string(s(0)),
                                  k, i, j);
        }
      }
    }
  }
}

namespace {

template <class Fn>
void with_surface_flux(FluxKind kind, Fn&& fn) {
  switch (kind) {
    case FluxKind::Rusanov:
      fn([](const State& ul, const State& ur, const GasModel& gas, Axis axis) {
        return rusanov_flux(ul, ur, gas, axis);
      });
      return;
    case FluxKind::HLLE:
      fn([](const State& ul, const State& ur, const GasModel& gas, Axis axis) {
        return hlle_flux(ul, ur, gas, axis);
      });
      return;
    case FluxKind::ChandrashekarEC:
      fn([](const State& ul, const State& ur, const GasModel& gas, Axis axis) {
        return ec_kep_flux(ul, ur, gas, axis);
      });
      return;
  }
  throw std::invalid_argument("unknown surface flux kind");
}

constexpr auto kEcVolumeFlux = [](const State& ul, const State& ur, const GasModel& gas,
                                  Axis axis) { return ec_kep_flux(ul, ur, gas, axis); };

}  // namespace

SolutionField dg_rhs(const SolutionField& u, const ElementOperators& ops,
                     const Mesh2D& mesh, const GasModel& gas, FluxKind surface,
                     VolumeForm form) {
  require_admissible_field(u, gas, "dg_rhs");
  SolutionField out(mesh, u.degree());
  FaceFluxes faces;
  faces.resize(mesh, u.degree());
  with_surface_flux(surface, [&](auto&& flux) {
    compute_face_fluxes(u, mesh, gas, flux, faces);
  });
  assemble_dg(u, ops, mesh, gas, form, kEcVolumeFlux, faces, out);
  return out;
}

SolutionField fv_rhs(const SolutionField& u, const ElementOperators& ops,
                     const Mesh2D& mesh, const GasModel& gas, FluxKind surface) {
  require_admissible_field(u, gas, "fv_rhs");
  SolutionField out(mesh, u.degree());
  FaceFluxes faces;
  faces.resize(mesh, u.degree());
  with_surface_flux(surface, [&](auto&& flux) {
    compute_face_fluxes(u, mesh, gas, flux, faces);
    assemble_fv(u, ops, mesh, gas, flux, faces, out);
  });
  return out;
}

void eval_rhs_parts(const SolutionField& u, const ElementOperators& ops,
                    const Mesh2D& mesh, const GasModel& gas, FluxKind surface,
                    VolumeForm form, SolutionField& dg, SolutionField& fv) {
  require_admissible_field(u, gas, "eval_rhs_parts");
  if (!dg.same_shape(u)) dg = SolutionField(mesh, u.degree());
  if (!fv.same_shape(u)) fv = SolutionField(mesh, u.degree());
  FaceFluxes faces;
  faces.resize(mesh, u.degree());
  with_surface_flux(surface, [&](auto&& flux) {
    compute_face_fluxes(u, mesh, gas, flux, faces);
    assemble_fv(u, ops, mesh, gas, flux, faces, fv);
  });
  assemble_dg(u, ops, mesh, gas, form, kEcVolumeFlux, faces, dg);
}

void blended_rhs(const SolutionField& dg, const SolutionField& fv,
                 const BlendField& alpha, SolutionField& out) {
  if (!dg.same_shape(fv)) throw std::invalid_argument("blended_rhs: shape mismatch");
  if (alpha.alpha.size() != dg.num_elements()) {
    throw std::invalid_argument("blended_rhs: alpha size mismatch");
  }
  if (!out.same_shape(dg)) out = dg;
  const int npe = dg.nodes_per_element();
  for (int k = 0; k < dg.num_elements(); ++k) {
    const Scalar a = alpha.alpha(k);
    if (!(a >= 0.0 && a <= 1.0)) {
      throw std::invalid_argument("blended_rhs: alpha outside [0, 1] at element " +
                                  std::to_string(k));
    }
    const Eigen::Index c0 = static_cast<Eigen::Index>(k) * npe;
    out.values().middleCols(c0, npe) = (1.0 - a) * dg.values().middleCols(c0, npe) +
                                       a * fv.values().middleCols(c0, npe);
  }
}

}  // namespace blendsem
