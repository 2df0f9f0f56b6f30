#ifndef BLENDSEM_INITIAL_CONDITIONS_HPP
#define BLENDSEM_INITIAL_CONDITIONS_HPP

#include "blendsem/field.hpp"
#include "blendsem/lgl.hpp"
#include "blendsem/mesh.hpp"

namespace blendsem {

// Kelvin-Helmholtz shear layer on [-1,1]^2: smooth tanh density/velocity
// profile with a sinusoidal transverse perturbation, unit pressure.
SolutionField init_khi(const Mesh2D& mesh, const ElementOperators& ops,
                       const GasModel& gas);

// Sedov-type blast on [-1.5,1.5]^2: Gaussian density and pressure pulses over
// a near-vacuum ambient pressure of 1e-5, fluid at rest.
SolutionField init_sedov(const Mesh2D& mesh, const ElementOperators& ops,
                         const GasModel& gas);

SolutionField init_uniform(const Mesh2D& mesh, const ElementOperators& ops,
                           const GasModel& gas, Scalar rho, Scalar v1, Scalar v2,
                           Scalar p);

}  // namespace blendsem

#endif
