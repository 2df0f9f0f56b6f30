#ifndef BLENDSEM_EULER_HPP
#define BLENDSEM_EULER_HPP

#include <cmath>

#include "blendsem/errors.hpp"
#include "blendsem/types.hpp"

namespace blendsem {

// State component conventions: u = [rho, rho*v1, rho*v2, rho*E].

inline State state_from_primitives(Scalar rho, Scalar v1, Scalar v2, Scalar p,
                                   const GasModel& gas) {
  const Scalar kinetic = 0.5 * rho * (v1 * v1 + v2 * v2);
  return State(rho, rho * v1, rho * v2, p / (gas.gamma - 1.0) + kinetic);
}

// p = (gamma - 1) (rho E - |m|^2 / (2 rho)). May be <= 0 for inadmissible
// states; the caller decides what that means.
inline Scalar pressure(const State& u, const GasModel& gas) {
  if (!(u(0) > 0.0)) {
    throw InvalidStateError("pressure: non-positive density " + std::to_string(u(0)));
  }
  const Scalar kinetic = 0.5 * (u(1) * u(1) + u(2) * u(2)) / u(0);
  return (gas.gamma - 1.0) * (u(3) - kinetic);
}

inline bool is_admissible(const State& u, const GasModel& gas) {
  if (!(u(0) > 0.0)) return false;
  return pressure(u, gas) > 0.0;
}

inline void require_admissible(const State& u, const GasModel& gas, const char* where) {
  if (!is_admissible(u, gas)) {
    throw InvalidStateError(std::string(where) + ": inadmissible state (rho = " +
                            std::to_string(u(0)) + ")");
  }
}

// Euler flux component along one Cartesian axis.
inline State physical_flux(const State& u, const GasModel& gas, Axis direction) {
  require_admissible(u, gas, "physical_flux");
  const Scalar p = pressure(u, gas);
  const int d = static_cast<int>(direction);
  const Scalar vn = u(1 + d) / u(0);
  State f;
  f(0) = u(1 + d);
  f(1) = u(1) * vn;
  f(2) = u(2) * vn;
  f(1 + d) += p;
  f(3) = vn * (u(3) + p);
  return f;
}

inline Scalar sound_speed(const State& u, const GasModel& gas) {
  return std::sqrt(gas.gamma * pressure(u, gas) / u(0));
}

// |v_axis| + c, the largest characteristic speed along the axis.
inline Scalar max_wave_speed(const State& u, const GasModel& gas, Axis direction) {
  require_admissible(u, gas, "max_wave_speed");
  const Scalar vn = u(1 + static_cast<int>(direction)) / u(0);
  return std::abs(vn) + sound_speed(u, gas);
}

// Integrand of the total mathematical entropy: -rho s / (gamma - 1) with
// s = ln(p rho^-gamma). Negative sign makes the total non-increasing for
// entropy-dissipative schemes.
inline Scalar entropy_density(const State& u, const GasModel& gas) {
  require_admissible(u, gas, "entropy_density");
  const Scalar p = pressure(u, gas);
  const Scalar s = std::log(p) - gas.gamma * std::log(u(0));
  return -u(0) * s / (gas.gamma - 1.0);
}

}  // namespace blendsem

#endif
