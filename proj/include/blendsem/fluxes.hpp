#ifndef BLENDSEM_FLUXES_HPP
#define BLENDSEM_FLUXES_HPP

#include <algorithm>
#include <cmath>

#include "blendsem/euler.hpp"
#include "blendsem/types.hpp"

namespace blendsem {

// Surface Riemann solvers are Rusanov or HLLE; the volume two-point flux of
// the split form is always the Chandrashekar EC/KEP flux.
enum class FluxKind { Rusanov, HLLE, ChandrashekarEC };

// Logarithmic mean (b - a) / (ln b - ln a), with the Ismail-Roe series when
// the arguments are close enough that the quotient form cancels.
inline Scalar log_mean(Scalar a, Scalar b) {
  const Scalar zeta = a / b;
  const Scalar f = (zeta - 1.0) / (zeta + 1.0);
  if (std::abs(zeta - 1.0) < 1e-4) {
    const Scalar u = f * f;
    return (a + b) / (2.0 * (1.0 + u / 3.0 + u * u / 5.0 + u * u * u / 7.0));
  }
  return (a + b) * f / std::log(zeta);
}

// Central flux plus jump dissipation scaled by the larger wave speed.
inline State rusanov_flux(const State& ul, const State& ur, const GasModel& gas,
                          Axis direction) {
  const Scalar lmax =
      std::max(max_wave_speed(ul, gas, direction), max_wave_speed(ur, gas, direction));
  return 0.5 * (physical_flux(ul, gas, direction) + physical_flux(ur, gas, direction)) -
         0.5 * lmax * (ur - ul);
}

// HLLE with Einfeldt wave-speed estimates built on Roe averages. These
// estimates carry the positivity guarantee the subcell FV scheme relies on.
inline State hlle_flux(const State& ul, const State& ur, const GasModel& gas,
                       Axis direction) {
  require_admissible(ul, gas, "hlle_flux");
  require_admissible(ur, gas, "hlle_flux");
  const int d = static_cast<int>(direction);

  const Scalar pl = pressure(ul, gas);
  const Scalar pr = pressure(ur, gas);
  const Scalar vl = ul(1 + d) / ul(0);
  const Scalar vr = ur(1 + d) / ur(0);
  const Scalar cl = std::sqrt(gas.gamma * pl / ul(0));
  const Scalar cr = std::sqrt(gas.gamma * pr / ur(0));

  const Scalar sl_sqrt = std::sqrt(ul(0));
  const Scalar sr_sqrt = std::sqrt(ur(0));
  const Scalar inv = 1.0 / (sl_sqrt + sr_sqrt);
  const Scalar v1_roe = (sl_sqrt * ul(1) / ul(0) + sr_sqrt * ur(1) / ur(0)) * inv;
  const Scalar v2_roe = (sl_sqrt * ul(2) / ul(0) + sr_sqrt * ur(2) / ur(0)) * inv;
  const Scalar hl = (ul(3) + pl) / ul(0);
  const Scalar hr = (ur(3) + pr) / ur(0);
  const Scalar h_roe = (sl_sqrt * hl + sr_sqrt * hr) * inv;
  const Scalar vn_roe = (d == 0) ? v1_roe : v2_roe;
  const Scalar c_roe = std::sqrt(
      (gas.gamma - 1.0) * (h_roe - 0.5 * (v1_roe * v1_roe + v2_roe * v2_roe)));

  const Scalar s_left = std::min(vl - cl, vn_roe - c_roe);
  const Scalar s_right = std::max(vr + cr, vn_roe + c_roe);

  const State fl = physical_flux(ul, gas, direction);
  const State fr = physical_flux(ur, gas, direction);
  if (s_left >= 0.0) return fl;
  if (s_right <= 0.0) return fr;
  const Scalar span = s_right - s_left;
  if (span < 1e-14) return 0.5 * (fl + fr);
  return (s_right * fl - s_left * fr + s_left * s_right * (ur - ul)) / span;
}

// Chandrashekar's entropy-conserving, kinetic-energy-preserving two-point
// flux. Symmetric in its arguments; built from arithmetic and logarithmic
// means of density and of the inverse-temperature variable beta = rho/(2p).
inline State ec_kep_flux(const State& ul, const State& ur, const GasModel& gas,
                         Axis direction) {
  require_admissible(ul, gas, "ec_kep_flux");
  require_admissible(ur, gas, "ec_kep_flux");
  const int d = static_cast<int>(direction);

  const Scalar rho_l = ul(0);
  const Scalar rho_r = ur(0);
  const Scalar v1_l = ul(1) / rho_l, v1_r = ur(1) / rho_r;
  const Scalar v2_l = ul(2) / rho_l, v2_r = ur(2) / rho_r;
  const Scalar p_l = pressure(ul, gas);
  const Scalar p_r = pressure(ur, gas);
  const Scalar beta_l = 0.5 * rho_l / p_l;
  const Scalar beta_r = 0.5 * rho_r / p_r;

  const Scalar rho_avg = 0.5 * (rho_l + rho_r);
  const Scalar rho_ln = log_mean(rho_l, rho_r);
  const Scalar beta_avg = 0.5 * (beta_l + beta_r);
  const Scalar beta_ln = log_mean(beta_l, beta_r);
  const Scalar v1_avg = 0.5 * (v1_l + v1_r);
  const Scalar v2_avg = 0.5 * (v2_l + v2_r);
  const Scalar vv_avg = 0.5 * (v1_l * v1_l + v2_l * v2_l + v1_r * v1_r + v2_r * v2_r);
  const Scalar p_mean = 0.5 * rho_avg / beta_avg;
  const Scalar vn_avg = (d == 0) ? v1_avg : v2_avg;

  State f;
  f(0) = rho_ln * vn_avg;
  f(1) = f(0) * v1_avg;
  f(2) = f(0) * v2_avg;
  f(1 + d) += p_mean;
  f(3) = f(0) * (0.5 / ((gas.gamma - 1.0) * beta_ln) - 0.5 * vv_avg) +
         f(1) * v1_avg + f(2) * v2_avg;
  return f;
}

inline State surface_flux(FluxKind kind, const State& ul, const State& ur,
                          const GasModel& gas, Axis direction) {
  switch (kind) {
    case FluxKind::Rusanov:
      return rusanov_flux(ul, ur, gas, direction);
    case FluxKind::HLLE:
      return hlle_flux(ul, ur, gas, direction);
    case FluxKind::ChandrashekarEC:
      return ec_kep_flux(ul, ur, gas, direction);
  }
  return State::Zero();
}

}  // namespace blendsem

#endif
