#pragma once

#include <numbers>

namespace abcyl::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// CODATA 2018 hbar*c in eV*nm.
inline constexpr double hbar_c_eV_nm = 197.3269804;

/// Exact SI elementary charge [C] and Planck constant [J s].
inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double planck_Js = 6.62607015e-34;
inline constexpr double speed_of_light_m_s = 299792458.0;

/// e/(2 hbar) = pi e / h in nm^-2 T^-1 (= 7.596337239393131e-4).
/// Multiplied by B[T] * R[nm]^2 this yields the flux parameter beta.
inline constexpr double e_over_2hbar_per_nm2_T = pi * elementary_charge_C / planck_Js * 1e-18;

/// e*c in A*nm; a dimensionless current R*I converts to amperes as
/// (e*c / R[nm]) * (R*I).
inline constexpr double e_c_A_nm = elementary_charge_C * speed_of_light_m_s * 1e9;

}  // namespace abcyl::constants
