#pragma once

#include <numbers>

namespace casex::units {

// CODATA 2018. h and c are exact SI definitions.
inline constexpr double planck_J_s = 6.62607015e-34;
inline constexpr double speed_of_light_m_s = 299792458.0;
inline constexpr double bohr_magneton_J_T = 9.2740100783e-24;
inline constexpr double debye_C_m = 1e-21 / speed_of_light_m_s; // 3.3356e-30

// Internal energy unit is GHz (E/h).  1 Debye in 1 kV/cm:
inline constexpr double debye_kvcm_to_ghz = debye_C_m * 1e5 / planck_J_s / 1e9;
// 1 Bohr magneton in 1 Gauss:
inline constexpr double bohr_magneton_gauss_to_ghz = bohr_magneton_J_T * 1e-4 / planck_J_s / 1e9;

inline constexpr double ghz_per_inv_cm = speed_of_light_m_s * 1e2 / 1e9; // 29.9792458

inline constexpr double pi = std::numbers::pi;
inline constexpr double deg_to_rad = pi / 180.0;

} // namespace casex::units
