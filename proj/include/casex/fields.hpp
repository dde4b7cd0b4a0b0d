#pragma once

#include "casex/molecule.hpp"

namespace casex {

// Field magnitudes and the angle between them.  All geometry lives in the
// lab x-z plane: E along +z, B tilted by theta_eb toward +x.  cos/sin of
// theta_eb are fixed at construction so that the 90-degree case is exact.
struct FieldConfig {
    double e_kvcm = 0;
    double b_gauss = 0;
    double theta_eb = 0; // radians, in [0, pi] after normalization
    double cos_theta_eb = 1;
    double sin_theta_eb = 0;

    static FieldConfig from_radians(double e_kvcm, double b_gauss, double theta_rad);
    // Exact trig at multiples of 90 degrees.
    static FieldConfig from_degrees(double e_kvcm, double b_gauss, double theta_deg);
};

// C_kappa = d*E + kappa |g| mu_0 * B, the quantization axis of one branch.
struct CombinedField {
    int kappa = +1;
    double magnitude_ghz = 0;
    double angle_to_e = 0; // radians in [0, pi]
};

inline constexpr double kDegenerateAxisTolGhz = 1e-12;

CombinedField combined_field(const ElectronicState& state, const FieldConfig& cfg, int kappa);

// Angle between the two combined-field axes, in [0, pi].
// Throws DegenerateAxisError when either |C_kappa| < 1e-12 GHz.
double theta_c(const ElectronicState& state, const FieldConfig& cfg);

// Angle between the mean dipole <d> (along C_kappa) and the electric field.
double tilt_angle(const ElectronicState& state, const FieldConfig& cfg, int kappa);

} // namespace casex
