#include "casex/fields.hpp"

#include <algorithm>
#include <cmath>

#include "casex/errors.hpp"
#include "casex/units.hpp"

namespace casex {

namespace {

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void require_kappa(int kappa) {
    if (kappa != +1 && kappa != -1) throw ArgumentError("kappa must be +1 or -1");
}

double normalize_angle(double theta) {
    theta = std::fmod(theta, 2 * units::pi);
    if (theta < 0) theta += 2 * units::pi;
    if (theta > units::pi) theta = 2 * units::pi - theta; // mirror: geometry is even in theta
    return theta;
}

} // namespace

FieldConfig FieldConfig::from_radians(double e_kvcm, double b_gauss, double theta_rad) {
    if (e_kvcm < 0) throw ArgumentError("electric field must be >= 0");
    if (b_gauss < 0) throw ArgumentError("magnetic field must be >= 0");
    if (!std::isfinite(theta_rad)) throw ArgumentError("theta_eb must be finite");
    FieldConfig cfg;
    cfg.e_kvcm = e_kvcm;
    cfg.b_gauss = b_gauss;
    cfg.theta_eb = normalize_angle(theta_rad);
    cfg.cos_theta_eb = std::cos(cfg.theta_eb);
    cfg.sin_theta_eb = std::sin(cfg.theta_eb);
    return cfg;
}

FieldConfig FieldConfig::from_degrees(double e_kvcm, double b_gauss, double theta_deg) {
    if (!std::isfinite(theta_deg)) throw ArgumentError("theta_eb must be finite");
    double d = std::fmod(theta_deg, 360.0);
    if (d < 0) d += 360.0;
    if (d > 180.0) d = 360.0 - d;
    FieldConfig cfg = from_radians(e_kvcm, b_gauss, d * units::deg_to_rad);
    if (d == 0.0) {
        cfg.cos_theta_eb = 1.0;
        cfg.sin_theta_eb = 0.0;
    } else if (d == 90.0) {
        cfg.cos_theta_eb = 0.0;
        cfg.sin_theta_eb = 1.0;
    } else if (d == 180.0) {
        cfg.cos_theta_eb = -1.0;
        cfg.sin_theta_eb = 0.0;
    }
    return cfg;
}

CombinedField combined_field(const ElectronicState& state, const FieldConfig& cfg, int kappa) {
    require_kappa(kappa);
    const double de = stark_scale(state, cfg.e_kvcm);
    const double gb = zeeman_scale(state, cfg.b_gauss);

    CombinedField c;
    c.kappa = kappa;
    c.magnitude_ghz = std::sqrt(std::max(0.0, de * de + gb * gb + 2.0 * kappa * de * gb * cfg.cos_theta_eb));
    // planar vector sum, E along z: C = (kappa gb sin, 0, de + kappa gb cos)
    c.angle_to_e = std::atan2(std::abs(gb * cfg.sin_theta_eb), de + kappa * gb * cfg.cos_theta_eb);
    return c;
}

double theta_c(const ElectronicState& state, const FieldConfig& cfg) {
    const double de = stark_scale(state, cfg.e_kvcm);
    const double gb = zeeman_scale(state, cfg.b_gauss);
    const double cp = combined_field(state, cfg, +1).magnitude_ghz;
    const double cm = combined_field(state, cfg, -1).magnitude_ghz;
    if (cp < kDegenerateAxisTolGhz || cm < kDegenerateAxisTolGhz)
        throw DegenerateAxisError("combined field vanishes; quantization axis undefined");
    return std::acos(clamp_unit((de * de - gb * gb) / (cp * cm)));
}

double tilt_angle(const ElectronicState& state, const FieldConfig& cfg, int kappa) {
    require_kappa(kappa);
    const double de = stark_scale(state, cfg.e_kvcm);
    const double gb = zeeman_scale(state, cfg.b_gauss);
    const double c = combined_field(state, cfg, kappa).magnitude_ghz;
    if (c < kDegenerateAxisTolGhz)
        throw DegenerateAxisError("combined field vanishes; tilt angle undefined");
    return std::acos(clamp_unit((de + kappa * gb * cfg.cos_theta_eb) / c));
}

} // namespace casex
