#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casex/half_int.hpp"

namespace casex {

// One Hund's case-a electronic state. The signed (lambda, sigma) pair is the
// omega = +omega_bar representative; the partner state is (-lambda, -sigma).
struct ElectronicState {
    std::string name;
    HalfInt lambda;    // signed orbital projection of the representative
    HalfInt sigma;     // signed spin projection of the representative
    HalfInt omega_bar; // |lambda + sigma|
    double g_abs = 0;  // |g|, defaults to |lambda + 2 sigma|
    double d_debye = 0;
    double delta_ghz = 0; // zero-field Lambda-doublet splitting
    double be_ghz = 0;    // rotational constant
    // kappa = -sign(omega) by default (electric and magnetic moments parallel
    // in the body frame).  Set for exotic states where sign(g) != sign(omega).
    bool flip_kappa_pairing = false;
    std::vector<std::string> references;

    // kappa branch paired with the signed omega = +/- omega_bar.
    int kappa_for_omega(HalfInt omega) const {
        int k = omega.twice() > 0 ? -1 : +1;
        return flip_kappa_pairing ? -k : k;
    }
    HalfInt omega_for_kappa(int kappa) const {
        HalfInt om = kappa == +1 ? -omega_bar : omega_bar;
        return flip_kappa_pairing ? -om : om;
    }
};

// Throws ValidationError naming the offending field.
void validate(const ElectronicState& state);

// `source` is a built-in preset name ("OH_X2Pi32", "ICl_A3Pi1") or a path to
// a JSON config file.
ElectronicState load_molecule(std::string_view source);

ElectronicState parse_molecule_json(const std::string& text);
std::string molecule_to_json(const ElectronicState& state);

std::vector<std::string> preset_names();

// d * E and |g| * mu_0 * B in GHz. Field magnitudes must be >= 0.
double stark_scale(const ElectronicState& state, double e_kvcm);
double zeeman_scale(const ElectronicState& state, double b_gauss);

} // namespace casex
