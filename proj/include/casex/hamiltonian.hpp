#pragma once

#include "casex/basis.hpp"
#include "casex/fields.hpp"
#include "casex/matrix.hpp"

namespace casex {

// <omega j1 m1| T^1_q(n) |omega j2 m2>, the spherical components of the
// molecular axis.  q=0 is cos(beta); q=+-1 appear only in the lab-frame
// oracle.  Vanishes unless m2 = m1 + ... selection rules of the 3-j symbols.
double cos_beta_element(HalfInt omega, HalfInt j1, HalfInt m1, int q, HalfInt j2, HalfInt m2);

// Exact fixed-j field energy -omega m C_kappa / (j(j+1)) in GHz.
double fixed_j_energy(const ElectronicState& state, const FieldConfig& cfg, const CaseXState& x);

// 2(2j+1)-dimensional case-X field Hamiltonian at fixed j: diagonal blocks
// from fixed_j_energy, off-diagonal Lambda block (Delta/2) d^j(theta_C) when
// requested.  Blocks with equal omega carry no Lambda coupling by
// construction.
SymmetricMatrix build_fixed_j_hamiltonian(const ElectronicState& state, const FieldConfig& cfg, HalfInt j,
                                          bool include_lambda);

// j-mixed Hamiltonian over j = omega_bar..j_max: rotational diagonal
// B_e (j(j+1) - omega^2), field coupling -C_kappa <j' m|cos beta|j m> within
// each (kappa, m) ladder, Lambda block diagonal in j.
SymmetricMatrix build_pendular_hamiltonian(const ElectronicState& state, const FieldConfig& cfg,
                                           HalfInt j_max, bool include_lambda);

// Which lab axis carries which field in the oracle; spectra must not care.
enum class OracleFrame { e_along_z, b_along_z };

// Brute-force check: the same physics assembled in the signed |omega j m>
// basis quantized along lab z, using T^1_q components of the molecular axis.
// No combined-field magnitudes, no theta_C, no d-matrices.
SymmetricMatrix build_labframe_fixed_j_oracle(const ElectronicState& state, const FieldConfig& cfg,
                                              HalfInt j, bool include_lambda,
                                              OracleFrame frame = OracleFrame::e_along_z);

// Same, j-mixed with the rotational diagonal included.
SymmetricMatrix build_labframe_pendular_oracle(const ElectronicState& state, const FieldConfig& cfg,
                                               HalfInt j_max, bool include_lambda,
                                               OracleFrame frame = OracleFrame::e_along_z);

} // namespace casex
