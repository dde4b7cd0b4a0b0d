#pragma once

#include <string>
#include <vector>

#include "casex/half_int.hpp"
#include "casex/molecule.hpp"

namespace casex {

// One case-X basis ket |omega kappa j m_kappa>.  m is the projection onto the
// C_kappa axis (or onto lab z for the lab-frame oracle bases).
struct CaseXState {
    HalfInt omega;
    int kappa = +1;
    HalfInt j;
    HalfInt m;

    std::string label() const;
    bool operator==(const CaseXState&) const = default;
};

// 2(2j+1) states: kappa=+1 block then kappa=-1, m ascending within a block.
std::vector<CaseXState> enumerate_fixed_j_basis(const ElectronicState& state, HalfInt j);

// Union of fixed-j bases for j = omega_bar .. j_max: kappa=+1 block first,
// then kappa=-1; within a block j ascending, then m ascending.
std::vector<CaseXState> enumerate_pendular_basis(const ElectronicState& state, HalfInt j_max);

} // namespace casex
