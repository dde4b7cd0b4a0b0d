#include "casex/basis.hpp"

#include "casex/errors.hpp"

namespace casex {

std::string CaseXState::label() const {
    std::string s = "w=";
    s += to_string(omega);
    s += ";k=";
    s += kappa > 0 ? "+1" : "-1";
    s += ";j=";
    s += to_string(j);
    s += ";m=";
    s += to_string(m);
    return s;
}

static void append_block(std::vector<CaseXState>& out, const ElectronicState& state, int kappa,
                         HalfInt j_lo, HalfInt j_hi) {
    HalfInt omega = state.omega_for_kappa(kappa);
    for (HalfInt j = j_lo; j <= j_hi; j += HalfInt(1))
        for (HalfInt m = -j; m <= j; m += HalfInt(1)) out.push_back({omega, kappa, j, m});
}

std::vector<CaseXState> enumerate_fixed_j_basis(const ElectronicState& state, HalfInt j) {
    if (j < state.omega_bar)
        throw ArgumentError("j=" + to_string(j) + " below omega_bar=" + to_string(state.omega_bar));
    if (!j.integer_spaced_with(state.omega_bar))
        throw ArgumentError("j=" + to_string(j) + " not integer-spaced with omega_bar=" +
                            to_string(state.omega_bar));
    std::vector<CaseXState> out;
    out.reserve(2 * (j.twice() + 1));
    append_block(out, state, +1, j, j);
    append_block(out, state, -1, j, j);
    return out;
}

std::vector<CaseXState> enumerate_pendular_basis(const ElectronicState& state, HalfInt j_max) {
    if (j_max < state.omega_bar)
        throw ArgumentError("j_max=" + to_string(j_max) + " below omega_bar=" + to_string(state.omega_bar));
    if (!j_max.integer_spaced_with(state.omega_bar))
        throw ArgumentError("j_max=" + to_string(j_max) + " not integer-spaced with omega_bar=" +
                            to_string(state.omega_bar));
    std::vector<CaseXState> out;
    append_block(out, state, +1, state.omega_bar, j_max);
    append_block(out, state, -1, state.omega_bar, j_max);
    return out;
}

} // namespace casex
