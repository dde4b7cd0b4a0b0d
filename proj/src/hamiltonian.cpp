#include "casex/hamiltonian.hpp"

#include <cmath>

#include "casex/errors.hpp"
#include "casex/wigner.hpp"

namespace casex {

namespace {

double phase(HalfInt h) {
    if (!h.is_integer()) throw ArgumentError("non-integer phase exponent");
    return (h.twice() / 2) % 2 == 0 ? 1.0 : -1.0;
}

// In-plane field components (z, x) in GHz seen by the branch paired with
// signed omega, for the chosen lab frame.
struct PlanarField {
    double z = 0;
    double x = 0;
};

PlanarField branch_field(const ElectronicState& state, const FieldConfig& cfg, int kappa,
                         OracleFrame frame) {
    const double de = stark_scale(state, cfg.e_kvcm);
    const double gb = zeeman_scale(state, cfg.b_gauss);
    if (frame == OracleFrame::e_along_z)
        return {de + kappa * gb * cfg.cos_theta_eb, kappa * gb * cfg.sin_theta_eb};
    return {kappa * gb + de * cfg.cos_theta_eb, de * cfg.sin_theta_eb};
}

void add_labframe_field_block(SymmetricMatrix& h, const ElectronicState& state, const FieldConfig& cfg,
                              OracleFrame frame, std::size_t lo, std::size_t hi) {
    const auto& basis = h.labels();
    for (std::size_t a = lo; a < hi; ++a) {
        const auto& sa = basis[a];
        PlanarField f = branch_field(state, cfg, sa.kappa, frame);
        for (std::size_t b = a; b < hi; ++b) {
            const auto& sb = basis[b];
            double t0 = cos_beta_element(sa.omega, sa.j, sa.m, 0, sb.j, sb.m);
            double nx = (cos_beta_element(sa.omega, sa.j, sa.m, -1, sb.j, sb.m) -
                         cos_beta_element(sa.omega, sa.j, sa.m, +1, sb.j, sb.m)) /
                        std::sqrt(2.0);
            h.add(a, b, -(f.z * t0 + f.x * nx));
        }
    }
}

SymmetricMatrix build_labframe_oracle(const ElectronicState& state, const FieldConfig& cfg, HalfInt j_lo,
                                      HalfInt j_hi, bool include_lambda, bool include_rotation,
                                      OracleFrame frame) {
    // Reuse the case-X enumeration for its (omega, kappa) bookkeeping; here m
    // is the projection onto lab z.
    std::vector<CaseXState> basis;
    if (j_lo == j_hi)
        basis = enumerate_fixed_j_basis(state, j_lo);
    else
        basis = enumerate_pendular_basis(state, j_hi);

    const std::size_t n = basis.size();
    SymmetricMatrix h(n, basis);
    add_labframe_field_block(h, state, cfg, frame, 0, n / 2);
    add_labframe_field_block(h, state, cfg, frame, n / 2, n);

    if (include_rotation) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = basis[i];
            double om = s.omega.value();
            h.add(i, i, state.be_ghz * (s.j.value() * (s.j.value() + 1) - om * om));
        }
    }

    if (include_lambda && state.delta_ghz != 0.0) {
        // Both sectors share the lab quantization axis, so the coupling is
        // diagonal in (j, m).
        for (std::size_t a = 0; a < n / 2; ++a)
            for (std::size_t b = n / 2; b < n; ++b)
                if (basis[a].j == basis[b].j && basis[a].m == basis[b].m)
                    h.add(a, b, 0.5 * state.delta_ghz);
    }
    return h;
}

} // namespace

double cos_beta_element(HalfInt omega, HalfInt j1, HalfInt m1, int q, HalfInt j2, HalfInt m2) {
    if (q < -1 || q > +1) throw ArgumentError("q must be -1, 0 or +1");
    if (j1 < abs(omega) || j2 < abs(omega)) throw ArgumentError("j below |omega|");
    return phase(m1 - omega) * std::sqrt((j1.twice() + 1.0) * (j2.twice() + 1.0)) *
           wigner_3j(j1, HalfInt(1), j2, -omega, HalfInt(0), omega) *
           wigner_3j(j1, HalfInt(1), j2, -m1, HalfInt(q), m2);
}

double fixed_j_energy(const ElectronicState& state, const FieldConfig& cfg, const CaseXState& x) {
    const double c = combined_field(state, cfg, x.kappa).magnitude_ghz;
    const double jj1 = x.j.value() * (x.j.value() + 1);
    return -x.omega.value() * x.m.value() * c / jj1;
}

SymmetricMatrix build_fixed_j_hamiltonian(const ElectronicState& state, const FieldConfig& cfg, HalfInt j,
                                          bool include_lambda) {
    auto basis = enumerate_fixed_j_basis(state, j);
    const std::size_t n = basis.size();
    const std::size_t nb = n / 2; // per-kappa block size, 2j+1

    SymmetricMatrix h(n, basis);
    for (std::size_t i = 0; i < n; ++i) h.set(i, i, fixed_j_energy(state, cfg, basis[i]));

    if (include_lambda && state.delta_ghz != 0.0) {
        const double tc = theta_c(state, cfg);
        // rows: kappa=+1 states m_+; cols: kappa=-1 states m_-
        for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = 0; b < nb; ++b)
                h.set(a, nb + b, 0.5 * state.delta_ghz * wigner_small_d(j, basis[a].m, basis[nb + b].m, tc));
    }
    return h;
}

SymmetricMatrix build_pendular_hamiltonian(const ElectronicState& state, const FieldConfig& cfg,
                                           HalfInt j_max, bool include_lambda) {
    auto basis = enumerate_pendular_basis(state, j_max);
    const std::size_t n = basis.size();
    SymmetricMatrix h(n, basis);

    CombinedField c[2] = {combined_field(state, cfg, +1), combined_field(state, cfg, -1)};

    for (std::size_t a = 0; a < n; ++a) {
        const auto& sa = basis[a];
        double om = sa.omega.value();
        h.add(a, a, state.be_ghz * (sa.j.value() * (sa.j.value() + 1) - om * om));
        const double ck = c[sa.kappa > 0 ? 0 : 1].magnitude_ghz;
        for (std::size_t b = a; b < n; ++b) {
            const auto& sb = basis[b];
            if (sb.kappa != sa.kappa || sb.m != sa.m) continue;
            if (std::abs(sa.j.twice() - sb.j.twice()) > 2) continue; // rank-1 triangle rule
            h.add(a, b, -ck * cos_beta_element(sa.omega, sa.j, sa.m, 0, sb.j, sb.m));
        }
    }

    if (include_lambda && state.delta_ghz != 0.0) {
        const double tc = theta_c(state, cfg);
        for (std::size_t a = 0; a < n; ++a) {
            if (basis[a].kappa != +1) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (basis[b].kappa != -1 || basis[b].j != basis[a].j) continue;
                h.set(a, b, 0.5 * state.delta_ghz * wigner_small_d(basis[a].j, basis[a].m, basis[b].m, tc));
            }
        }
    }
    return h;
}

SymmetricMatrix build_labframe_fixed_j_oracle(const ElectronicState& state, const FieldConfig& cfg,
                                              HalfInt j, bool include_lambda, OracleFrame frame) {
    return build_labframe_oracle(state, cfg, j, j, include_lambda, false, frame);
}

SymmetricMatrix build_labframe_pendular_oracle(const ElectronicState& state, const FieldConfig& cfg,
                                               HalfInt j_max, bool include_lambda, OracleFrame frame) {
    return build_labframe_oracle(state, cfg, state.omega_bar, j_max, include_lambda, true, frame);
}

} // namespace casex
