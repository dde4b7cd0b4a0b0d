#include "casex/scans.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "casex/errors.hpp"
#include "casex/units.hpp"
#include "casex/version.hpp"

namespace casex {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return g;
}

void validate_scan(const ScanSpec& spec) {
    if (spec.n_points < 2) throw ArgumentError("scan needs at least 2 points");
    if (spec.start > spec.stop) throw ArgumentError("scan start must be <= stop");
    if (spec.start < 0) throw ArgumentError("scanned field must be >= 0");
    if (spec.mode.j < spec.molecule.omega_bar)
        throw ArgumentError("mode j=" + to_string(spec.mode.j) + " below omega_bar=" +
                            to_string(spec.molecule.omega_bar));
}

FieldConfig config_at(const ScanSpec& spec, double value) {
    FieldConfig cfg = spec.fixed; // keeps the exact cos/sin of theta_EB
    if (spec.variable == ScanVariable::b_gauss)
        cfg.b_gauss = value;
    else
        cfg.e_kvcm = value;
    return cfg;
}

// Eigenvalues assigned to basis labels: ascending eigenvalues claim the
// unused basis index with the largest eigenvector component.
std::vector<double> overlap_assigned(const SymmetricMatrix& h) {
    const auto sol = eigen_symmetric(h);
    const std::size_t n = h.dimension();
    std::vector<double> by_label(n, 0.0);
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        double best_w = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            double w = std::abs(sol.vector(k, i, n));
            if (w > best_w) {
                best_w = w;
                best = i;
            }
        }
        used[best] = true;
        by_label[best] = sol.values[k];
    }
    return by_label;
}

std::string mode_string(const ScanSpec& spec) {
    if (spec.mode.pendular) return "pendular j_max=" + to_string(spec.mode.j);
    return "fixed_j j=" + to_string(spec.mode.j);
}

SpectrumTable run_scan(const ScanSpec& spec) {
    validate_scan(spec);
    const auto& mol = spec.molecule;
    const bool scanning_b = spec.variable == ScanVariable::b_gauss;

    SpectrumTable t;
    t.columns.push_back(scanning_b ? "b_gauss" : "e_kvcm");
    std::string legend;
    if (spec.mode.pendular) {
        auto basis = enumerate_pendular_basis(mol, spec.mode.j);
        for (std::size_t k = 1; k <= basis.size(); ++k) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "E%03zu", k);
            t.columns.push_back(buf);
        }
        legend = "eigenvalues in GHz, ascending per row";
    } else {
        for (const auto& s : enumerate_fixed_j_basis(mol, spec.mode.j)) t.columns.push_back(s.label());
        legend = spec.lambda_doubling ? "eigenvalues in GHz, matched to case-X labels by overlap"
                                      : "exact case-X level energies in GHz";
    }

    t.metadata = {
        {"tool", std::string(kToolName) + " " + kVersion},
        {"molecule", mol.name},
        {"mode", mode_string(spec)},
        {"lambda_doubling", spec.lambda_doubling ? "on" : "off"},
        {scanning_b ? "e_kvcm" : "b_gauss", fmt(scanning_b ? spec.fixed.e_kvcm : spec.fixed.b_gauss)},
        {"theta_eb_rad", fmt(spec.fixed.theta_eb)},
        {"legend", legend},
    };

    for (double v : linspace(spec.start, spec.stop, spec.n_points)) {
        FieldConfig cfg = config_at(spec, v);
        std::vector<double> row{v};
        std::string err;
        try {
            if (spec.mode.pendular) {
                auto vals = eigenvalues_of(build_pendular_hamiltonian(mol, cfg, spec.mode.j,
                                                                      spec.lambda_doubling));
                row.insert(row.end(), vals.begin(), vals.end());
            } else if (!spec.lambda_doubling) {
                for (const auto& s : enumerate_fixed_j_basis(mol, spec.mode.j))
                    row.push_back(fixed_j_energy(mol, cfg, s));
            } else {
                auto vals = overlap_assigned(build_fixed_j_hamiltonian(mol, cfg, spec.mode.j, true));
                row.insert(row.end(), vals.begin(), vals.end());
            }
        } catch (const DegenerateAxisError& e) {
            row.resize(1);
            err = e.what();
        }
        t.rows.push_back(std::move(row));
        t.row_errors.push_back(std::move(err));
    }
    return t;
}

} // namespace

void SpectrumTable::write_csv(std::ostream& os) const {
    for (const auto& [k, v] : metadata) os << "# " << k << ": " << v << "\n";
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
    os << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!row_ok(i)) {
            os << "# " << columns[0] << "=" << fmt(rows[i][0]) << ": " << row_errors[i] << "\n";
            for (std::size_t c = 0; c < n_leading; ++c) os << (c ? "," : "") << fmt(rows[i][c]);
            for (std::size_t c = n_leading; c < columns.size(); ++c) os << ",";
            os << "\n";
            continue;
        }
        for (std::size_t c = 0; c < rows[i].size(); ++c) os << (c ? "," : "") << fmt(rows[i][c]);
        os << "\n";
    }
}

std::string SpectrumTable::to_csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
}

SpectrumTable zeeman_scan(const ScanSpec& spec) {
    if (spec.variable != ScanVariable::b_gauss)
        throw ArgumentError("zeeman_scan expects variable = b_gauss");
    return run_scan(spec);
}

SpectrumTable stark_scan(const ScanSpec& spec) {
    if (spec.variable != ScanVariable::e_kvcm)
        throw ArgumentError("stark_scan expects variable = e_kvcm");
    return run_scan(spec);
}

SpectrumTable tilt_scan(const ElectronicState& state, const FieldConfig& base, double e_start,
                        double e_stop, int n_points) {
    if (n_points < 2) throw ArgumentError("scan needs at least 2 points");
    if (e_start > e_stop) throw ArgumentError("scan start must be <= stop");
    if (e_start < 0) throw ArgumentError("scanned field must be >= 0");

    SpectrumTable t;
    t.columns = {"e_kvcm", "tilt_plus_rad", "tilt_minus_rad"};
    t.metadata = {
        {"tool", std::string(kToolName) + " " + kVersion},
        {"molecule", state.name},
        {"mode", "tilt angle, no lambda doubling"},
        {"b_gauss", fmt(base.b_gauss)},
        {"theta_eb_rad", fmt(base.theta_eb)},
        {"legend", "angle between <d> and E for kappa=+1/-1, radians"},
    };
    for (double e : linspace(e_start, e_stop, n_points)) {
        FieldConfig cfg = base;
        cfg.e_kvcm = e;
        std::vector<double> row{e};
        std::string err;
        try {
            row.push_back(tilt_angle(state, cfg, +1));
            row.push_back(tilt_angle(state, cfg, -1));
        } catch (const DegenerateAxisError& ex) {
            row.resize(1);
            err = ex.what();
        }
        t.rows.push_back(std::move(row));
        t.row_errors.push_back(std::move(err));
    }
    return t;
}

double trap_potential(const ElectronicState& state, const TrapSpec& trap, double x_cm, double y_cm,
                      double z_cm) {
    if (!(trap.gradient_gauss_per_cm > 0)) throw ArgumentError("trap gradient must be > 0");
    if (trap.branch != +1 && trap.branch != -1) throw ArgumentError("trap branch must be +1 or -1");
    const double k = trap.branch;
    const double u = units::debye_kvcm_to_ghz;
    const double gb = state.g_abs * trap.gradient_gauss_per_cm * units::bohr_magneton_gauss_to_ghz;
    const double cx = state.d_debye * trap.e_field_kvcm[0] * u + k * gb * x_cm;
    const double cy = state.d_debye * trap.e_field_kvcm[1] * u + k * gb * y_cm;
    const double cz = state.d_debye * trap.e_field_kvcm[2] * u - k * 2.0 * gb * z_cm;
    return std::sqrt(cx * cx + cy * cy + cz * cz);
}

SpectrumTable trap_map(const ElectronicState& state, const TrapSpec& trap, TrapSlice slice) {
    if (trap.axis1.n < 1 || trap.axis2.n < 1) throw ArgumentError("trap grid must be non-empty");

    const bool xz = slice == TrapSlice::xz;
    SpectrumTable t;
    t.n_leading = 2;
    t.columns = {"x_cm", xz ? "z_cm" : "y_cm", "u_plus_ghz", "u_minus_ghz"};
    t.metadata = {
        {"tool", std::string(kToolName) + " " + kVersion},
        {"molecule", state.name},
        {"mode", xz ? "trap map, x-z slice" : "trap map, x-y slice"},
        {"gradient_gauss_per_cm", fmt(trap.gradient_gauss_per_cm)},
        {"e_field_kvcm", fmt(trap.e_field_kvcm[0]) + " " + fmt(trap.e_field_kvcm[1]) + " " +
                             fmt(trap.e_field_kvcm[2])},
        {"legend", "adiabatic combined-field potentials |C_+|, |C_-| in GHz"},
    };

    TrapSpec plus = trap, minus = trap;
    plus.branch = +1;
    minus.branch = -1;
    for (double a : linspace(trap.axis1.min, trap.axis1.max, trap.axis1.n)) {
        for (double b : linspace(trap.axis2.min, trap.axis2.max, trap.axis2.n)) {
            const double x = a, y = xz ? 0.0 : b, z = xz ? b : 0.0;
            t.rows.push_back({a, b, trap_potential(state, plus, x, y, z),
                              trap_potential(state, minus, x, y, z)});
            t.row_errors.emplace_back();
        }
    }
    return t;
}

} // namespace casex
