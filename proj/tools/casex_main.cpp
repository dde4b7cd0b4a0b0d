#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "casex/errors.hpp"
#include "casex/scans.hpp"
#include "casex/units.hpp"
#include "casex/version.hpp"

namespace {

using namespace casex;

struct CommonOpts {
    std::string molecule;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--molecule", opts.molecule, "preset name (OH_X2Pi32, ICl_A3Pi1) or config file path")
        ->required();
    cmd->add_option("--out", opts.out, "output file (default: stdout)");
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out);
    if (!f) throw ArgumentError("cannot open output file '" + opts.out + "'");
    f << text;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct ModeOpts {
    std::string j_text;
    std::string jmax_text;
    bool lambda = true;

    ScanMode mode(const ElectronicState& mol) const {
        if (!j_text.empty() && !jmax_text.empty()) throw ArgumentError("give either --j or --jmax, not both");
        if (!jmax_text.empty()) return ScanMode::pendular_up_to(parse_half_int(jmax_text));
        if (!j_text.empty()) return ScanMode::fixed(parse_half_int(j_text));
        return ScanMode::fixed(mol.omega_bar); // lowest rotational level
    }
};

void add_mode(CLI::App* cmd, ModeOpts& m, bool scan_default_pendular = false) {
    cmd->add_option("--j", m.j_text, "fixed rotational level j, a half-integer like 3/2");
    cmd->add_option("--jmax", m.jmax_text,
                    scan_default_pendular ? "j-mixing basis cutoff, half-integer (default: omega_bar+8)"
                                          : "j-mixing basis cutoff, half-integer (enables pendular mode)");
    cmd->add_flag("--lambda,!--no-lambda", m.lambda, "include Lambda-doubling (default: on)");
}

int run_levels(const CommonOpts& common, const ModeOpts& modeopt, double e, double b, double theta_deg) {
    auto mol = load_molecule(common.molecule);
    auto cfg = FieldConfig::from_degrees(e, b, theta_deg);
    auto mode = modeopt.mode(mol);

    if (combined_field(mol, cfg, +1).magnitude_ghz < kDegenerateAxisTolGhz &&
        combined_field(mol, cfg, -1).magnitude_ghz < kDegenerateAxisTolGhz)
        throw DegenerateAxisError("both combined fields vanish; no quantization axis at E=B=0");

    std::ostringstream os;
    os << "# " << kToolName << " " << kVersion << "\n";
    os << "# molecule: " << mol.name << "\n";
    os << "# e_kvcm: " << fmt(e) << ", b_gauss: " << fmt(b) << ", theta_eb_deg: " << fmt(theta_deg) << "\n";
    os << "# lambda_doubling: " << (modeopt.lambda ? "on" : "off") << "\n";
    os << "label,energy_ghz\n";
    if (mode.pendular) {
        auto vals = eigenvalues_of(build_pendular_hamiltonian(mol, cfg, mode.j, modeopt.lambda));
        for (std::size_t k = 0; k < vals.size(); ++k) {
            char lab[16];
            std::snprintf(lab, sizeof lab, "E%03zu", k + 1);
            os << lab << "," << fmt(vals[k]) << "\n";
        }
    } else if (!modeopt.lambda) {
        for (const auto& s : enumerate_fixed_j_basis(mol, mode.j))
            os << s.label() << "," << fmt(fixed_j_energy(mol, cfg, s)) << "\n";
    } else {
        auto h = build_fixed_j_hamiltonian(mol, cfg, mode.j, true);
        auto sol = eigen_symmetric(h);
        // ascending eigenvalues against the basis label with dominant overlap
        std::vector<bool> used(h.dimension(), false);
        for (std::size_t k = 0; k < h.dimension(); ++k) {
            std::size_t best = 0;
            double bw = -1;
            for (std::size_t i = 0; i < h.dimension(); ++i) {
                double w = std::abs(sol.vector(k, i, h.dimension()));
                if (!used[i] && w > bw) {
                    bw = w;
                    best = i;
                }
            }
            used[best] = true;
            os << h.labels()[best].label() << "," << fmt(sol.values[k]) << "\n";
        }
    }
    emit(common, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("crossed-field energy levels for paramagnetic dipolar molecules (") +
                 kToolName + " " + kVersion + ")"};
    app.require_subcommand(1);

    // ---- molecule-info ----
    CommonOpts mi_common;
    auto* mi = app.add_subcommand("molecule-info", "print the constants of a molecule preset or config");
    add_common(mi, mi_common);

    // ---- levels ----
    CommonOpts lv_common;
    ModeOpts lv_mode;
    double lv_e = 0, lv_b = 0, lv_theta = 0;
    auto* lv = app.add_subcommand("levels", "energy levels at a single field point");
    add_common(lv, lv_common);
    lv->add_option("--efield", lv_e, "electric field in kV/cm")->check(CLI::NonNegativeNumber);
    lv->add_option("--bfield", lv_b, "magnetic field in Gauss")->check(CLI::NonNegativeNumber);
    lv->add_option("--theta-eb", lv_theta, "angle between E and B in degrees");
    add_mode(lv, lv_mode);

    // ---- zeeman-scan ----
    CommonOpts zs_common;
    ModeOpts zs_mode;
    double zs_e = 5, zs_theta = 0, zs_bmin = 0, zs_bmax = 3000;
    int zs_points = 201;
    auto* zs = app.add_subcommand("zeeman-scan", "eigenvalues versus magnetic field, CSV");
    add_common(zs, zs_common);
    zs->add_option("--efield", zs_e, "fixed electric field in kV/cm")->check(CLI::NonNegativeNumber);
    zs->add_option("--theta-eb", zs_theta, "angle between E and B in degrees");
    zs->add_option("--bmin", zs_bmin, "scan start in Gauss")->check(CLI::NonNegativeNumber);
    zs->add_option("--bmax", zs_bmax, "scan end in Gauss")->check(CLI::NonNegativeNumber);
    zs->add_option("--points", zs_points, "number of grid points")->check(CLI::PositiveNumber);
    add_mode(zs, zs_mode);

    // ---- stark-scan ----
    CommonOpts ss_common;
    ModeOpts ss_mode;
    double ss_b = 0, ss_theta = 0, ss_emin = 0;
    std::optional<double> ss_emax;
    int ss_points = 201;
    auto* ss = app.add_subcommand("stark-scan", "eigenvalues versus electric field, CSV");
    add_common(ss, ss_common);
    ss->add_option("--bfield", ss_b, "fixed magnetic field in Gauss")->check(CLI::NonNegativeNumber);
    ss->add_option("--theta-eb", ss_theta, "angle between E and B in degrees");
    ss->add_option("--emin", ss_emin, "scan start in kV/cm")->check(CLI::NonNegativeNumber);
    ss->add_option("--emax", ss_emax, "scan end in kV/cm (default: 20 B_e / d)");
    ss->add_option("--points", ss_points, "number of grid points")->check(CLI::PositiveNumber);
    add_mode(ss, ss_mode, true);

    // ---- tilt-scan ----
    CommonOpts ts_common;
    double ts_b = 1000, ts_theta = 60, ts_emin = 0, ts_emax = 10;
    int ts_points = 201;
    auto* ts = app.add_subcommand("tilt-scan", "dipole tilt angle versus electric field, CSV");
    add_common(ts, ts_common);
    ts->add_option("--bfield", ts_b, "fixed magnetic field in Gauss")->check(CLI::NonNegativeNumber);
    ts->add_option("--theta-eb", ts_theta, "angle between E and B in degrees");
    ts->add_option("--emin", ts_emin, "scan start in kV/cm")->check(CLI::NonNegativeNumber);
    ts->add_option("--emax", ts_emax, "scan end in kV/cm")->check(CLI::NonNegativeNumber);
    ts->add_option("--points", ts_points, "number of grid points")->check(CLI::PositiveNumber);

    // ---- trap-map ----
    CommonOpts tm_common;
    double tm_gradient = 100;
    std::string tm_evec = "0,0,0", tm_slice = "xz";
    double tm_extent = 1.0;
    int tm_points = 41;
    auto* tm = app.add_subcommand("trap-map", "quadrupole-trap potential map over a plane slice, CSV");
    add_common(tm, tm_common);
    tm->add_option("--gradient", tm_gradient, "quadrupole field gradient in Gauss/cm")
        ->check(CLI::PositiveNumber);
    tm->add_option("--e-vector", tm_evec, "constant electric field Ex,Ey,Ez in kV/cm");
    tm->add_option("--slice", tm_slice, "slice plane: xz or xy")->check(CLI::IsMember({"xz", "xy"}));
    tm->add_option("--extent", tm_extent, "grid half-width in cm")->check(CLI::PositiveNumber);
    tm->add_option("--points", tm_points, "grid points per axis")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*mi) {
            auto mol = load_molecule(mi_common.molecule);
            std::ostringstream os;
            os << "name: " << mol.name << "\n";
            os << "lambda: " << to_string(mol.lambda) << ", sigma: " << to_string(mol.sigma)
               << ", omega_bar: " << to_string(mol.omega_bar) << "\n";
            os << "g_abs: " << fmt(mol.g_abs) << "\n";
            os << "d_debye: " << fmt(mol.d_debye) << "\n";
            os << "delta_ghz: " << fmt(mol.delta_ghz) << "\n";
            os << "be_ghz: " << fmt(mol.be_ghz) << "\n";
            os << "kappa pairing: kappa = " << (mol.flip_kappa_pairing ? "+" : "-") << "sign(omega)\n";
            for (const auto& r : mol.references) os << "reference: " << r << "\n";
            emit(mi_common, os.str());
            return 0;
        }
        if (*lv) return run_levels(lv_common, lv_mode, lv_e, lv_b, lv_theta);
        if (*zs) {
            auto mol = load_molecule(zs_common.molecule);
            ScanSpec spec{mol,
                          ScanVariable::b_gauss,
                          zs_bmin,
                          zs_bmax,
                          zs_points,
                          FieldConfig::from_degrees(zs_e, 0, zs_theta),
                          zs_mode.mode(mol),
                          zs_mode.lambda};
            emit(zs_common, zeeman_scan(spec).to_csv());
            return 0;
        }
        if (*ss) {
            auto mol = load_molecule(ss_common.molecule);
            double emax = ss_emax ? *ss_emax
                                  : 20.0 * mol.be_ghz / (mol.d_debye * units::debye_kvcm_to_ghz);
            ModeOpts m = ss_mode;
            if (m.j_text.empty() && m.jmax_text.empty())
                m.jmax_text = to_string(mol.omega_bar + HalfInt(8));
            ScanSpec spec{mol,
                          ScanVariable::e_kvcm,
                          ss_emin,
                          emax,
                          ss_points,
                          FieldConfig::from_degrees(0, ss_b, ss_theta),
                          m.mode(mol),
                          m.lambda};
            emit(ss_common, stark_scan(spec).to_csv());
            return 0;
        }
        if (*ts) {
            auto mol = load_molecule(ts_common.molecule);
            auto base = FieldConfig::from_degrees(0, ts_b, ts_theta);
            emit(ts_common, tilt_scan(mol, base, ts_emin, ts_emax, ts_points).to_csv());
            return 0;
        }
        if (*tm) {
            auto mol = load_molecule(tm_common.molecule);
            TrapSpec trap;
            trap.gradient_gauss_per_cm = tm_gradient;
            std::istringstream ev(tm_evec);
            char c1 = 0, c2 = 0;
            if (!(ev >> trap.e_field_kvcm[0] >> c1 >> trap.e_field_kvcm[1] >> c2 >>
                  trap.e_field_kvcm[2]) ||
                c1 != ',' || c2 != ',')
                throw ArgumentError("--e-vector expects Ex,Ey,Ez in kV/cm");
            trap.axis1 = {-tm_extent, tm_extent, tm_points};
            trap.axis2 = {-tm_extent, tm_extent, tm_points};
            emit(tm_common, trap_map(mol, trap, tm_slice == "xz" ? TrapSlice::xz : TrapSlice::xy).to_csv());
            return 0;
        }
    } catch (const DegenerateAxisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
