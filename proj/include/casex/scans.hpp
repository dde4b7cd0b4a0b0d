#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "casex/fields.hpp"
#include "casex/hamiltonian.hpp"

namespace casex {

enum class ScanVariable { b_gauss, e_kvcm };

struct ScanMode {
    bool pendular = false;
    HalfInt j; // the fixed j, or j_max in pendular mode

    static ScanMode fixed(HalfInt j) { return {false, j}; }
    static ScanMode pendular_up_to(HalfInt j_max) { return {true, j_max}; }
};

struct ScanSpec {
    ElectronicState molecule;
    ScanVariable variable = ScanVariable::b_gauss;
    double start = 0;
    double stop = 0;
    int n_points = 2;
    FieldConfig fixed; // non-scanned field values; the scanned one is ignored
    ScanMode mode;
    bool lambda_doubling = false;
};

// Scan output: metadata header, one leading coordinate column block, one
// column per labeled level.  Rows at degenerate-axis points keep only the
// leading values and carry an error note; the CSV shows a '#' comment and
// empty cells there.
struct SpectrumTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns; // full header, leading coords first
    std::size_t n_leading = 1;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_errors; // "" = ok

    bool row_ok(std::size_t i) const { return row_errors[i].empty(); }
    void write_csv(std::ostream& os) const;
    std::string to_csv() const;
};

// Eigenvalues versus B (resp. E).  Fixed-j mode without Lambda-doubling
// tracks each (kappa, m) column analytically; with Lambda the eigenvalues are
// assigned to case-X labels by eigenvector overlap; pendular columns are
// index-ordered ascending.
SpectrumTable zeeman_scan(const ScanSpec& spec);
SpectrumTable stark_scan(const ScanSpec& spec);

// Tilt angles of both branches versus E.  base carries B and theta_EB.
SpectrumTable tilt_scan(const ElectronicState& state, const FieldConfig& base, double e_start,
                        double e_stop, int n_points);

struct GridAxis {
    double min = 0;
    double max = 0;
    int n = 0;
};

enum class TrapSlice { xz, xy };

// Quadrupole trap B(r) = dB (x, y, -2z) plus a constant electric field.
struct TrapSpec {
    double gradient_gauss_per_cm = 0;
    std::array<double, 3> e_field_kvcm{0, 0, 0};
    GridAxis axis1, axis2; // slice grid
    int branch = +1;
};

// |C_kappa(r)| in GHz at a point (cm), the adiabatic trapping potential of
// the stretched branch.
double trap_potential(const ElectronicState& state, const TrapSpec& trap, double x_cm, double y_cm,
                      double z_cm);

// Both branches evaluated over a 2D slice; columns (a1, a2, u_plus, u_minus).
SpectrumTable trap_map(const ElectronicState& state, const TrapSpec& trap, TrapSlice slice);

} // namespace casex
