#include "casex/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "casex/errors.hpp"

namespace casex {

namespace {

constexpr int kFactCap = 60;

constexpr std::array<double, kFactCap + 1> make_factorials() {
    std::array<double, kFactCap + 1> f{};
    f[0] = 1.0;
    for (int i = 1; i <= kFactCap; ++i) f[i] = f[i - 1] * i;
    return f;
}

constexpr auto kFact = make_factorials();

// n is twice a whole number; returns (n/2)!.
double fact2(int twice_n) {
    int n = twice_n / 2;
    if (twice_n % 2 != 0 || n < 0) throw ArgumentError("factorial of a non-natural number");
    if (n > kFactCap) throw RangeError("factorial argument " + std::to_string(n) + " exceeds cap 60");
    return kFact[n];
}

double phase_from_twice(int twice_exp) {
    if (twice_exp % 2 != 0) throw ArgumentError("non-integer phase exponent");
    return (twice_exp / 2) % 2 == 0 ? 1.0 : -1.0;
}

void require_jm_pair(HalfInt j, HalfInt m, const char* what) {
    if (j.twice() < 0) throw ArgumentError(std::string(what) + ": j must be non-negative");
    if (!j.integer_spaced_with(m))
        throw ArgumentError(std::string(what) + ": j-m is not an integer (j=" + to_string(j) +
                            ", m=" + to_string(m) + ")");
    if (abs(m) > j)
        throw ArgumentError(std::string(what) + ": |m| > j (j=" + to_string(j) + ", m=" + to_string(m) + ")");
}

} // namespace

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    require_jm_pair(j1, m1, "wigner_3j");
    require_jm_pair(j2, m2, "wigner_3j");
    require_jm_pair(j3, m3, "wigner_3j");

    if ((m1 + m2 + m3).twice() != 0) return 0.0;
    if (j3 > j1 + j2 || j3 < abs(j1 - j2)) return 0.0;
    // With consistent (j,m) pairs and zero m-sum, j1+j2+j3 is automatically an
    // integer, so the triangle test above was exact.

    const int t1 = (j1 + j2 - j3).twice(); // all twice-values, even by now
    const int t2 = (j1 - j2 + j3).twice();
    const int t3 = (-j1 + j2 + j3).twice();

    double pre = std::sqrt(fact2(t1) * fact2(t2) * fact2(t3) / fact2((j1 + j2 + j3).twice() + 2));
    pre *= std::sqrt(fact2((j1 + m1).twice()) * fact2((j1 - m1).twice()) * fact2((j2 + m2).twice()) *
                     fact2((j2 - m2).twice()) * fact2((j3 + m3).twice()) * fact2((j3 - m3).twice()));

    const int a1 = (j1 - m1).twice();
    const int a2 = (j2 + m2).twice();
    const int b1 = (j3 - j2 + m1).twice();
    const int b2 = (j3 - j1 - m2).twice();

    int kmin = std::max({0, -b1, -b2});
    int kmax = std::min({t1, a1, a2});

    double sum = 0.0;
    for (int k = kmin; k <= kmax; k += 2) { // k is a twice-value, step 1 -> 2
        double term = 1.0 / (fact2(k) * fact2(t1 - k) * fact2(a1 - k) * fact2(a2 - k) * fact2(b1 + k) *
                             fact2(b2 + k));
        sum += phase_from_twice(k) * term;
    }

    return phase_from_twice((j1 - j2 - m3).twice()) * pre * sum;
}

double wigner_small_d(HalfInt j, HalfInt m1, HalfInt m2, double theta) {
    require_jm_pair(j, m1, "wigner_small_d");
    require_jm_pair(j, m2, "wigner_small_d");
    if (!m1.integer_spaced_with(m2)) throw ArgumentError("wigner_small_d: m1-m2 is not an integer");

    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);

    const int jm1 = (j + m1).twice(), jn1 = (j - m1).twice();
    const int jm2 = (j + m2).twice(), jn2 = (j - m2).twice();
    const double pre = std::sqrt(fact2(jm1) * fact2(jn1) * fact2(jm2) * fact2(jn2));

    const int diff = (m1 - m2).twice(); // twice (m1 - m2)
    int kmin = std::max(0, -diff);
    int kmax = std::min(jm2, jn1);

    double sum = 0.0;
    for (int k = kmin; k <= kmax; k += 2) {
        const int pc = (2 * j.twice() + (m2 - m1).twice() - 2 * k) / 2; // cos power
        const int ps = (diff + 2 * k) / 2;                              // sin power
        double term = std::pow(c, pc) * std::pow(s, ps) /
                      (fact2(jm2 - k) * fact2(k) * fact2(diff + k) * fact2(jn1 - k));
        sum += phase_from_twice(diff + k) * term;
    }

    return pre * sum;
}

} // namespace casex
