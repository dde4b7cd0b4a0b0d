#include <doctest.h>

#include <cmath>
#include <vector>

#include "casex/errors.hpp"
#include "casex/half_int.hpp"
#include "casex/wigner.hpp"

using namespace casex;

namespace {

// Independent oracle: (j 1 j; -m 0 m) = (-1)^{j-m} m / sqrt(j(j+1)(2j+1)).
double closed_form_3j_j1j(HalfInt j, HalfInt m) {
    double jj = j.value(), mm = m.value();
    double sign = ((j - m).twice() / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * mm / std::sqrt(jj * (jj + 1) * (2 * jj + 1));
}

// Independent oracle: the spin-1/2 rotation matrix in half-angle form.
double spin_half_d(HalfInt m1, HalfInt m2, double theta) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    if (m1.twice() == 1 && m2.twice() == 1) return c;
    if (m1.twice() == 1 && m2.twice() == -1) return -s;
    if (m1.twice() == -1 && m2.twice() == 1) return s;
    return c;
}

const std::vector<double> kThetaGrid = {0.0, 0.17, 0.5, 1.0, M_PI / 2, 2.0, 2.9, M_PI};

} // namespace

TEST_CASE("HalfInt arithmetic is exact") {
    HalfInt j = halves(3); // 3/2
    CHECK(j.value() == 1.5);
    CHECK(to_string(j) == "3/2");
    CHECK(to_string(HalfInt(2)) == "2");
    CHECK((j + j).value() == 3.0);
    CHECK((j - halves(1)).twice() == 2);
    CHECK(-j == halves(-3));
    CHECK(abs(halves(-5)) == halves(5));
    CHECK(j.integer_spaced_with(halves(-1)));
    CHECK(!j.integer_spaced_with(HalfInt(1)));
    CHECK(halves(4).is_integer());
    CHECK(!j.is_integer());

    CHECK(parse_half_int("3/2") == halves(3));
    CHECK(parse_half_int("-1/2") == halves(-1));
    CHECK(parse_half_int("2") == HalfInt(2));
    CHECK(parse_half_int("-4") == HalfInt(-4));
    CHECK_THROWS_AS(parse_half_int("1.5"), ArgumentError);
    CHECK_THROWS_AS(parse_half_int("4/2"), ArgumentError);
    CHECK_THROWS_AS(parse_half_int("3/4"), ArgumentError);
    CHECK_THROWS_AS(parse_half_int(""), ArgumentError);
}

TEST_CASE("wigner_3j matches the (j 1 j) closed form") {
    // frozen from the closed form: 1/sqrt(6), 1.5/sqrt(15)
    CHECK(wigner_3j(halves(1), 1, halves(1), halves(-1), 0, halves(1)) ==
          doctest::Approx(0.408248290463863).epsilon(1e-14));
    CHECK(wigner_3j(halves(3), 1, halves(3), halves(-3), 0, halves(3)) ==
          doctest::Approx(0.38729833462074165).epsilon(1e-14));

    for (int tj = 1; tj <= 9; ++tj) {
        HalfInt j = halves(tj);
        for (int tm = -tj; tm <= tj; tm += 2) {
            HalfInt m = halves(tm);
            CHECK(wigner_3j(j, 1, j, -m, 0, m) == doctest::Approx(closed_form_3j_j1j(j, m)).epsilon(1e-13));
        }
    }
}

TEST_CASE("wigner_3j selection rules give exact zeros") {
    CHECK(wigner_3j(1, 1, 1, 0, 0, 0) == 0.0); // odd j-sum, all m zero
    CHECK(wigner_3j(1, 1, 3, 0, 0, 0) == 0.0); // triangle violated
    CHECK(wigner_3j(halves(1), halves(1), 2, halves(1), halves(-1), 0) == 0.0);
    CHECK(wigner_3j(1, 1, 2, 1, 1, -1) == 0.0); // m-sum nonzero
}

TEST_CASE("wigner_3j argument validation") {
    CHECK_THROWS_AS(wigner_3j(HalfInt(-1), 1, 1, 0, 0, 0), ArgumentError);
    CHECK_THROWS_AS(wigner_3j(halves(1), 1, halves(1), 0, 0, 0), ArgumentError); // j-m not integer
    CHECK_THROWS_AS(wigner_3j(1, 1, 2, 2, -1, -1), ArgumentError);               // |m| > j
    CHECK_THROWS_AS(wigner_3j(40, 40, 40, 0, 0, 0), RangeError);                 // beyond factorial cap
}

TEST_CASE("wigner_3j column swap flips sign with (-1)^(j1+j2+j3)") {
    for (int tj1 = 0; tj1 <= 6; tj1 += 2)
        for (int tj2 = 0; tj2 <= 6; tj2 += 2)
            for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2) {
                HalfInt j1 = halves(tj1), j2 = halves(tj2), j3 = halves(tj3);
                double sign = ((tj1 + tj2 + tj3) / 2) % 2 == 0 ? 1.0 : -1.0;
                for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                        HalfInt m1 = halves(tm1), m2 = halves(tm2), m3 = -(m1 + m2);
                        if (abs(m3) > j3) continue;
                        double a = wigner_3j(j1, j2, j3, m1, m2, m3);
                        CHECK(wigner_3j(j2, j1, j3, m2, m1, m3) == doctest::Approx(sign * a).epsilon(1e-12));
                        CHECK(wigner_3j(j1, j3, j2, m1, m3, m2) == doctest::Approx(sign * a).epsilon(1e-12));
                    }
            }
}

TEST_CASE("wigner_3j orthogonality sums to one") {
    for (int tj1 = 1; tj1 <= 6; ++tj1)
        for (int tj2 = 0; tj2 <= 6; ++tj2)
            for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2) {
                HalfInt j1 = halves(tj1), j2 = halves(tj2), j3 = halves(tj3);
                for (int tm3 = -tj3; tm3 <= tj3; tm3 += 2) {
                    HalfInt m3 = halves(tm3);
                    double sum = 0;
                    for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                        HalfInt m1 = halves(tm1), m2 = -m3 - m1;
                        if (abs(m2) > j2) continue;
                        double w = wigner_3j(j1, j2, j3, m1, m2, m3);
                        sum += (tj3 + 1) * w * w;
                    }
                    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
                }
            }
}

TEST_CASE("wigner_small_d identity, known values, and the spin-1/2 oracle") {
    for (int tj = 0; tj <= 8; ++tj)
        for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
            for (int tm2 = -tj; tm2 <= tj; tm2 += 2) {
                double d = wigner_small_d(halves(tj), halves(tm1), halves(tm2), 0.0);
                CHECK(d == doctest::Approx(tm1 == tm2 ? 1.0 : 0.0).epsilon(1e-15));
            }

    CHECK(wigner_small_d(1, 0, 0, M_PI / 3) == doctest::Approx(0.5).epsilon(1e-14)); // cos(theta)
    CHECK(wigner_small_d(halves(1), halves(1), halves(1), M_PI / 2) ==
          doctest::Approx(std::cos(M_PI / 4)).epsilon(1e-14));

    for (double th : kThetaGrid)
        for (int tm1 = -1; tm1 <= 1; tm1 += 2)
            for (int tm2 = -1; tm2 <= 1; tm2 += 2)
                CHECK(wigner_small_d(halves(1), halves(tm1), halves(tm2), th) ==
                      doctest::Approx(spin_half_d(halves(tm1), halves(tm2), th)).epsilon(1e-14));
}

TEST_CASE("wigner_small_d rows are orthonormal for j <= 4") {
    for (int tj = 0; tj <= 8; ++tj) {
        HalfInt j = halves(tj);
        for (double th : kThetaGrid)
            for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
                for (int tm2 = tm1; tm2 <= tj; tm2 += 2) {
                    double sum = 0;
                    for (int tm = -tj; tm <= tj; tm += 2)
                        sum += wigner_small_d(j, halves(tm), halves(tm1), th) *
                               wigner_small_d(j, halves(tm), halves(tm2), th);
                    CHECK(std::abs(sum - (tm1 == tm2 ? 1.0 : 0.0)) < 1e-12);
                }
    }
}

TEST_CASE("wigner_small_d transpose symmetry under theta -> -theta") {
    for (int tj = 1; tj <= 7; tj += 2)
        for (double th : kThetaGrid)
            for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
                for (int tm2 = -tj; tm2 <= tj; tm2 += 2)
                    CHECK(std::abs(wigner_small_d(halves(tj), halves(tm1), halves(tm2), -th) -
                                   wigner_small_d(halves(tj), halves(tm2), halves(tm1), th)) < 1e-12);
}

TEST_CASE("wigner_small_d pi rotation maps m -> -m with phase (-1)^(j-m2)") {
    for (int tj = 0; tj <= 8; ++tj)
        for (int tm1 = -tj; tm1 <= tj; tm1 += 2)
            for (int tm2 = -tj; tm2 <= tj; tm2 += 2) {
                double expect = 0.0;
                if (tm1 == -tm2) expect = ((tj - tm2) / 2) % 2 == 0 ? 1.0 : -1.0;
                CHECK(std::abs(wigner_small_d(halves(tj), halves(tm1), halves(tm2), M_PI) - expect) <
                      1e-12);
            }
}

TEST_CASE("wigner_small_d argument validation") {
    CHECK_THROWS_AS(wigner_small_d(1, 2, 0, 0.3), ArgumentError);
    CHECK_THROWS_AS(wigner_small_d(halves(3), HalfInt(1), halves(1), 0.3), ArgumentError);
    CHECK_THROWS_AS(wigner_small_d(HalfInt(-2), 0, 0, 0.3), ArgumentError);
}
