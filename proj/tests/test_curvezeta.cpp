#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbint/curve.hpp"

using namespace orbint;

namespace {

using RPoly = Poly<Rat>;
using RFrac = RatFunc<Rat>;

Curve p1(long q) { return curve_from_counts(q, 0, {}); }
Curve elliptic_q2() { return curve_from_counts(2, 1, {3}); }

}  // namespace

TEST_CASE("construction from point counts") {
    Curve c = p1(2);
    CHECK(c.numerator == RPoly(Rat(1)));

    /* elliptic over F_2 with 3 points: P = 1 + 2t^2 */
    Curve e = elliptic_q2();
    CHECK(e.numerator == RPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(2)}));

    /* elliptic over F_3 with 7 points: P = 1 + 3t + 3t^2 */
    Curve e3 = curve_from_counts(3, 1, {7});
    CHECK(e3.numerator == RPoly(std::vector<Rat>{Rat(1), Rat(3), Rat(3)}));

    /* a genus-2 curve: counts pin p_1, p_2 and the tail is completed */
    Curve g2 = curve_from_counts(2, 2, {4, 8});
    CHECK(g2.numerator.at(0) == 1);
    CHECK(g2.numerator.deg() <= 4);
    g2.validate();

    CHECK_THROWS_AS(curve_from_counts(2, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(curve_from_counts(1, 0, {}), std::invalid_argument);
}

TEST_CASE("functional equation gate") {
    /* accepted: explicit numerator with a = 1 over F_2 */
    Curve ok = curve_from_numerator(2, 1, RPoly(std::vector<Rat>{Rat(1), Rat(-1), Rat(2)}));
    CHECK(zeta_at(ok, Rat(0)) == Rat(1));

    /* rejected: corrupted coefficient breaks the functional equation */
    CHECK_THROWS_AS(curve_from_numerator(2, 1, RPoly(std::vector<Rat>{Rat(1), Rat(-1), Rat(3)})),
                    std::invalid_argument);
    /* rejected: P(0) != 1 */
    CHECK_THROWS_AS(curve_from_numerator(2, 0, RPoly(Rat(2))), std::invalid_argument);
    /* rejected: degree exceeds 2g */
    CHECK_THROWS_AS(curve_from_numerator(2, 0, RPoly(std::vector<Rat>{Rat(1), Rat(1)})),
                    std::invalid_argument);
}

TEST_CASE("zeta evaluation") {
    Curve c = p1(2);
    CHECK(zeta_at(c, rat(1, 4)) == rat(8, 3));
    CHECK(zeta_star_at(c, rat(1, 2)) == Rat(2));
    CHECK_THROWS_AS(zeta_at(c, Rat(1)), std::domain_error);
    CHECK_THROWS_AS(zeta_at(c, rat(1, 2)), std::domain_error);

    /* composition with the identity argument reproduces Z_C(X) */
    RFrac z = zeta_eval(c, RFrac::X());
    RPoly one(Rat(1));
    CHECK(z == RFrac(one, (one - RPoly::X()) * (one - Rat(2) * RPoly::X())));

    /* elliptic: |Pic0| = P(1) = 3 */
    CHECK(elliptic_q2().numerator.eval(Rat(1)) == Rat(3));
}

TEST_CASE("block zeta products") {
    Curve c = p1(2);
    /* d=1, degD=1, arg=X: X^{-1} / ((1 - X/2)(1 - X)) */
    RFrac f = z_dD(c, 1, 1, Rat(1), 1);
    RPoly one(Rat(1));
    RFrac expect = RFrac(one, RPoly::X()) /
                   RFrac((one - rat(1, 2) * RPoly::X()) * (one - RPoly::X()));
    CHECK(f == expect);

    /* d=1, degD=0, arg=X equals Z_C(X/q) */
    CHECK(z_dD(c, 1, 0, Rat(1), 1) == zeta_eval(c, RFrac::monomial(rat(1, 2), 1)));

    CHECK_THROWS_AS(z_dD(c, 1, 0, Rat(0), 1), std::domain_error);

    /* poles of X^{d degD} z_dD only at X in {1, q, ..., q^d} */
    for (const Curve& cc : {p1(2), p1(3), elliptic_q2()})
        for (int d = 1; d <= 3; d++)
            for (long degD : {-1l, 0l, 2l}) {
                RFrac g = z_dD(cc, d, degD, Rat(1), 1) * RFrac::monomial(Rat(1), d * degD);
                RPoly den = g.den;
                for (int j = 0; j <= d; j++) {
                    RPoly lin = RPoly::X() - RPoly(rat_pow(Rat(cc.q), j));
                    for (;;) {
                        auto [quot, rem] = divmod(den, lin);
                        if (!rem.is_zero())
                            break;
                        den = quot;
                    }
                }
                CHECK(den.deg() == 0);
            }
}

TEST_CASE("ztilde and volumes") {
    Curve c2 = p1(2), c3 = p1(3);
    /* P^1, q=2, d=1: Ztilde(0) = 1 */
    CHECK(ztilde_dD(c2, 1, 0).eval(Rat(1)) == Rat(1));
    CHECK(vol_gl(c2, 1) == Rat(1));
    CHECK(vol_gl(c2, 2) == rat(1, 3));
    CHECK(vol_gl(elliptic_q2(), 1) == Rat(3));

    /* vol_gl(C,1) = P(1)/(q-1) for every sample curve */
    for (const Curve& c : {c2, c3, elliptic_q2(), curve_from_counts(3, 1, {7})})
        CHECK(vol_gl(c, 1) == c.numerator.eval(Rat(1)) / Rat(c.q - 1));

    /* Ztilde(0) is independent of degD and equals vol_gl */
    for (const Curve& c : {c2, c3, elliptic_q2()})
        for (int d = 1; d <= 3; d++) {
            Rat v = vol_gl(c, d);
            for (long degD : {-1l, 0l, 1l, 3l})
                CHECK(ztilde_dD(c, d, degD).eval(Rat(1)) == v);
        }

    CHECK_THROWS_AS(vol_gl(c2, 0), std::invalid_argument);
}

TEST_CASE("series coefficients") {
    Curve c2 = p1(2);
    /* d=1, P^1, degD=0: the series is Z_C(y/2) = 1/((1-y)(1-y/2)), with
     * partial fractions 2/(1-y) - 1/(1-y/2): coefficients 2 - (1/2)^k,
     * nonnegative and eventually constant */
    auto s = series_coeffs_ZdD(c2, 1, 0, 20);
    REQUIRE(s.size() == 20);
    for (size_t k = 0; k < s.size(); k++)
        CHECK(s[k] == Rat(2) - rat_pow(rat(1, 2), (long)k));

    /* nonnegativity for d <= 2 on both sample curves, several degD */
    for (const Curve& c : {c2, elliptic_q2()})
        for (int d = 1; d <= 2; d++)
            for (long degD : {-1l, 0l, 1l}) {
                auto coeffs = series_coeffs_ZdD(c, d, degD, 20);
                for (const auto& x : coeffs)
                    CHECK(x >= 0);
            }

    /* consistency with ztilde: the closed form says the series times
     * (1-y) q^{d^2(g-1-degD)} is the expansion of y^{d degD} Ztilde */
    for (const Curve& c : {c2, elliptic_q2()})
        for (int d = 1; d <= 2; d++) {
            long degD = 2;
            size_t T = 16;
            auto a = series_coeffs_ZdD(c, d, degD, T);
            RFrac zt = ztilde_dD(c, d, degD) * RFrac::monomial(Rat(1), (long)d * degD);
            auto b = zt.series_expand(T);
            Rat scale = rat_pow(Rat(c.q), (long)d * d * (c.genus - 1 - degD));
            for (size_t k = 0; k < T; k++) {
                Rat conv = a[k] - (k ? a[k - 1] : Rat(0)); /* (1-y) * series */
                CHECK(b[k] == scale * conv);
            }
        }
}
