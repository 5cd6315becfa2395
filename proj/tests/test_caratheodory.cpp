#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "beanbound/caratheodory.hpp"
#include "support/gen.hpp"

using namespace beanbound;

namespace {
Rational R(long long n, long long d = 1) { return Rational(n, d); }
CRational CR(Rational re, Rational im = Rational(0)) { return CRational(re, im); }
} // namespace

TEST_CASE("params_to_coeffs closed forms at the reference points") {
    // tau1 = 1 collapses everything to the half-plane extreme: all c_n = 2
    auto c = params_to_coeffs(R(1), CR(R(0)), CR(R(0)));
    CHECK(c.c1 == CR(R(2)));
    CHECK(c.c2 == CR(R(2)));
    CHECK(c.c3 == CR(R(2)));

    // (0, 1, anything): p = (1+z^2)/(1-z^2)
    c = params_to_coeffs(R(0), CR(R(1)), CR(R(5, 7)));
    CHECK(c.c1 == CR(R(0)));
    CHECK(c.c2 == CR(R(2)));
    CHECK(c.c3 == CR(R(0)));

    // (1/2, i, 0), exact Gaussian rationals
    c = params_to_coeffs(R(1, 2), CR(R(0), R(1)), CR(R(0)));
    CHECK(c.c1 == CR(R(1)));
    CHECK(c.c2 == CR(R(1, 2), R(3, 2)));
    CHECK(c.c3 == CR(R(1), R(3, 2)));
    CHECK(!c.c4.has_value());
}

TEST_CASE("params_to_coeffs rejects out-of-domain parameters") {
    CHECK_THROWS(params_to_coeffs(R(3, 2), CR(R(0)), CR(R(0))));
    CHECK_THROWS(params_to_coeffs(R(1, 2), CR(R(2)), CR(R(0))));
    CHECK_THROWS(params_to_coeffs(0.5, std::complex<double>(0, 0),
                                  std::complex<double>(1.1, 0)));
}

TEST_CASE("sampled parameters produce Caratheodory-bounded coefficients") {
    auto params = sample_params(2024, 1000);
    REQUIRE(params.size() == 1000);
    for (const auto& p : params) {
        CHECK(p.valid());
        auto c = params_to_coeffs(p.tau1, p.tau2, p.tau3);
        CHECK(std::abs(c.c1) <= 2.0 + 1e-12);
        CHECK(std::abs(c.c2) <= 2.0 + 1e-12);
        CHECK(std::abs(c.c3) <= 2.0 + 1e-12);
    }
}

TEST_CASE("sampler determinism and strata coverage") {
    auto a = sample_params(99, 200);
    auto b = sample_params(99, 200);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].tau1 == b[i].tau1);
        CHECK(a[i].tau2 == b[i].tau2);
        CHECK(a[i].tau3 == b[i].tau3);
    }
    // boundary strata: tau1 = 0, tau1 = 1, |tau2| = 1, |tau3| = 1, and the
    // joint (0, 1, tau3) stratum must all appear
    bool t1_zero = false, t1_one = false, t2_circle = false, t3_circle = false,
         joint = false;
    for (const auto& p : sample_params(7, 1000)) {
        if (p.tau1 == 0.0) t1_zero = true;
        if (p.tau1 == 1.0) t1_one = true;
        if (std::abs(std::norm(p.tau2) - 1.0) < 1e-15) t2_circle = true;
        if (std::abs(std::norm(p.tau3) - 1.0) < 1e-15) t3_circle = true;
        if (p.tau1 == 0.0 && p.tau2 == std::complex<double>(1.0, 0.0)) joint = true;
    }
    CHECK(t1_zero);
    CHECK(t1_one);
    CHECK(t2_circle);
    CHECK(t3_circle);
    CHECK(joint);
    CHECK_THROWS(sample_params(1, 0));
}

TEST_CASE("omega_from_p: Moebius pair and displayed closed forms") {
    // p = (1+z)/(1-z) has c_n = 2 for all n; omega must be exactly z
    TruncatedSeries<Rational> p(6);
    p.set(0, R(1));
    for (int i = 1; i <= 6; ++i) p.set(i, R(2));
    auto w = omega_from_p(p);
    CHECK(w == TruncatedSeries<Rational>::identity(6));

    CHECK(omega_from_p(TruncatedSeries<Rational>::constant(R(1), 5)) ==
          TruncatedSeries<Rational>(5));
    CHECK_THROWS(omega_from_p(TruncatedSeries<Rational>::constant(R(2), 5)));

    // omega coefficients match the displayed expansion in c1..c4
    SplitMix64 g(3);
    for (int rep = 0; rep < 30; ++rep) {
        Rational c1 = testgen::small_rational(g), c2 = testgen::small_rational(g),
                 c3 = testgen::small_rational(g), c4 = testgen::small_rational(g);
        TruncatedSeries<Rational> ps(4);
        ps.set(0, R(1));
        ps.set(1, c1);
        ps.set(2, c2);
        ps.set(3, c3);
        ps.set(4, c4);
        auto om = omega_from_p(ps);
        CHECK(om[1] == c1 / R(2));
        CHECK(om[2] == (c2 - c1 * c1 / R(2)) / R(2));
        CHECK(om[3] == (c3 - c1 * c2 + c1 * c1 * c1 / R(4)) / R(2));
        CHECK(om[4] == (c4 - c1 * c3 + R(3, 4) * c1 * c1 * c2 - c2 * c2 / R(2) -
                        c1 * c1 * c1 * c1 / R(8)) /
                           R(2));
    }
}

TEST_CASE("the unique p for tau2 on the circle reproduces c1, c2") {
    SplitMix64 g(5);
    for (int rep = 0; rep < 40; ++rep) {
        Rational t1 = testgen::unit_rational(g, 16);
        if (t1 == R(0) || t1 == R(1)) t1 = R(1, 2);
        // rational point of the unit circle: ((1-s^2) + 2si)/(1+s^2)
        Rational s = testgen::small_rational(g, 6);
        Rational d = R(1) + s * s;
        CRational t2((R(1) - s * s) / d, R(2) * s / d);
        REQUIRE(t2.norm2() == R(1));

        CRational ct1(t1);
        TruncatedSeries<CRational> num(6), den(6);
        num.set(0, CR(R(1)));
        num.set(1, ct1 * t2 + ct1); // conj(tau1) = tau1, real
        num.set(2, t2);
        den.set(0, CR(R(1)));
        den.set(1, ct1 * t2 - ct1);
        den.set(2, -t2);
        auto p = div(num, den);

        auto c = params_to_coeffs(t1, t2, CR(R(0)));
        CHECK(p[1] == c.c1);
        CHECK(p[2] == c.c2);
    }
}

TEST_CASE("omega has Schwarz-consistent first coefficient on samples") {
    for (const auto& p : sample_params(31, 300)) {
        auto c = params_to_coeffs(p.tau1, p.tau2, p.tau3);
        CHECK(std::abs(c.c1) / 2.0 <= 1.0 + 1e-12); // |omega'(0)| = |c1/2| <= 1
    }
}

TEST_CASE("Schur chain matches the closed-form parametrization and hits the witnesses") {
    SplitMix64 g(9);
    for (int rep = 0; rep < 40; ++rep) {
        Rational t1 = testgen::unit_rational(g);
        CRational t2 = testgen::disk_crational(g);
        CRational t3 = testgen::disk_crational(g);
        CRational t4 = testgen::disk_crational(g);
        auto chain = schur_coeffs(t1, t2, t3, t4);
        auto closed = params_to_coeffs(t1, t2, t3);
        CHECK(chain[0] == closed.c1);
        CHECK(chain[1] == closed.c2);
        CHECK(chain[2] == closed.c3);
    }
    // Schwarz monomials z^k correspond to unit tau at slot k
    auto c = schur_coeffs(R(1), CR(R(0)), CR(R(0)), CR(R(0)));
    CHECK(c == std::array<CRational, 4>{CR(R(2)), CR(R(2)), CR(R(2)), CR(R(2))});
    c = schur_coeffs(R(0), CR(R(1)), CR(R(0)), CR(R(0)));
    CHECK(c == std::array<CRational, 4>{CR(R(0)), CR(R(2)), CR(R(0)), CR(R(2))});
    c = schur_coeffs(R(0), CR(R(0)), CR(R(1)), CR(R(0)));
    CHECK(c == std::array<CRational, 4>{CR(R(0)), CR(R(0)), CR(R(2)), CR(R(0))});
    c = schur_coeffs(R(0), CR(R(0)), CR(R(0)), CR(R(1)));
    CHECK(c == std::array<CRational, 4>{CR(R(0)), CR(R(0)), CR(R(0)), CR(R(2))});
}

TEST_CASE("extremal_p_lower expansions") {
    auto pg = extremal_p_lower(LowerWitnessKind::gamma);
    CHECK(pg[0] == doctest::Approx(1.0));
    CHECK(pg[1] == doctest::Approx(8.0 / std::sqrt(23.0)).epsilon(1e-15));
    CHECK(pg[1] == doctest::Approx(1.66812).epsilon(1e-5));
    CHECK(pg[2] == doctest::Approx(2.0));
    auto pG = extremal_p_lower(LowerWitnessKind::inv_gamma);
    CHECK(pG[1] == doctest::Approx(8.0 / std::sqrt(29.0)).epsilon(1e-15));
    CHECK(pG[1] == doctest::Approx(1.48556).epsilon(1e-5));
    CHECK(pG[2] == doctest::Approx(2.0));
    for (int i = 1; i <= 12; ++i) {
        CHECK(std::fabs(pg[i]) <= 2.0 + 1e-12);
        CHECK(std::fabs(pG[i]) <= 2.0 + 1e-12);
    }
}
