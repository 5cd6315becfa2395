#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "beanbound/functionals.hpp"
#include "support/gen.hpp"

using namespace beanbound;

namespace {
Rational R(long long n, long long d = 1) { return Rational(n, d); }
} // namespace

TEST_CASE("log coefficients at the extremal witnesses") {
    auto g1 = log_coeffs(extremal(1));
    CHECK(g1.g1 == R(1, 8));
    CHECK(g1.g2 == R(-7, 192));
    CHECK(g1.g3 == R(-1, 192));
    CHECK(*g1.g4 == R(503, 92160));

    CHECK(log_coeffs(extremal(2)).g2 == R(1, 12));
    CHECK(log_coeffs(extremal(3)).g3 == R(1, 16));
    CHECK(*log_coeffs(extremal(4)).g4 == R(1, 20));

    auto ident = BtbFunction<Rational>::raw(R(0), R(0), R(0));
    auto gi = log_coeffs(ident);
    CHECK(gi.g1 == R(0));
    CHECK(gi.g2 == R(0));
    CHECK(gi.g3 == R(0));
    CHECK(!gi.g4.has_value());
}

TEST_CASE("inverse log coefficients at the witnesses") {
    auto G1 = inv_log_coeffs(extremal(1));
    CHECK(G1.G1 == R(-1, 8));
    CHECK(G1.G2 == R(13, 192));
    CHECK(G1.G3 == R(-13, 384));

    auto G2 = inv_log_coeffs(extremal(2));
    CHECK(G2.G1 == R(0));
    CHECK(G2.G2 == R(-1, 12));
    CHECK(abs_value(G2.G2) == R(1, 12));

    auto Gi = inv_log_coeffs(BtbFunction<Rational>::raw(R(0), R(0), R(0)));
    CHECK(Gi.G1 == R(0));
    CHECK(Gi.G2 == R(0));
    CHECK(Gi.G3 == R(0));
}

TEST_CASE("closed forms equal the series-definition routes (200 random tuples)") {
    SplitMix64 g(2718);
    for (int rep = 0; rep < 200; ++rep) {
        auto f = BtbFunction<Rational>::raw(
            testgen::small_rational(g), testgen::small_rational(g), testgen::small_rational(g),
            testgen::small_rational(g));
        auto closed = log_coeffs(f);
        auto series = log_coeffs_series(f);
        CHECK(closed.g1 == series.g1);
        CHECK(closed.g2 == series.g2);
        CHECK(closed.g3 == series.g3);
        CHECK(*closed.g4 == *series.g4);

        auto iclosed = inv_log_coeffs(f);
        auto iseries = inv_log_coeffs_series(f);
        CHECK(iclosed.G1 == iseries.G1);
        CHECK(iclosed.G2 == iseries.G2);
        CHECK(iclosed.G3 == iseries.G3);
    }
}

TEST_CASE("hankel determinants: witnesses and c-form routes") {
    CHECK(hankel_log(extremal(2)) == R(-1, 144));
    CHECK(abs_value(hankel_log(extremal(2))) == R(1, 144));
    CHECK(hankel_inv_log(extremal(2)) == R(-1, 144));

    auto ident = BtbFunction<Rational>::raw(R(0), R(0), R(0));
    CHECK(hankel_log(ident) == R(0));
    CHECK(hankel_inv_log(ident) == R(0));

    // tau1 = 1 stratum: c = (2,2,2); the c-form route is exercised through
    // from_c provenance inside hankel_* as well
    CarCoeffs<Rational> c{R(2), R(2), R(2), std::nullopt};
    auto f = coeffs_from_c(c);
    CHECK(abs_value(hankel_log(f)) == R(73, 36864));
    CHECK(abs_value(hankel_inv_log(f)) == R(13, 36864));

    // broken provenance must be detected as a route disagreement
    auto broken = f;
    broken.from_c->c3 = R(1, 7);
    CHECK_THROWS_AS((void)hankel_log(broken), std::logic_error);
}

TEST_CASE("zalcman functional") {
    CHECK(zalcman_23(extremal(3)) == R(-1, 8));
    CHECK(abs_value(zalcman_23(extremal(3))) == R(1, 8));
    CHECK(zalcman_23(extremal(1)) == R(1, 64));
    CHECK(zalcman_23(BtbFunction<Rational>::raw(R(0), R(0), R(0))) == R(0));
}

TEST_CASE("moduli differences at witnesses") {
    CHECK(moduli_diff(ModuliKind::gamma, extremal(2)) == R(1, 12));
    CHECK(moduli_diff(ModuliKind::inv_gamma, extremal(2)) == R(1, 12));

    // lower-bound witnesses, via the float pipeline from the stated p
    auto fg = from_schwarz(omega_from_p(extremal_p_lower(LowerWitnessKind::gamma)));
    CHECK(moduli_diff(ModuliKind::gamma, fg) ==
          doctest::Approx(-1.0 / (2.0 * std::sqrt(23.0))).epsilon(1e-12));
    CHECK(moduli_diff(ModuliKind::gamma, fg) == doctest::Approx(-0.104257).epsilon(1e-5));

    auto fG = from_schwarz(omega_from_p(extremal_p_lower(LowerWitnessKind::inv_gamma)));
    CHECK(moduli_diff(ModuliKind::inv_gamma, fG) ==
          doctest::Approx(-1.0 / (2.0 * std::sqrt(29.0))).epsilon(1e-12));
    CHECK(moduli_diff(ModuliKind::inv_gamma, fG) == doctest::Approx(-0.092848).epsilon(1e-5));
}

TEST_CASE("gamma2 and Gamma2 reduce to the c-quadratics") {
    SplitMix64 g(31415);
    for (int rep = 0; rep < 50; ++rep) {
        CarCoeffs<Rational> c;
        c.c1 = testgen::small_rational(g);
        c.c2 = testgen::small_rational(g);
        c.c3 = testgen::small_rational(g);
        auto f = coeffs_from_c(c);
        CHECK(log_coeffs(f).g2 == (c.c2 - R(23, 32) * c.c1 * c.c1) / R(24));
        CHECK(inv_log_coeffs(f).G2 == -(c.c2 - R(29, 32) * c.c1 * c.c1) / R(24));
    }
}

TEST_CASE("rotation acts on the hankel determinants as e^{4 i theta}") {
    using C = std::complex<double>;
    SplitMix64 g(999);
    for (int rep = 0; rep < 20; ++rep) {
        auto f = BtbFunction<C>::raw(C(g.next_unit() - 0.5, g.next_unit() - 0.5),
                                     C(g.next_unit() - 0.5, g.next_unit() - 0.5),
                                     C(g.next_unit() - 0.5, g.next_unit() - 0.5));
        const C h = hankel_log(f);
        const C hi = hankel_inv_log(f);
        for (double theta : {0.3, 1.1, 2.9, 4.4}) {
            const C r1 = std::polar(1.0, theta), r2 = std::polar(1.0, 2 * theta),
                    r3 = std::polar(1.0, 3 * theta);
            auto rot = BtbFunction<C>::raw(f.a2 * r1, f.a3 * r2, f.a4 * r3);
            const C hr = hankel_log(rot);
            const C hir = hankel_inv_log(rot);
            const C phase = std::polar(1.0, 4 * theta);
            CHECK(std::abs(hr - phase * h) <= 1e-14);
            CHECK(std::abs(hir - phase * hi) <= 1e-14);
            CHECK(std::abs(std::abs(hr) - std::abs(h)) <= 1e-14);
            CHECK(std::abs(std::abs(hir) - std::abs(hi)) <= 1e-14);
        }
    }
}

TEST_CASE("gamma4 is reported unavailable without c4") {
    CarCoeffs<Rational> c{R(1), R(1, 2), R(1, 3), std::nullopt};
    auto f = coeffs_from_c(c);
    CHECK(!log_coeffs(f).g4.has_value());
    CHECK_THROWS_AS((void)functional_value(FunctionalId::gamma4, f), std::invalid_argument);
    // and available once c4 is supplied
    c.c4 = R(1, 5);
    CHECK(log_coeffs(coeffs_from_c(c)).g4.has_value());
}

TEST_CASE("functional_value dispatch matches the direct calls") {
    auto f2 = extremal(2);
    CHECK(functional_value(FunctionalId::gamma2, f2) == doctest::Approx(1.0 / 12).epsilon(1e-15));
    CHECK(functional_value(FunctionalId::hankel_log, f2) ==
          doctest::Approx(1.0 / 144).epsilon(1e-15));
    CHECK(functional_value(FunctionalId::gamma_diff, f2) ==
          doctest::Approx(1.0 / 12).epsilon(1e-15));
    CHECK(functional_value(FunctionalId::zalcman23, extremal(3)) ==
          doctest::Approx(0.125).epsilon(1e-15));
}
