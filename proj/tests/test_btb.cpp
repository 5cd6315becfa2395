#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beanbound/btb_class.hpp"
#include "support/gen.hpp"

using namespace beanbound;

namespace {
Rational R(long long n, long long d = 1) { return Rational(n, d); }
CRational CR(Rational re, Rational im = Rational(0)) { return CRational(re, im); }
} // namespace

TEST_CASE("coeffs_from_c reproduces the extremal coefficient tuples") {
    CarCoeffs<Rational> c;
    c.c1 = R(2);
    c.c2 = R(2);
    c.c3 = R(2);
    c.c4 = R(2);
    auto f = coeffs_from_c(c);
    CHECK(f.a2 == R(1, 4));
    CHECK(f.a3 == R(-1, 24));
    CHECK(f.a4 == R(-5, 192));
    CHECK(*f.a5 == R(17, 1920));
    CHECK(f.source == Provenance::closed_form_from_c);

    c = {R(0), R(2), R(0), R(2)};
    f = coeffs_from_c(c);
    CHECK(f.a2 == R(0));
    CHECK(f.a3 == R(1, 6));
    CHECK(f.a4 == R(0));
    CHECK(*f.a5 == R(-1, 40));

    c = {R(0), R(0), R(2), R(0)};
    f = coeffs_from_c(c);
    CHECK(f.a2 == R(0));
    CHECK(f.a3 == R(0));
    CHECK(f.a4 == R(1, 8));
    CHECK(*f.a5 == R(0));

    c.c4.reset();
    f = coeffs_from_c(c);
    CHECK(!f.a5.has_value());
}

TEST_CASE("from_schwarz pipeline at the monomial witnesses") {
    auto f1 = from_schwarz(TruncatedSeries<Rational>::identity(4));
    CHECK(f1.a2 == R(1, 4));
    CHECK(f1.a3 == R(-1, 24));
    CHECK(f1.a4 == R(-5, 192));
    CHECK(*f1.a5 == R(17, 1920));
    CHECK(f1.source == Provenance::series_pipeline);

    auto ident = from_schwarz(TruncatedSeries<Rational>(4));
    CHECK(ident.a2 == R(0));
    CHECK(ident.a3 == R(0));
    CHECK(ident.a4 == R(0));
    CHECK(*ident.a5 == R(0));

    TruncatedSeries<Rational> bad(4);
    bad.set(0, R(1));
    CHECK_THROWS(from_schwarz(bad));
    TruncatedSeries<Rational> steep(4);
    steep.set(1, R(3, 2));
    CHECK_THROWS(from_schwarz(steep));
}

TEST_CASE("extremal functions and their audit coefficients") {
    auto f1 = extremal(1);
    CHECK(*f1.a5 == R(17, 1920));
    CHECK(f1.extremal_k == 1);

    auto f2 = extremal(2);
    CHECK(f2.a2 == R(0));
    CHECK(f2.a3 == R(1, 6));
    CHECK(*f2.a5 == R(-1, 40));
    REQUIRE(f2.extra_coeffs.size() == 1);
    CHECK(f2.extra_coeffs[0] == std::pair<int, Rational>(7, R(-5, 336)));

    auto f3 = extremal(3);
    CHECK(f3.a4 == R(1, 8));
    CHECK(f3.extra_coeffs[0] == std::pair<int, Rational>(7, R(-1, 56)));

    auto f4 = extremal(4);
    CHECK(*f4.a5 == R(1, 10));
    CHECK(f4.extra_coeffs[0] == std::pair<int, Rational>(9, R(-1, 72)));

    CHECK_THROWS(extremal(5));
    CHECK_THROWS(extremal(0));

    // full series: f3 = z + z^4/8 - z^7/56 with nothing else through order 7
    auto s3 = extremal_series(3, 7);
    CHECK(s3[1] == R(1));
    CHECK(s3[2] == R(0));
    CHECK(s3[3] == R(0));
    CHECK(s3[4] == R(1, 8));
    CHECK(s3[5] == R(0));
    CHECK(s3[6] == R(0));
    CHECK(s3[7] == R(-1, 56));
}

TEST_CASE("inverse_coeffs equals series reversion (oracle) on random tuples") {
    auto ident = BtbFunction<Rational>::raw(R(0), R(0), R(0), R(0));
    auto inv = inverse_coeffs(ident);
    CHECK(inv.A2 == R(0));
    CHECK(inv.A3 == R(0));
    CHECK(inv.A4 == R(0));
    CHECK(*inv.A5 == R(0));

    SplitMix64 g(77);
    for (int rep = 0; rep < 100; ++rep) {
        auto f = BtbFunction<Rational>::raw(
            testgen::small_rational(g), testgen::small_rational(g), testgen::small_rational(g),
            testgen::small_rational(g));
        auto closed = inverse_coeffs(f);
        auto F = revert(f.to_series(5));
        CHECK(closed.A2 == F[2]);
        CHECK(closed.A3 == F[3]);
        CHECK(closed.A4 == F[4]);
        CHECK(*closed.A5 == F[5]);
    }

    auto f1inv = inverse_coeffs(extremal(1));
    CHECK(f1inv.A2 == R(-1, 4));
    CHECK(f1inv.A3 == R(1, 6)); // -a3 + 2 a2^2 = 1/24 + 1/8
}

TEST_CASE("closed-form map equals the series pipeline (Eq-level oracle)") {
    SplitMix64 g(123);
    for (int rep = 0; rep < 40; ++rep) {
        Rational t1 = testgen::unit_rational(g);
        CRational t2 = testgen::disk_crational(g);
        CRational t3 = testgen::disk_crational(g);
        CRational t4 = testgen::disk_crational(g);
        auto c = params_to_coeffs4(t1, t2, t3, t4);
        auto closed = coeffs_from_c(c);

        auto p = p_series_from_coeffs(c, 4);
        auto pipeline = from_schwarz(omega_from_p(p));
        CHECK(closed.a2 == pipeline.a2);
        CHECK(closed.a3 == pipeline.a3);
        CHECK(closed.a4 == pipeline.a4);
        CHECK(*closed.a5 == *pipeline.a5);
    }
}

TEST_CASE("pipeline identity f'(z)^2 = 1 + tanh(omega(z)) holds exactly") {
    SplitMix64 g(321);
    for (int rep = 0; rep < 25; ++rep) {
        TruncatedSeries<Rational> omega(8);
        for (int i = 1; i <= 8; ++i) omega.set(i, testgen::small_rational(g, 3));
        auto f = btb_series_from_schwarz(omega);
        auto fp = derivative(f);
        auto tanh_of_omega = compose(tanh_series<Rational>(8), omega);
        tanh_of_omega.set(0, tanh_of_omega[0] + R(1));
        CHECK(mul(fp, fp) == tanh_of_omega);
    }
}

TEST_CASE("membership proxy |a2| <= 1/4 on sampled class members") {
    for (const auto& p : sample_params(55, 400)) {
        auto c = params_to_coeffs(p.tau1, p.tau2, p.tau3);
        auto f = coeffs_from_c(c);
        CHECK(std::abs(f.a2) <= 0.25 + 1e-12);
    }
}
