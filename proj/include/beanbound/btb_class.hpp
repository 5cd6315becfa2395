#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "beanbound/caratheodory.hpp"
#include "beanbound/series.hpp"

namespace beanbound {

enum class Provenance { closed_form_from_c, series_pipeline, extremal, unverified };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::closed_form_from_c: return "closed-form-from-c";
        case Provenance::series_pipeline: return "series-pipeline";
        case Provenance::extremal: return "extremal";
        case Provenance::unverified: return "unverified-membership";
    }
    return "?";
}

/// Taylor data a2..a5 of a class member f(z) = z + a2 z^2 + ... together with
/// how it was produced. a5 is optional: it needs c4, which the three-parameter
/// representation does not determine.
template <class C>
struct BtbFunction {
    C a2{}, a3{}, a4{};
    std::optional<C> a5;
    Provenance source = Provenance::unverified;
    int extremal_k = 0;                       // set when source == extremal
    std::optional<CarCoeffs<C>> from_c;       // set when built from c's
    std::vector<std::pair<int, C>> extra_coeffs; // audit coefficients beyond a5

    static BtbFunction raw(C a2, C a3, C a4, std::optional<C> a5 = std::nullopt) {
        BtbFunction f;
        f.a2 = std::move(a2);
        f.a3 = std::move(a3);
        f.a4 = std::move(a4);
        f.a5 = std::move(a5);
        return f;
    }

    /// f as a truncated series z + a2 z^2 + ... (zero beyond known data).
    TruncatedSeries<C> to_series(int order) const {
        TruncatedSeries<C> s(order);
        if (order >= 1) s.set(1, field_traits<C>::from_int(1));
        if (order >= 2) s.set(2, a2);
        if (order >= 3) s.set(3, a3);
        if (order >= 4) s.set(4, a4);
        if (order >= 5 && a5) s.set(5, *a5);
        for (const auto& [idx, v] : extra_coeffs)
            if (idx <= order) s.set(idx, v);
        return s;
    }
};

/// Coefficient maps from Caratheodory data:
///   a2 = c1/8
///   a3 = c2/12 - 5 c1^2/96
///   a4 = c3/16 - 5 c1 c2/64 + 31 c1^3/1536
///   a5 = c4/20 - c1 c3/16 - c2^2/32 + 31 c1^2 c2/640 - 199 c1^4/30720
/// The a5 row is pinned to the series pipeline: expanding
/// sqrt(1 + tanh(omega(z))) with omega = (p-1)/(p+1) gives exactly these
/// weights (the oracle-equivalence tests enforce the match term by term).
template <class C>
BtbFunction<C> coeffs_from_c(const CarCoeffs<C>& c) {
    auto q = [](long long n, long long d) {
        return field_traits<C>::from_int(n) / field_traits<C>::from_int(d);
    };
    BtbFunction<C> f;
    const C c1 = c.c1, c2 = c.c2, c3 = c.c3;
    f.a2 = q(1, 8) * c1;
    f.a3 = q(1, 12) * c2 - q(5, 96) * c1 * c1;
    f.a4 = q(1, 16) * c3 - q(5, 64) * c1 * c2 + q(31, 1536) * c1 * c1 * c1;
    if (c.c4) {
        const C c4 = *c.c4;
        f.a5 = q(1, 20) * c4 - q(1, 16) * c1 * c3 - q(1, 32) * c2 * c2 +
               q(31, 640) * c1 * c1 * c2 - q(199, 30720) * c1 * c1 * c1 * c1;
    }
    f.source = Provenance::closed_form_from_c;
    f.from_c = c;
    return f;
}

/// The generator series sqrt(1 + tanh u) truncated at `order`.
template <class C>
TruncatedSeries<C> generator_series(int order) {
    TruncatedSeries<C> one_plus_tanh = tanh_series<C>(order);
    one_plus_tanh.set(0, field_traits<C>::from_int(1));
    return sqrt_unit(one_plus_tanh);
}

/// Full pipeline f = integral of sqrt(1 + tanh omega(t)) dt as a series of
/// order omega.order() + 1.
template <class C>
TruncatedSeries<C> btb_series_from_schwarz(const TruncatedSeries<C>& omega) {
    if (!(omega[0] == field_traits<C>::from_int(0)))
        throw std::invalid_argument("from_schwarz: omega must vanish at 0");
    return integrate(compose(generator_series<C>(omega.order()), omega));
}

template <class C>
BtbFunction<C> from_schwarz(const TruncatedSeries<C>& omega) {
    if (omega.order() >= 1) {
        if constexpr (field_traits<C>::exact) {
            if (sqabs(omega[1]) > Rational(1))
                throw std::invalid_argument("from_schwarz: |omega'(0)| must be <= 1");
        } else {
            if (!(sqabs(omega[1]) <= 1.0 + 1e-12))
                throw std::invalid_argument("from_schwarz: |omega'(0)| must be <= 1");
        }
    }
    TruncatedSeries<C> f = btb_series_from_schwarz(omega);
    BtbFunction<C> out;
    out.a2 = f.order() >= 2 ? f[2] : field_traits<C>::from_int(0);
    out.a3 = f.order() >= 3 ? f[3] : field_traits<C>::from_int(0);
    out.a4 = f.order() >= 4 ? f[4] : field_traits<C>::from_int(0);
    if (f.order() >= 5) out.a5 = f[5];
    out.source = Provenance::series_pipeline;
    return out;
}

/// Exact Taylor series of the extremal function f_k (Schwarz function z^k).
TruncatedSeries<Rational> extremal_series(int k, int order);

/// Extremal function f_k with exact rational coefficients; k in 1..4.
/// Instances with sparse spectra also record their first nonzero tail
/// coefficient (a7 for k = 2, 3; a9 for k = 4) for audit.
BtbFunction<Rational> extremal(int k);

template <class C>
struct InverseCoeffs {
    C A2{}, A3{}, A4{};
    std::optional<C> A5;
};

/// Closed-form inverse coefficients:
///   A2 = -a2, A3 = -a3 + 2 a2^2, A4 = -a4 + 5 a2 a3 - 5 a2^3,
///   A5 = -a5 + 6 a4 a2 - 21 a3 a2^2 + 3 a3^2 + 14 a2^4.
template <class C>
InverseCoeffs<C> inverse_coeffs(const BtbFunction<C>& f) {
    auto n = [](long long v) { return field_traits<C>::from_int(v); };
    InverseCoeffs<C> r;
    const C a2 = f.a2, a3 = f.a3, a4 = f.a4;
    r.A2 = -a2;
    r.A3 = -a3 + n(2) * a2 * a2;
    r.A4 = -a4 + n(5) * a2 * a3 - n(5) * a2 * a2 * a2;
    if (f.a5) {
        const C a5 = *f.a5;
        r.A5 = -a5 + n(6) * a4 * a2 - n(21) * a3 * a2 * a2 + n(3) * a3 * a3 +
               n(14) * a2 * a2 * a2 * a2;
    }
    return r;
}

} // namespace beanbound
