#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "beanbound/series.hpp"

namespace beanbound {

inline Rational sqabs(const Rational& v) { return v * v; }
inline Rational sqabs(const CRational& v) { return v.norm2(); }
inline double sqabs(double v) { return v * v; }
inline double sqabs(const std::complex<double>& v) { return std::norm(v); }

/// First Caratheodory coefficients of a positive-real-part function
/// p(z) = 1 + c1 z + c2 z^2 + ...; every |c_n| <= 2. c4 is optional because
/// the three-parameter representation determines only c1..c3.
template <class C>
struct CarCoeffs {
    C c1{}, c2{}, c3{};
    std::optional<C> c4;
};

/// Parameters (tau1, tau2, tau3) of the Caratheodory representation with
/// tau1 in [0,1] real and tau2, tau3 in the closed unit disk. tau4 extends
/// the chain one more step and pins c4; it is used by searches that need a5.
struct SchwarzParams {
    double tau1 = 0.0;
    std::complex<double> tau2{0.0, 0.0};
    std::complex<double> tau3{0.0, 0.0};
    std::optional<std::complex<double>> tau4;

    bool valid(double tol = 1e-12) const {
        return tau1 >= -tol && tau1 <= 1.0 + tol && std::norm(tau2) <= 1.0 + tol &&
               std::norm(tau3) <= 1.0 + tol &&
               (!tau4 || std::norm(*tau4) <= 1.0 + tol);
    }
};

namespace detail {
template <class R>
void check_unit_interval(const R& t);
inline void check_unit_interval(const Rational& t) {
    if (t < Rational(0) || t > Rational(1))
        throw std::invalid_argument("tau1 must lie in [0,1]");
}
inline void check_unit_interval(double t) {
    if (!(t >= -1e-12 && t <= 1.0 + 1e-12))
        throw std::invalid_argument("tau1 must lie in [0,1]");
}
template <class C>
void check_unit_disk(const C& t, const char* name) {
    if constexpr (field_traits<C>::exact) {
        if (sqabs(t) > Rational(1)) throw std::invalid_argument(std::string(name) + " must lie in the closed unit disk");
    } else {
        if (!(sqabs(t) <= 1.0 + 1e-12))
            throw std::invalid_argument(std::string(name) + " must lie in the closed unit disk");
    }
}
} // namespace detail

/// Closed-form c1..c3 of the three-parameter Caratheodory representation:
///   c1 = 2 t1
///   c2 = 2 t1^2 + 2 (1 - t1^2) t2
///   c3 = 2 t1^3 + 4 (1 - t1^2) t1 t2 - 2 (1 - t1^2) t1 t2^2
///        + 2 (1 - t1^2)(1 - |t2|^2) t3
template <class R, class C>
CarCoeffs<C> params_to_coeffs(const R& tau1, const C& tau2, const C& tau3) {
    detail::check_unit_interval(tau1);
    detail::check_unit_disk(tau2, "tau2");
    detail::check_unit_disk(tau3, "tau3");
    const C one = field_traits<C>::from_int(1);
    const C two = field_traits<C>::from_int(2);
    const C t1{tau1};
    const C u = one - t1 * t1; // 1 - tau1^2
    CarCoeffs<C> c;
    c.c1 = two * t1;
    c.c2 = two * t1 * t1 + two * u * tau2;
    c.c3 = two * t1 * t1 * t1 + two * two * u * t1 * tau2 - two * u * t1 * tau2 * tau2 +
           two * u * (one - C{sqabs(tau2)}) * tau3;
    return c;
}

/// c1..c4 from the Schur-parameter chain
///   g_3 = tau4,   g_k = (tau_{k+1} + z g_{k+1}) / (1 + conj(tau_{k+1}) z g_{k+1})
///   omega = z g_0,  p = (1 + omega)/(1 - omega).
/// Every tau in the closed unit disk yields a genuine positive-real-part
/// coefficient tuple, and c1..c3 agree with params_to_coeffs identically.
template <class R, class C>
std::array<C, 4> schur_coeffs(const R& tau1, const C& tau2, const C& tau3, const C& tau4) {
    detail::check_unit_interval(tau1);
    detail::check_unit_disk(tau2, "tau2");
    detail::check_unit_disk(tau3, "tau3");
    detail::check_unit_disk(tau4, "tau4");
    constexpr int n = 4;
    using S = TruncatedSeries<C>;
    const C one = field_traits<C>::from_int(1);
    auto shift = [](const S& a) { // z * a, truncated
        S out(n);
        for (int i = 0; i + 1 <= n; ++i) out.set(i + 1, a[i]);
        return out;
    };
    S g = S::constant(tau4, n);
    const C taus[3] = {tau3, tau2, C{tau1}};
    for (const C& t : taus) {
        S zg = shift(g);
        S num = zg;
        num.set(0, num[0] + t);
        S den = scale(field_traits<C>::conj(t), zg);
        den.set(0, den[0] + one);
        g = div(num, den);
    }
    S omega = shift(g);
    S p_plus = omega, p_minus = scale(field_traits<C>::from_int(-1), omega);
    p_plus.set(0, p_plus[0] + one);
    p_minus.set(0, p_minus[0] + one);
    S p = div(p_plus, p_minus);
    return {p[1], p[2], p[3], p[4]};
}

/// params_to_coeffs extended with c4 from the Schur chain.
template <class R, class C>
CarCoeffs<C> params_to_coeffs4(const R& tau1, const C& tau2, const C& tau3, const C& tau4) {
    CarCoeffs<C> c = params_to_coeffs(tau1, tau2, tau3);
    c.c4 = schur_coeffs(tau1, tau2, tau3, tau4)[3];
    return c;
}

/// Schwarz series omega = (p - 1)/(p + 1) of a positive-real-part series.
template <class C>
TruncatedSeries<C> omega_from_p(const TruncatedSeries<C>& p_series) {
    if (!(p_series[0] == field_traits<C>::from_int(1)))
        throw std::invalid_argument("omega_from_p: p must have constant term 1");
    TruncatedSeries<C> num = p_series, den = p_series;
    num.set(0, num[0] - field_traits<C>::from_int(1));
    den.set(0, den[0] + field_traits<C>::from_int(1));
    return div(num, den);
}

/// p series with coefficients c1..c4 (missing c4 treated as 0 beyond order 3).
template <class C>
TruncatedSeries<C> p_series_from_coeffs(const CarCoeffs<C>& c, int order) {
    TruncatedSeries<C> p(order);
    p.set(0, field_traits<C>::from_int(1));
    if (order >= 1) p.set(1, c.c1);
    if (order >= 2) p.set(2, c.c2);
    if (order >= 3) p.set(3, c.c3);
    if (order >= 4 && c.c4) p.set(4, *c.c4);
    return p;
}

enum class LowerWitnessKind { gamma, inv_gamma };

/// Expansion of p(z) = (1 + q z + z^2)/(1 - z^2) with q = 8/sqrt(23)
/// (gamma case) or q = 8/sqrt(29) (inverse case): the lower-bound witnesses
/// for the moduli-difference theorems.
TruncatedSeries<double> extremal_p_lower(LowerWitnessKind kind, int order = 12);

/// Deterministic parameter samples. tau1 uniform on [0,1]; tau2, tau3
/// area-uniform on the closed disk. Every 10th sample is pinned to a
/// boundary stratum (tau1 in {0,1}, |tau2| = 1, |tau3| = 1 and two joint
/// strata) because the extremizers sit on strata.
std::vector<SchwarzParams> sample_params(uint64_t seed, uint64_t count);

/// Single indexed sample of the same stream sample_params draws from.
/// with_tau4 additionally draws tau4 (and adds tau4-boundary strata).
SchwarzParams sample_param_at(uint64_t seed, uint64_t index, bool with_tau4 = false);

} // namespace beanbound
