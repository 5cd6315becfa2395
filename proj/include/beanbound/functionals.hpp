#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "beanbound/btb_class.hpp"

namespace beanbound {

inline Rational abs_value(const Rational& v) { return v.abs(); }
inline double abs_value(double v) { return std::fabs(v); }
inline double abs_value(const std::complex<double>& v) { return std::abs(v); }
inline double abs_value(const CRational& v) { return std::sqrt(v.norm2().to_double()); }

namespace detail {
template <class C>
void check_routes(const C& x, const C& y, const char* what) {
    if constexpr (field_traits<C>::exact) {
        if (!(x == y)) throw std::logic_error(std::string(what) + ": route disagreement");
    } else {
        if (!(abs_value(x - y) <= 1e-10))
            throw std::logic_error(std::string(what) + ": route disagreement beyond 1e-10");
    }
}
template <class C>
C q(long long n, long long d) {
    return field_traits<C>::from_int(n) / field_traits<C>::from_int(d);
}
} // namespace detail

/// Logarithmic coefficients: gamma_n are half the Taylor coefficients of
/// log(f(z)/z). g4 needs a5 and is empty when a5 is unknown.
template <class C>
struct LogCoeffs {
    C g1{}, g2{}, g3{};
    std::optional<C> g4;
};

template <class C>
LogCoeffs<C> log_coeffs(const BtbFunction<C>& f) {
    using detail::q;
    LogCoeffs<C> g;
    const C a2 = f.a2, a3 = f.a3, a4 = f.a4;
    g.g1 = q<C>(1, 2) * a2;
    g.g2 = q<C>(1, 2) * (a3 - q<C>(1, 2) * a2 * a2);
    g.g3 = q<C>(1, 2) * (a4 - a2 * a3 + q<C>(1, 3) * a2 * a2 * a2);
    if (f.a5) {
        const C a5 = *f.a5;
        g.g4 = q<C>(1, 2) * (a5 - a2 * a4 + a2 * a2 * a3 - q<C>(1, 2) * a3 * a3 -
                             q<C>(1, 4) * a2 * a2 * a2 * a2);
    }
    return g;
}

/// Same coefficients computed from the series definition log(f/z)/2.
template <class C>
LogCoeffs<C> log_coeffs_series(const BtbFunction<C>& f) {
    const int order = f.a5 ? 5 : 4;
    TruncatedSeries<C> fs = f.to_series(order);
    TruncatedSeries<C> over_z(order - 1);
    for (int i = 0; i + 1 <= order; ++i) over_z.set(i, fs[i + 1]);
    TruncatedSeries<C> L = log_unit(over_z);
    LogCoeffs<C> g;
    g.g1 = detail::q<C>(1, 2) * L[1];
    g.g2 = detail::q<C>(1, 2) * L[2];
    g.g3 = detail::q<C>(1, 2) * L[3];
    if (f.a5) g.g4 = detail::q<C>(1, 2) * L[4];
    return g;
}

template <class C>
struct InvLogCoeffs {
    C G1{}, G2{}, G3{};
};

/// Logarithmic coefficients of the inverse function, closed forms.
template <class C>
InvLogCoeffs<C> inv_log_coeffs(const BtbFunction<C>& f) {
    using detail::q;
    InvLogCoeffs<C> G;
    const C a2 = f.a2, a3 = f.a3, a4 = f.a4;
    G.G1 = -q<C>(1, 2) * a2;
    G.G2 = -q<C>(1, 2) * (a3 - q<C>(3, 2) * a2 * a2);
    G.G3 = -q<C>(1, 2) * (a4 - field_traits<C>::from_int(4) * a2 * a3 +
                          q<C>(10, 3) * a2 * a2 * a2);
    return G;
}

/// Same via series reversion followed by log(F/w)/2.
template <class C>
InvLogCoeffs<C> inv_log_coeffs_series(const BtbFunction<C>& f) {
    TruncatedSeries<C> F = revert(f.to_series(4));
    TruncatedSeries<C> over_w(3);
    for (int i = 0; i <= 3; ++i) over_w.set(i, F[i + 1]);
    TruncatedSeries<C> L = log_unit(over_w);
    InvLogCoeffs<C> G;
    G.G1 = detail::q<C>(1, 2) * L[1];
    G.G2 = detail::q<C>(1, 2) * L[2];
    G.G3 = detail::q<C>(1, 2) * L[3];
    return G;
}

/// Second Hankel determinant of the logarithmic coefficients,
/// gamma1 gamma3 - gamma2^2. Computes the gamma-form and the displayed
/// a-form (a2^4 - 12 a3^2 + 12 a2 a4)/48 and requires them to agree; when
/// the function carries c-provenance the c-form
/// (-25 c1^4 - 160 c1^2 c2 - 1024 c2^2 + 1152 c1 c3)/589824 is checked too.
template <class C>
C hankel_log(const BtbFunction<C>& f) {
    using detail::q;
    LogCoeffs<C> g = log_coeffs(f);
    const C via_gamma = g.g1 * g.g3 - g.g2 * g.g2;
    const C a2 = f.a2, a3 = f.a3, a4 = f.a4;
    const C via_a =
        q<C>(1, 48) * (a2 * a2 * a2 * a2 - field_traits<C>::from_int(12) * a3 * a3 +
                       field_traits<C>::from_int(12) * a2 * a4);
    detail::check_routes(via_gamma, via_a, "hankel_log");
    if (f.from_c) {
        const C c1 = f.from_c->c1, c2 = f.from_c->c2, c3 = f.from_c->c3;
        const C via_c = q<C>(1, 589824) * (field_traits<C>::from_int(-25) * c1 * c1 * c1 * c1 -
                                           field_traits<C>::from_int(160) * c1 * c1 * c2 -
                                           field_traits<C>::from_int(1024) * c2 * c2 +
                                           field_traits<C>::from_int(1152) * c1 * c3);
        detail::check_routes(via_gamma, via_c, "hankel_log(c-form)");
    }
    return via_gamma;
}

/// Hankel determinant of the inverse logarithmic coefficients,
/// Gamma1 Gamma3 - Gamma2^2 = (13 a2^4 - 12 a2^2 a3 - 12 a3^2 + 12 a2 a4)/48,
/// with c-form (131 c1^4 - 352 c1^2 c2 - 1024 c2^2 + 1152 c1 c3)/589824.
template <class C>
C hankel_inv_log(const BtbFunction<C>& f) {
    using detail::q;
    InvLogCoeffs<C> G = inv_log_coeffs(f);
    const C via_gamma = G.G1 * G.G3 - G.G2 * G.G2;
    const C a2 = f.a2, a3 = f.a3, a4 = f.a4;
    const C via_a = q<C>(1, 48) * (field_traits<C>::from_int(13) * a2 * a2 * a2 * a2 -
                                   field_traits<C>::from_int(12) * a2 * a2 * a3 -
                                   field_traits<C>::from_int(12) * a3 * a3 +
                                   field_traits<C>::from_int(12) * a2 * a4);
    detail::check_routes(via_gamma, via_a, "hankel_inv_log");
    if (f.from_c) {
        const C c1 = f.from_c->c1, c2 = f.from_c->c2, c3 = f.from_c->c3;
        const C via_c = q<C>(1, 589824) * (field_traits<C>::from_int(131) * c1 * c1 * c1 * c1 -
                                           field_traits<C>::from_int(352) * c1 * c1 * c2 -
                                           field_traits<C>::from_int(1024) * c2 * c2 +
                                           field_traits<C>::from_int(1152) * c1 * c3);
        detail::check_routes(via_gamma, via_c, "hankel_inv_log(c-form)");
    }
    return via_gamma;
}

/// Zalcman functional J_{2,3} = a2 a3 - a4.
template <class C>
C zalcman_23(const BtbFunction<C>& f) {
    return f.a2 * f.a3 - f.a4;
}

enum class ModuliKind { gamma, inv_gamma };

/// |gamma2| - |gamma1| (kind gamma) or |Gamma2| - |Gamma1| (kind inv_gamma).
template <class C>
auto moduli_diff(ModuliKind kind, const BtbFunction<C>& f) {
    if (kind == ModuliKind::gamma) {
        LogCoeffs<C> g = log_coeffs(f);
        return abs_value(g.g2) - abs_value(g.g1);
    }
    InvLogCoeffs<C> G = inv_log_coeffs(f);
    return abs_value(G.G2) - abs_value(G.G1);
}

/// The bounded functionals, one per theorem row.
enum class FunctionalId {
    gamma1,
    gamma2,
    gamma3,
    gamma4,
    hankel_log,
    big_gamma1,
    big_gamma2,
    hankel_inv_log,
    zalcman23,
    gamma_diff,
    big_gamma_diff,
};

inline bool functional_needs_c4(FunctionalId id) { return id == FunctionalId::gamma4; }

inline double as_double(const Rational& v) { return v.to_double(); }
inline double as_double(double v) { return v; }

/// Real value the theorems bound: modulus for the coefficient/Hankel/Zalcman
/// rows, the signed difference for the moduli rows.
template <class C>
double functional_value(FunctionalId id, const BtbFunction<C>& f) {
    switch (id) {
        case FunctionalId::gamma1: return as_double(abs_value(log_coeffs(f).g1));
        case FunctionalId::gamma2: return as_double(abs_value(log_coeffs(f).g2));
        case FunctionalId::gamma3: return as_double(abs_value(log_coeffs(f).g3));
        case FunctionalId::gamma4: {
            LogCoeffs<C> g = log_coeffs(f);
            if (!g.g4) throw std::invalid_argument("gamma4 needs a5 (c4 unavailable)");
            return as_double(abs_value(*g.g4));
        }
        case FunctionalId::hankel_log: return as_double(abs_value(hankel_log(f)));
        case FunctionalId::big_gamma1: return as_double(abs_value(inv_log_coeffs(f).G1));
        case FunctionalId::big_gamma2: return as_double(abs_value(inv_log_coeffs(f).G2));
        case FunctionalId::hankel_inv_log: return as_double(abs_value(hankel_inv_log(f)));
        case FunctionalId::zalcman23: return as_double(abs_value(zalcman_23(f)));
        case FunctionalId::gamma_diff: return as_double(moduli_diff(ModuliKind::gamma, f));
        case FunctionalId::big_gamma_diff:
            return as_double(moduli_diff(ModuliKind::inv_gamma, f));
    }
    throw std::invalid_argument("unknown functional");
}

} // namespace beanbound
