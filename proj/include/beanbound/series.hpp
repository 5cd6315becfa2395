#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "beanbound/rational.hpp"

namespace beanbound {

/// Coefficient-field glue for the series templates. A field here needs
/// ring operations, division, and construction from small integers.
template <class T>
struct field_traits;

template <>
struct field_traits<Rational> {
    static Rational from_int(long long v) { return Rational(v); }
    static Rational conj(const Rational& v) { return v; }
    static constexpr bool exact = true;
};

template <>
struct field_traits<CRational> {
    static CRational from_int(long long v) { return CRational(Rational(v)); }
    static CRational conj(const CRational& v) { return v.conj(); }
    static constexpr bool exact = true;
};

template <>
struct field_traits<double> {
    static double from_int(long long v) { return static_cast<double>(v); }
    static double conj(double v) { return v; }
    static constexpr bool exact = false;
};

template <>
struct field_traits<std::complex<double>> {
    static std::complex<double> from_int(long long v) {
        return {static_cast<double>(v), 0.0};
    }
    static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
    static constexpr bool exact = false;
};

/// Formal power series truncated at a fixed degree. Coefficient n is the z^n
/// coefficient; the vector always holds order+1 entries. Values are immutable
/// in spirit: every operation returns a fresh series, so sharing across
/// threads is safe.
///
/// Truncation rules: binary operations truncate to the smaller order and
/// never claim coefficients beyond it; integrate() is the only operation
/// that raises the order.
template <class T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    static TruncatedSeries constant(const T& v, int order) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }
    /// z^degree truncated at `order` (zero series if degree > order).
    static TruncatedSeries monomial(int degree, int order) {
        TruncatedSeries s(order);
        if (degree >= 0 && degree <= order) s.c_[static_cast<std::size_t>(degree)] =
            field_traits<T>::from_int(1);
        return s;
    }
    static TruncatedSeries identity(int order) { return monomial(1, order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    void set(int n, T v) { c_[static_cast<std::size_t>(n)] = std::move(v); }

    TruncatedSeries truncated(int new_order) const {
        TruncatedSeries out(new_order);
        int n = std::min(new_order, order());
        for (int i = 0; i <= n; ++i) out.c_[static_cast<std::size_t>(i)] = (*this)[i];
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

private:
    std::vector<T> c_;
};

template <class T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries<T> out(n);
    for (int i = 0; i <= n; ++i) out.set(i, a[i] + b[i]);
    return out;
}

template <class T>
TruncatedSeries<T> sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries<T> out(n);
    for (int i = 0; i <= n; ++i) out.set(i, a[i] - b[i]);
    return out;
}

template <class T>
TruncatedSeries<T> scale(const T& k, const TruncatedSeries<T>& a) {
    TruncatedSeries<T> out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.set(i, k * a[i]);
    return out;
}

/// Cauchy product truncated to min(order).
template <class T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries<T> out(n);
    for (int i = 0; i <= n; ++i) {
        T acc = field_traits<T>::from_int(0);
        for (int j = 0; j <= i; ++j) acc += a[j] * b[i - j];
        out.set(i, acc);
    }
    return out;
}

/// Quotient a/b with invertible (nonzero constant term) denominator.
template <class T>
TruncatedSeries<T> div(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    int n = std::min(a.order(), b.order());
    if (b[0] == field_traits<T>::from_int(0))
        throw std::invalid_argument("series div: denominator has zero constant term");
    TruncatedSeries<T> q(n);
    for (int i = 0; i <= n; ++i) {
        T acc = a[i];
        for (int j = 1; j <= i; ++j) acc -= b[j] * q[i - j];
        q.set(i, acc / b[0]);
    }
    return q;
}

/// outer(inner(z)) by Horner accumulation. inner must vanish at 0, otherwise
/// the truncated composition is not well defined.
template <class T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
    if (!(inner[0] == field_traits<T>::from_int(0)))
        throw std::invalid_argument("series compose: inner constant term must be 0");
    int n = std::min(outer.order(), inner.order());
    TruncatedSeries<T> in = inner.truncated(n);
    TruncatedSeries<T> res = TruncatedSeries<T>::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k) {
        res = mul(res, in);
        res.set(0, res[0] + outer[k]);
    }
    return res;
}

/// Principal square root of a series with constant term 1.
template <class T>
TruncatedSeries<T> sqrt_unit(const TruncatedSeries<T>& a) {
    if (!(a[0] == field_traits<T>::from_int(1)))
        throw std::invalid_argument("sqrt_unit: constant term must be 1");
    int n = a.order();
    TruncatedSeries<T> s(n);
    s.set(0, field_traits<T>::from_int(1));
    const T two = field_traits<T>::from_int(2);
    for (int m = 1; m <= n; ++m) {
        T acc = a[m];
        for (int j = 1; j <= m - 1; ++j) acc -= s[j] * s[m - j];
        s.set(m, acc / two);
    }
    return s;
}

/// Termwise antiderivative with zero constant term; raises the order by 1.
template <class T>
TruncatedSeries<T> integrate(const TruncatedSeries<T>& a) {
    TruncatedSeries<T> out(a.order() + 1);
    for (int i = 0; i <= a.order(); ++i)
        out.set(i + 1, a[i] / field_traits<T>::from_int(i + 1));
    return out;
}

template <class T>
TruncatedSeries<T> derivative(const TruncatedSeries<T>& a) {
    int n = std::max(0, a.order() - 1);
    TruncatedSeries<T> out(n);
    for (int i = 1; i <= a.order(); ++i)
        if (i - 1 <= n) out.set(i - 1, field_traits<T>::from_int(i) * a[i]);
    return out;
}

/// log of a series with constant term 1, via L' = a'/a and termwise
/// integration; result has constant term 0 and the same order as a.
template <class T>
TruncatedSeries<T> log_unit(const TruncatedSeries<T>& a) {
    if (!(a[0] == field_traits<T>::from_int(1)))
        throw std::invalid_argument("log_unit: constant term must be 1");
    if (a.order() == 0) return TruncatedSeries<T>(0);
    TruncatedSeries<T> q = div(derivative(a), a.truncated(a.order() - 1));
    return integrate(q);
}

/// exp of a series with constant term 0, via E' = u'E. Same order as u.
template <class T>
TruncatedSeries<T> exp_unit(const TruncatedSeries<T>& u) {
    if (!(u[0] == field_traits<T>::from_int(0)))
        throw std::invalid_argument("exp_unit: constant term must be 0");
    int n = u.order();
    TruncatedSeries<T> e(n);
    e.set(0, field_traits<T>::from_int(1));
    for (int m = 1; m <= n; ++m) {
        T acc = field_traits<T>::from_int(0);
        for (int k = 1; k <= m; ++k) acc += field_traits<T>::from_int(k) * u[k] * e[m - k];
        e.set(m, acc / field_traits<T>::from_int(m));
    }
    return e;
}

/// Maclaurin series of tanh to the given order, generated from the
/// recurrence tanh' = 1 - tanh^2 (no coefficient table).
template <class T>
TruncatedSeries<T> tanh_series(int order) {
    if (order < 0) throw std::invalid_argument("tanh_series: order must be >= 0");
    TruncatedSeries<T> t(order);
    for (int m = 0; m + 1 <= order; ++m) {
        T acc = field_traits<T>::from_int(m == 0 ? 1 : 0);
        for (int j = 1; j <= m - 1; ++j) acc -= t[j] * t[m - j];
        t.set(m + 1, acc / field_traits<T>::from_int(m + 1));
    }
    return t;
}

/// Compositional inverse of f = z + a2 z^2 + ... (constant term 0, linear
/// coefficient 1), by Newton iteration on series: G <- G - (f(G) - id)/f'(G).
template <class T>
TruncatedSeries<T> revert(const TruncatedSeries<T>& f) {
    if (!(f[0] == field_traits<T>::from_int(0)) || !(f[1] == field_traits<T>::from_int(1)))
        throw std::invalid_argument("revert: series must start z + ...");
    int n = f.order();
    TruncatedSeries<T> g = TruncatedSeries<T>::identity(n);
    TruncatedSeries<T> id = TruncatedSeries<T>::identity(n);
    TruncatedSeries<T> fp(n);
    for (int i = 0; i + 1 <= n; ++i)
        fp.set(i, field_traits<T>::from_int(i + 1) * f[i + 1]);
    // order of correct coefficients doubles per step
    for (int correct = 1; correct <= n; correct *= 2) {
        TruncatedSeries<T> err = sub(compose(f, g), id);
        g = sub(g, div(err, compose(fp, g)));
    }
    return g;
}

template <class T>
TruncatedSeries<double> to_double_series(const TruncatedSeries<T>& a);

inline TruncatedSeries<double> to_double_series(const TruncatedSeries<Rational>& a) {
    TruncatedSeries<double> out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.set(i, a[i].to_double());
    return out;
}

template <class T>
T eval_series(const TruncatedSeries<T>& a, const T& z) {
    T acc = a[a.order()];
    for (int i = a.order() - 1; i >= 0; --i) acc = acc * z + a[i];
    return acc;
}

inline std::complex<double> eval_series_at(const TruncatedSeries<double>& a,
                                           std::complex<double> z) {
    std::complex<double> acc(a[a.order()], 0.0);
    for (int i = a.order() - 1; i >= 0; --i) acc = acc * z + a[i];
    return acc;
}

} // namespace beanbound
