#pragma once

// Deterministic generators for property-style tests.

#include "beanbound/rational.hpp"
#include "beanbound/rng.hpp"
#include "beanbound/series.hpp"

namespace beanbound::testgen {

inline Rational small_rational(SplitMix64& g, long long max_abs = 10) {
    const long long num = static_cast<long long>(g.next() % (2 * max_abs + 1)) - max_abs;
    const long long den = 1 + static_cast<long long>(g.next() % max_abs);
    return Rational(num, den);
}

inline CRational small_crational(SplitMix64& g, long long max_abs = 10) {
    return CRational(small_rational(g, max_abs), small_rational(g, max_abs));
}

/// Random rational in [0, 1].
inline Rational unit_rational(SplitMix64& g, long long den = 32) {
    return Rational(static_cast<long long>(g.next() % (den + 1)), den);
}

/// Random Gaussian rational in the closed unit disk (rejection).
inline CRational disk_crational(SplitMix64& g) {
    for (;;) {
        CRational z(Rational(static_cast<long long>(g.next() % 33) - 16, 16),
                    Rational(static_cast<long long>(g.next() % 33) - 16, 16));
        if (!(z.norm2() > Rational(1))) return z;
    }
}

/// Random series with small rational coefficients.
inline TruncatedSeries<Rational> random_series(SplitMix64& g, int order, long long max_abs = 10) {
    TruncatedSeries<Rational> s(order);
    for (int i = 0; i <= order; ++i) s.set(i, small_rational(g, max_abs));
    return s;
}

} // namespace beanbound::testgen
