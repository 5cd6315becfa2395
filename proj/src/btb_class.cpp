#include "beanbound/btb_class.hpp"

namespace beanbound {

TruncatedSeries<Rational> extremal_series(int k, int order) {
    if (k < 1 || k > 4) throw std::invalid_argument("extremal: k must be in 1..4");
    if (order < 1) throw std::invalid_argument("extremal: order must be >= 1");
    TruncatedSeries<Rational> omega = TruncatedSeries<Rational>::monomial(k, order - 1);
    return btb_series_from_schwarz(omega);
}

BtbFunction<Rational> extremal(int k) {
    const int order = k == 4 ? 9 : (k == 2 || k == 3 ? 7 : 5);
    TruncatedSeries<Rational> f = extremal_series(k, order);
    BtbFunction<Rational> out;
    out.a2 = f[2];
    out.a3 = f[3];
    out.a4 = f[4];
    out.a5 = f[5];
    out.source = Provenance::extremal;
    out.extremal_k = k;
    if (k == 2 || k == 3) out.extra_coeffs.emplace_back(7, f[7]);
    if (k == 4) out.extra_coeffs.emplace_back(9, f[9]);
    return out;
}

} // namespace beanbound
