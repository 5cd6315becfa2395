#include "beanbound/bean.hpp"

#include <cmath>
#include <stdexcept>

#include "beanbound/btb_class.hpp"

namespace beanbound {

std::complex<double> bean_map(std::complex<double> z) {
    return std::sqrt(1.0 + std::tanh(z));
}

std::vector<BeanPoint> bean_boundary(int resolution) {
    if (resolution < 2) throw std::invalid_argument("bean_boundary: resolution must be >= 2");
    std::vector<BeanPoint> out;
    out.reserve(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double theta = 2.0 * M_PI * i / resolution;
        out.push_back({theta, bean_map(std::polar(1.0, theta))});
    }
    return out;
}

double bean_boundary_identity_dev(const std::vector<BeanPoint>& curve) {
    double worst = 0.0;
    for (const auto& pt : curve) {
        const std::complex<double> w2 = pt.w * pt.w;
        const double m = std::abs(std::log(w2 / (2.0 - w2)));
        worst = std::max(worst, std::fabs(m - 2.0));
    }
    return worst;
}

double bean_series_residual(int order, int angles) {
    const TruncatedSeries<double> B = to_double_series(generator_series<Rational>(order));
    double worst = 0.0;
    for (int i = 0; i < angles; ++i) {
        const std::complex<double> z = std::polar(0.99, 2.0 * M_PI * i / angles);
        const std::complex<double> w = eval_series_at(B, z);
        const std::complex<double> w2 = w * w;
        worst = std::max(worst, std::abs(w2 / (2.0 - w2) - std::exp(2.0 * z)));
    }
    return worst;
}

} // namespace beanbound
