#include "beanbound/caratheodory.hpp"

#include <cmath>

#include "beanbound/rng.hpp"

namespace beanbound {

TruncatedSeries<double> extremal_p_lower(LowerWitnessKind kind, int order) {
    const double q = 8.0 / std::sqrt(kind == LowerWitnessKind::gamma ? 23.0 : 29.0);
    TruncatedSeries<double> num(order), den(order);
    num.set(0, 1.0);
    if (order >= 1) num.set(1, q);
    if (order >= 2) num.set(2, 1.0);
    den.set(0, 1.0);
    if (order >= 2) den.set(2, -1.0);
    return div(num, den);
}

namespace {

std::complex<double> disk_point(SplitMix64& g) {
    const double r = std::sqrt(g.next_unit());
    const double th = 2.0 * M_PI * g.next_unit();
    return std::polar(r, th);
}

std::complex<double> circle_point(SplitMix64& g) {
    return std::polar(1.0, 2.0 * M_PI * g.next_unit());
}

} // namespace

SchwarzParams sample_param_at(uint64_t seed, uint64_t index, bool with_tau4) {
    SplitMix64 g = SplitMix64::for_index(seed, index);
    SchwarzParams p;
    p.tau1 = g.next_unit();
    p.tau2 = disk_point(g);
    p.tau3 = disk_point(g);
    if (with_tau4) p.tau4 = disk_point(g);
    if (index % 10 == 0) {
        const uint64_t kinds = with_tau4 ? 8 : 6;
        switch ((index / 10) % kinds) {
            case 0: p.tau1 = 0.0; break;
            case 1: p.tau1 = 1.0; break;
            case 2: p.tau2 = circle_point(g); break;
            case 3: p.tau3 = circle_point(g); break;
            case 4:
                p.tau1 = 0.0;
                p.tau2 = {1.0, 0.0};
                break;
            case 5:
                p.tau2 = circle_point(g);
                p.tau3 = circle_point(g);
                break;
            case 6: p.tau4 = circle_point(g); break;
            case 7:
                p.tau1 = 0.0;
                p.tau2 = {0.0, 0.0};
                p.tau3 = {0.0, 0.0};
                p.tau4 = {1.0, 0.0};
                break;
        }
    }
    return p;
}

std::vector<SchwarzParams> sample_params(uint64_t seed, uint64_t count) {
    if (count < 1) throw std::invalid_argument("sample_params: count must be >= 1");
    std::vector<SchwarzParams> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; ++i) out.push_back(sample_param_at(seed, i));
    return out;
}

} // namespace beanbound
