#include "beanbound/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beanbound {

double eval_sample(FunctionalId id, const SchwarzParams& s) {
    CarCoeffs<std::complex<double>> c = params_to_coeffs(s.tau1, s.tau2, s.tau3);
    if (functional_needs_c4(id)) {
        const std::complex<double> tau4 = s.tau4.value_or(std::complex<double>{0.0, 0.0});
        c.c4 = schur_coeffs(s.tau1, s.tau2, s.tau3, tau4)[3];
    }
    return functional_value(id, coeffs_from_c(c));
}

const std::vector<Witness>& extremal_witnesses() {
    static const std::vector<Witness> w = [] {
        std::vector<Witness> v;
        auto mk = [](double t1, std::complex<double> t2, std::complex<double> t3,
                     std::complex<double> t4) {
            SchwarzParams p;
            p.tau1 = t1;
            p.tau2 = t2;
            p.tau3 = t3;
            p.tau4 = t4;
            return p;
        };
        v.push_back({"f1", mk(1.0, {0, 0}, {0, 0}, {1, 0})});
        v.push_back({"f2", mk(0.0, {1, 0}, {0, 0}, {1, 0})});
        v.push_back({"f3", mk(0.0, {0, 0}, {1, 0}, {0, 0})});
        v.push_back({"f4", mk(0.0, {0, 0}, {0, 0}, {1, 0})});
        v.push_back({"p-lower-gamma", mk(4.0 / std::sqrt(23.0), {1, 0}, {0, 0}, {1, 0})});
        v.push_back({"p-lower-Gamma", mk(4.0 / std::sqrt(29.0), {1, 0}, {0, 0}, {1, 0})});
        return v;
    }();
    return w;
}

namespace {

// Sign convention: we always maximize `dir * value`.
double direction(BoundKind k) { return k == BoundKind::min_signed ? -1.0 : 1.0; }

struct Best {
    double signed_value = -HUGE_VAL;
    uint64_t index = UINT64_MAX;

    // deterministic merge: larger value wins, ties break to the lower index
    void offer(double v, uint64_t i) {
        if (v > signed_value || (v == signed_value && i < index)) {
            signed_value = v;
            index = i;
        }
    }
    void merge(const Best& o) { offer(o.signed_value, o.index); }
};

Best scan_serial(FunctionalId id, double dir, uint64_t seed, uint64_t n, bool with_tau4) {
    Best best;
    for (uint64_t i = 0; i < n; ++i)
        best.offer(dir * eval_sample(id, sample_param_at(seed, i, with_tau4)), i);
    return best;
}

Best scan_parallel(FunctionalId id, double dir, uint64_t seed, uint64_t n, bool with_tau4) {
    Best best;
#pragma omp parallel
    {
        Best local;
#pragma omp for nowait schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            const uint64_t idx = static_cast<uint64_t>(i);
            local.offer(dir * eval_sample(id, sample_param_at(seed, idx, with_tau4)), idx);
        }
#pragma omp critical
        best.merge(local);
    }
    return best;
}

// Polar coordinates of a parameter point, for coordinate-wise polishing.
struct Coords {
    double tau1, r2, th2, r3, th3, r4, th4;
    bool with_tau4;

    static Coords from(const SchwarzParams& p) {
        Coords c{};
        c.tau1 = p.tau1;
        c.r2 = std::min(1.0, std::abs(p.tau2));
        c.th2 = std::arg(p.tau2);
        c.r3 = std::min(1.0, std::abs(p.tau3));
        c.th3 = std::arg(p.tau3);
        c.with_tau4 = p.tau4.has_value();
        if (c.with_tau4) {
            c.r4 = std::min(1.0, std::abs(*p.tau4));
            c.th4 = std::arg(*p.tau4);
        }
        return c;
    }

    SchwarzParams to_params() const {
        SchwarzParams p;
        p.tau1 = std::clamp(tau1, 0.0, 1.0);
        p.tau2 = std::polar(std::clamp(r2, 0.0, 1.0), th2);
        p.tau3 = std::polar(std::clamp(r3, 0.0, 1.0), th3);
        if (with_tau4) p.tau4 = std::polar(std::clamp(r4, 0.0, 1.0), th4);
        return p;
    }
};

// Shrinking coordinate scan; deterministic, monotone non-decreasing.
double refine(FunctionalId id, double dir, Coords& c, int rounds) {
    double best = dir * eval_sample(id, c.to_params());
    double* fields[7] = {&c.tau1, &c.r2, &c.th2, &c.r3, &c.th3, &c.r4, &c.th4};
    const int ncoord = c.with_tau4 ? 7 : 5;
    for (int round = 0; round < rounds; ++round) {
        for (int k = 0; k < ncoord; ++k) {
            double width = (k == 2 || k == 4 || k == 6) ? M_PI : 0.5;
            for (int it = 0; it < 24; ++it) {
                const double center = *fields[k];
                double cand_best = best, cand_pos = center;
                for (int j = -4; j <= 4; ++j) {
                    if (j == 0) continue;
                    *fields[k] = center + width * j / 4.0;
                    const double v = dir * eval_sample(id, c.to_params());
                    if (v > cand_best) {
                        cand_best = v;
                        cand_pos = *fields[k];
                    }
                }
                *fields[k] = cand_pos;
                best = cand_best;
                width *= 0.42;
            }
        }
    }
    return best;
}

} // namespace

BoundReport maximize_functional(const SearchConfig& cfg, ExecMode mode) {
    const TheoremEntry* entry = find_theorem(cfg.functional_id);
    if (!entry) throw std::invalid_argument("unknown functional id: " + cfg.functional_id);
    if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (cfg.refine_iters < 0) throw std::invalid_argument("refine_iters must be >= 0");

    const bool with_tau4 = functional_needs_c4(entry->functional);
    const double dir = direction(entry->kind);

    Best stream = mode == ExecMode::serial
                      ? scan_serial(entry->functional, dir, cfg.seed, cfg.samples, with_tau4)
                      : scan_parallel(entry->functional, dir, cfg.seed, cfg.samples, with_tau4);

    BoundReport rep;
    rep.theorem_id = entry->id;
    rep.kind = entry->kind;
    rep.bound = entry->bound;
    rep.seed = cfg.seed;
    rep.samples = cfg.samples;
    rep.attainment_tol = 1e-6;
    rep.exceedance_tol = 1e-12;
    if (with_tau4) rep.c4_mode = "schur-c4";

    double best_signed = stream.signed_value;
    rep.attaining = sample_param_at(cfg.seed, stream.index, with_tau4);
    rep.attained_from = "sample";

    if (cfg.refine_iters > 0) {
        Coords c = Coords::from(rep.attaining);
        c.with_tau4 = with_tau4;
        const double refined = refine(entry->functional, dir, c, cfg.refine_iters);
        if (refined > best_signed) {
            best_signed = refined;
            rep.attaining = c.to_params();
            rep.attained_from = "refined";
        }
    }

    if (cfg.include_extremals) {
        for (const Witness& w : extremal_witnesses()) {
            SchwarzParams p = w.params;
            if (!with_tau4) p.tau4.reset();
            const double v = dir * eval_sample(entry->functional, p);
            if (v > best_signed) {
                best_signed = v;
                rep.attaining = p;
                rep.attained_from = "witness:" + w.tag;
            }
        }
    }

    rep.attained = dir * best_signed; // undo the sign used for minimization
    const double b = rep.bound.value;
    const bool violated = entry->kind == BoundKind::min_signed
                              ? rep.attained < b - rep.exceedance_tol
                              : rep.attained > b + rep.exceedance_tol;
    const bool attained = entry->kind == BoundKind::min_signed
                              ? rep.attained <= b + rep.attainment_tol
                              : rep.attained >= b - rep.attainment_tol;
    rep.verdict = violated ? Verdict::violated
                           : (attained ? Verdict::confirmed : Verdict::inconclusive);
    return rep;
}

std::vector<BoundReport> verify_all(uint64_t seed, uint64_t samples_per_functional,
                                    int refine_iters, bool include_extremals, ExecMode mode) {
    std::vector<BoundReport> out;
    for (const TheoremEntry& e : theorem_bounds()) {
        SearchConfig cfg;
        cfg.seed = seed;
        cfg.samples = samples_per_functional;
        cfg.refine_iters = refine_iters;
        cfg.include_extremals = include_extremals;
        cfg.functional_id = e.id;
        out.push_back(maximize_functional(cfg, mode));
    }
    return out;
}

} // namespace beanbound
