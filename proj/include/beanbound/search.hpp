#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beanbound/bounds_engine.hpp"
#include "beanbound/caratheodory.hpp"

namespace beanbound {

struct SearchConfig {
    uint64_t seed = 1;
    uint64_t samples = 100000;
    int refine_iters = 2;
    bool include_extremals = true;
    std::string functional_id = "gamma2";
};

/// Serial runs the reference loop; parallel shards the identical per-index
/// sample stream across OpenMP threads. Results are bit-identical because
/// samples are index-seeded and the max-reduction breaks ties by index.
enum class ExecMode { serial, parallel };

enum class Verdict { confirmed, violated, inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct BoundReport {
    std::string theorem_id;
    BoundKind kind = BoundKind::max_abs;
    SharpBound bound;
    double attained = 0.0;
    SchwarzParams attaining;
    std::string attained_from; // "witness:<tag>", "sample", or "refined"
    Verdict verdict = Verdict::inconclusive;
    double attainment_tol = 1e-6;
    double exceedance_tol = 1e-12;
    uint64_t seed = 0;
    uint64_t samples = 0;
    std::string c4_mode; // "schur-c4" on rows whose functional needs c4
};

/// One theorem row: sample the parameter space, inject the known extremal
/// witnesses, polish the best candidate, and report attainment/violation.
BoundReport maximize_functional(const SearchConfig& cfg, ExecMode mode = ExecMode::parallel);

/// Every row of theorem_bounds() with shared budgets.
std::vector<BoundReport> verify_all(uint64_t seed, uint64_t samples_per_functional = 100000,
                                    int refine_iters = 2, bool include_extremals = true,
                                    ExecMode mode = ExecMode::parallel);

/// Evaluate one theorem-row functional at a parameter sample (c's via the
/// three-parameter closed forms, c4 via the Schur chain when needed).
double eval_sample(FunctionalId id, const SchwarzParams& params);

/// Known extremal witnesses as parameter points, with tags.
struct Witness {
    std::string tag;
    SchwarzParams params;
};
const std::vector<Witness>& extremal_witnesses();

} // namespace beanbound
