#include "beanbound/bounds_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace beanbound {

namespace {

// R(A,B,C): the residual case of Y for AC < 0.
YResult r_eval(double A, double B, double C) {
    const double a = std::fabs(A), b = std::fabs(B), c = std::fabs(C);
    if (c * (b + 4.0 * a) <= a * b) return {a + b - c, "R-first"};
    if (a * b <= c * (b - 4.0 * a)) return {-a + b + c, "R-second"};
    const double rad = 1.0 - B * B / (4.0 * A * C);
    if (rad < 0.0)
        throw std::logic_error("y_eval: negative radicand in R branch"); // AC<0 makes this impossible
    return {(c + a) * std::sqrt(rad), "R-sqrt"};
}

} // namespace

YResult y_eval(double A, double B, double C) {
    if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C))
        throw std::invalid_argument("y_eval: inputs must be finite");
    const double a = std::fabs(A), b = std::fabs(B), c = std::fabs(C);
    if (A * C >= 0.0) {
        // branch formulas agree at |B| = 2(1-|C|); return the larger anyway
        const bool first = b >= 2.0 * (1.0 - c);
        double v1 = first ? a + b + c : -HUGE_VAL;
        double v2 = (c < 1.0 && b <= 2.0 * (1.0 - c))
                        ? 1.0 + a + b * b / (4.0 * (1.0 - c))
                        : -HUGE_VAL;
        if (v1 >= v2) return {v1, "i-first"};
        return {v2, "i-second"};
    }
    const double t = -4.0 * A * C * (1.0 / (C * C) - 1.0);
    if (t <= B * B && b < 2.0 * (1.0 - c))
        return {1.0 - a + b * b / (4.0 * (1.0 - c)), "ii-first"};
    if (B * B < std::min(4.0 * (1.0 + c) * (1.0 + c), t))
        return {1.0 + a + b * b / (4.0 * (1.0 + c)), "ii-second"};
    return r_eval(A, B, C);
}

Rational lemma_c_bound(const Rational& v) {
    if (v < Rational(0)) return Rational(-4) * v + Rational(2);
    if (v > Rational(1)) return Rational(4) * v - Rational(2);
    return Rational(2);
}

bool lemma_d_check(const Rational& B, const Rational& D) {
    return Rational(0) <= B && B <= Rational(1) && B * (Rational(2) * B - Rational(1)) <= D &&
           D <= B;
}

LemmaEResult lemma_e_check(const Rational& gamma, const Rational& lambda, const Rational& alpha,
                           const Rational& beta) {
    const Rational zero(0), one(1);
    if (!(zero < alpha && alpha < one) || !(zero < lambda && lambda < one))
        throw std::invalid_argument("lemma_e_check: need 0 < alpha < 1 and 0 < lambda < 1");
    const Rational t1 = alpha * beta - Rational(2) * gamma;
    const Rational t2 = alpha * (lambda + alpha) - beta;
    const Rational t3 = beta - Rational(2) * lambda * alpha;
    const Rational lhs = Rational(8) * lambda * (one - lambda) * (t1 * t1 + t2 * t2) +
                         alpha * (one - alpha) * t3 * t3;
    const Rational rhs =
        Rational(4) * alpha * alpha * (one - alpha) * (one - alpha) * lambda * (one - lambda);
    const Rational slack = lhs - rhs;
    return {!(slack > zero), slack};
}

LemmaFResult lemma_f_bounds(double B1, std::complex<double> B2, double B3) {
    if (!(B1 > 0.0)) throw std::invalid_argument("lemma_f_bounds: B1 must be > 0");
    LemmaFResult r;
    const double b3 = std::fabs(B3);
    const double two_b2_b3 = std::abs(2.0 * B2 + B3);
    const double B4 = std::abs(4.0 * B2 + 2.0 * B3);
    if (two_b2_b3 >= b3 + B1) {
        r.psi_plus_bound = B4 - 2.0 * B1;
        r.plus_branch = "plus-first";
    } else {
        r.psi_plus_bound = 2.0 * b3;
        r.plus_branch = "plus-second";
    }
    if (B1 >= B4 + 2.0 * b3) {
        r.psi_minus_bound = 2.0 * B1 - B4;
        r.minus_branch = "minus-first";
    } else if (B1 * B1 <= 2.0 * b3 * (B4 + 2.0 * b3)) {
        r.psi_minus_bound = 2.0 * B1 * std::sqrt(2.0 * b3 / (B4 + 2.0 * b3));
        r.minus_branch = "minus-second";
    } else {
        r.psi_minus_bound = 2.0 * b3 + B1 * B1 / (B4 + 2.0 * b3);
        r.minus_branch = "minus-third";
    }
    return r;
}

double psi_poly(HankelVariant variant, double t) {
    const double t2 = t * t;
    return variant == HankelVariant::direct ? 256.0 - 208.0 * t2 + 25.0 * t2 * t2
                                            : 256.0 - 112.0 * t2 - 131.0 * t2 * t2;
}

double psi_poly_deriv(HankelVariant variant, double t) {
    return variant == HankelVariant::direct ? -416.0 * t + 100.0 * t * t * t
                                            : -224.0 * t - 524.0 * t * t * t;
}

Rational psi_poly_exact(HankelVariant variant, const Rational& t) {
    const Rational t2 = t * t;
    return variant == HankelVariant::direct
               ? Rational(256) - Rational(208) * t2 + Rational(25) * t2 * t2
               : Rational(256) - Rational(112) * t2 - Rational(131) * t2 * t2;
}

HankelCase hankel_case_analysis(HankelVariant variant, double tau1) {
    if (!(tau1 > 0.0 && tau1 < 1.0))
        throw std::invalid_argument("hankel_case_analysis: tau1 must be in (0,1)");
    const double t = tau1;
    HankelCase out;
    if (variant == HankelVariant::direct) {
        out.A = 73.0 * t * t * t / (288.0 * (1.0 - t * t));
        out.B = t / 18.0;
    } else {
        out.A = 13.0 * t * t * t / (288.0 * (1.0 - t * t));
        out.B = 7.0 * t / 18.0;
    }
    out.C = (8.0 + t * t) / (9.0 * t);
    if (!(out.A * out.C > 0.0))
        throw std::logic_error("hankel_case_analysis: AC > 0 fails");
    if (!(std::fabs(out.B) > 2.0 * (1.0 - std::fabs(out.C))))
        throw std::logic_error("hankel_case_analysis: |B| > 2(1-|C|) fails");
    YResult y = y_eval(out.A, out.B, out.C);
    out.bound_value = t * (1.0 - t * t) * y.value / 128.0;
    return out;
}

HankelCaseValues hankel_case_values(HankelVariant variant) {
    HankelCaseValues v;
    v.case1 = variant == HankelVariant::direct ? Rational(73, 36864) : Rational(13, 36864);
    v.case2 = Rational(1, 144);
    // Psi decreasing on (0,1]: the Case-III supremum is the tau1 -> 0 limit
    v.case3_sup = psi_poly_exact(variant, Rational(0)) / Rational(36864);
    return v;
}

const std::vector<TheoremEntry>& theorem_bounds() {
    static const std::vector<TheoremEntry> table = [] {
        auto rat = [](long long n, long long d) {
            SharpBound b;
            b.rational = Rational(n, d);
            b.value = b.rational->to_double();
            b.exact = b.rational->to_string();
            return b;
        };
        auto surd = [](int n) { // -1/(2*sqrt(n))
            SharpBound b;
            b.value = -1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
            b.exact = "-1/(2*sqrt(" + std::to_string(n) + "))";
            return b;
        };
        std::vector<TheoremEntry> t;
        t.push_back({"gamma1", BoundKind::max_abs, rat(1, 8), FunctionalId::gamma1});
        t.push_back({"gamma2", BoundKind::max_abs, rat(1, 12), FunctionalId::gamma2});
        t.push_back({"gamma3", BoundKind::max_abs, rat(1, 16), FunctionalId::gamma3});
        t.push_back({"gamma4", BoundKind::max_abs, rat(1, 20), FunctionalId::gamma4});
        t.push_back({"hankel_log", BoundKind::max_abs, rat(1, 144), FunctionalId::hankel_log});
        t.push_back({"Gamma1", BoundKind::max_abs, rat(1, 8), FunctionalId::big_gamma1});
        t.push_back({"Gamma2", BoundKind::max_abs, rat(1, 12), FunctionalId::big_gamma2});
        t.push_back(
            {"hankel_inv_log", BoundKind::max_abs, rat(1, 144), FunctionalId::hankel_inv_log});
        t.push_back({"zalcman23", BoundKind::max_abs, rat(1, 8), FunctionalId::zalcman23});
        t.push_back(
            {"gamma_diff_upper", BoundKind::max_signed, rat(1, 12), FunctionalId::gamma_diff});
        t.push_back({"gamma_diff_lower", BoundKind::min_signed, surd(23), FunctionalId::gamma_diff});
        t.push_back(
            {"Gamma_diff_upper", BoundKind::max_signed, rat(1, 12), FunctionalId::big_gamma_diff});
        t.push_back(
            {"Gamma_diff_lower", BoundKind::min_signed, surd(29), FunctionalId::big_gamma_diff});
        return t;
    }();
    return table;
}

const TheoremEntry* find_theorem(const std::string& id) {
    for (const auto& e : theorem_bounds())
        if (e.id == id) return &e;
    return nullptr;
}

} // namespace beanbound
