#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "beanbound/functionals.hpp"
#include "beanbound/rational.hpp"

namespace beanbound {

/// Result of the piecewise closed-form maximum
///   Y(A,B,C) = max over |z| <= 1 of |A + Bz + Cz^2| + 1 - |z|^2.
/// `branch` names which case of the formula produced the value.
struct YResult {
    double value;
    std::string branch;
};

YResult y_eval(double A, double B, double C);

/// Bound for |c2 - v c1^2| over the Caratheodory class: -4v+2 for v < 0,
/// 2 for 0 <= v <= 1, 4v-2 for v > 1.
Rational lemma_c_bound(const Rational& v);

/// Hypothesis of the |c3 - 2B c1 c2 + D c1^3| <= 2 bound:
/// 0 <= B <= 1 and B(2B-1) <= D <= B.
bool lemma_d_check(const Rational& B, const Rational& D);

struct LemmaEResult {
    bool ok;        // hypothesis holds (slack <= 0)
    Rational slack; // lhs - rhs, exact
};

/// Exact evaluation of the fourth-coefficient lemma hypothesis:
///   8 l(1-l){(ab - 2g)^2 + (a(l+a) - b)^2} + a(1-a)(b - 2la)^2
///     <= 4 a^2 (1-a)^2 l (1-l),
/// with 0 < alpha < 1 and 0 < lambda < 1 required.
LemmaEResult lemma_e_check(const Rational& gamma, const Rational& lambda,
                           const Rational& alpha, const Rational& beta);

struct LemmaFResult {
    double psi_plus_bound;
    double psi_minus_bound;
    std::string plus_branch;
    std::string minus_branch;
};

/// Sharp bounds for Psi+ = |B2 c1^2 + B3 c2| - |B1 c1| and Psi- = -Psi+
/// over the Caratheodory class; B1 > 0 required, B2 may be complex.
LemmaFResult lemma_f_bounds(double B1, std::complex<double> B2, double B3);

enum class HankelVariant { direct, inverse };

struct HankelCase {
    double A, B, C;     // the substituted Y arguments
    double bound_value; // (1/128) tau1 (1 - tau1^2) Y(A,B,C) = Psi(tau1)/36864
};

/// Case-III substitution for the Hankel bounds at tau1 in (0,1): builds
/// (A, B, C), checks AC > 0 and |B| > 2(1 - |C|), and evaluates the bound.
HankelCase hankel_case_analysis(HankelVariant variant, double tau1);

/// Psi(t) = 256 - 208 t^2 + 25 t^4 (direct) or 256 - 112 t^2 - 131 t^4
/// (inverse); the Case-III bound is Psi(tau1)/36864.
double psi_poly(HankelVariant variant, double t);
double psi_poly_deriv(HankelVariant variant, double t);
Rational psi_poly_exact(HankelVariant variant, const Rational& t);

struct HankelCaseValues {
    Rational case1;     // tau1 = 1
    Rational case2;     // tau1 = 0, |tau2| = 1
    Rational case3_sup; // sup over tau1 in (0,1): Psi(0+)/36864
};

HankelCaseValues hankel_case_values(HankelVariant variant);

enum class BoundKind { max_abs, max_signed, min_signed };

struct SharpBound {
    double value;
    std::string exact; // "p/q" or a surd like "-1/(2*sqrt(23))"
    std::optional<Rational> rational;
};

struct TheoremEntry {
    std::string id;
    BoundKind kind;
    SharpBound bound;
    FunctionalId functional;
};

/// The canonical table of sharp bounds, one row per one-sided inequality:
/// |gamma_n| <= 1/(4(n+1)) for n = 1..4, the two Hankel determinants <= 1/144,
/// |Gamma_1| <= 1/8, |Gamma_2| <= 1/12, |J_{2,3}| <= 1/8 and the two-sided
/// moduli differences (upper 1/12, lower -1/(2 sqrt 23) resp. -1/(2 sqrt 29)).
const std::vector<TheoremEntry>& theorem_bounds();

const TheoremEntry* find_theorem(const std::string& id);

} // namespace beanbound
