#pragma once

#include "walkclass/bigfloat.hpp"
#include "walkclass/ore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walkclass {

// a + b*sqrt(c) with integer c >= 0; rational iff b == 0. c is kept
// squarefree by trial division (a square factor with a prime beyond the
// trial bound would survive, which only denormalizes the print form).
struct SurdQ {
    Rat a, b;
    Int c = 1;
    bool rational() const { return b == 0; }
    double approx() const;
    BigFloat value(mpfr_prec_t prec) const;
    std::string str() const;
    bool operator==(const SurdQ& o) const = default;
};

// Poincare characteristic polynomial of a recurrence: x^k weighted by the
// coefficient of the highest n-power appearing across the p_k.
PolyQ char_poly(const RecOp& R);

// Exact growth-rate candidates: rational roots and quadratic-surd roots of
// the characteristic polynomial; real roots of irreducible factors of degree
// three or more are only reported numerically.
struct RhoCandidates {
    std::vector<SurdQ> exact;
    std::vector<double> numeric;
};
RhoCandidates char_candidates(const RecOp& R);

struct AsymptoticFit {
    std::optional<SurdQ> rho_exact;
    double rho = 0;
    double alpha = 0, alpha_err = 0;
    double kappa = 0;
    int kappa_stable_digits = 0;
    double beta = 0, beta_residual = 0; // beta is pinned to 0 and only diagnosed
    int stride = 1;                     // support stride the fit ran on
    std::string note;                   // set when the fit is unreliable
};

// Fit a_n ~ kappa * rho^n * n^alpha by Neville extrapolation to n = infinity
// in the variable n^(-1/2), on tail nodes of a fixed residue class mod 12 so
// that oscillations from conjugate singularities on the dominant circle stay
// constant along the ladder. Sequences supported on an arithmetic progression
// (parity, mod-3 excursions and the like) are fitted along their stride.
// Needs >= 500 terms and rho > 0; throws invalid_argument otherwise and on
// non-positive terms.
AsymptoticFit fit_asymptotics(const std::vector<Int>& a, const SurdQ& rho,
                              int levels = 12);
AsymptoticFit fit_asymptotics(const std::vector<Int>& a, double rho, int levels = 12);

// Numeric dominant growth rate (Richardson on term ratios); arbitrates
// between characteristic-root candidates. NaN when no fit is possible.
double estimate_rho(const std::vector<Int>& a);

// Pick the exact candidate matching the numeric estimate within tol.
std::optional<SurdQ> match_rho(const RhoCandidates& cands, double estimate,
                               double tol = 1e-6);

// Closed-form constant expressions in s-expression syntax:
//   (/ (sqrt 2) (gamma 1/2))   (* 4 (pow A 3/2))   (/ 8 (* 3 pi))
// Atoms: rational literals, pi, and the named constants
//   A=1+sqrt(2)  B=1+2sqrt(2)  C=1+sqrt(3)  D=1+2sqrt(3)
//   E=sqrt(6(379+156 sqrt(6)))  F=1+sqrt(6)
// Heads: + - * / sqrt pow gamma, with pow and gamma taking rational
// arguments.
struct ClosedFormExpr {
    static ClosedFormExpr parse(const std::string& sexpr); // throws invalid_argument
    BigFloat eval(mpfr_prec_t prec) const;
    std::string text;

    enum class Op { lit, pi, cname, add, sub, mul, div, sqrt, pow, gamma };
    Op op = Op::lit;
    Rat lit;
    char cname = 0;
    std::vector<ClosedFormExpr> kids;
};

// |kappa - eval(expr)| <= tol, evaluated at at least kappa's precision.
bool verify_constant(const BigFloat& kappa, const std::string& sexpr, double tol);

} // namespace walkclass
