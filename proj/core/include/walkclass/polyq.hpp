#pragma once

#include "walkclass/rational.hpp"

#include <utility>
#include <vector>

namespace walkclass {

// Dense univariate polynomial over Q, coefficients ascending.
// Invariant: zero polynomial is the empty vector, otherwise c.back() != 0.
struct PolyQ {
    std::vector<Rat> c;

    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static PolyQ constant(const Rat& a);
    static PolyQ monomial(const Rat& a, int deg);

    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }
    const Rat& lc() const { return c.back(); }
    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rat(0); }
    void trim();
};

PolyQ operator+(const PolyQ& a, const PolyQ& b);
PolyQ operator-(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const Rat& a, const PolyQ& b);
PolyQ operator-(const PolyQ& a);
bool operator==(const PolyQ& a, const PolyQ& b);

// Euclidean division; throws on zero divisor.
std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& a, const PolyQ& b);
// Monic gcd.
PolyQ poly_gcd(PolyQ a, PolyQ b);
PolyQ derivative(const PolyQ& a);
Rat poly_eval(const PolyQ& a, const Rat& x);
PolyQ poly_pow(const PolyQ& a, unsigned e);
// Composition a(x + s) via Horner shift.
PolyQ poly_shift(const PolyQ& a, const Rat& s);

// Clear denominators and integer content: returns primitive integer-coefficient
// polynomial with positive leading coefficient, equal to a up to a positive
// rational factor. Zero maps to zero.
PolyQ primitive_part(const PolyQ& a);

// Yun's squarefree decomposition: a ~ prod f_i^i (monic f_i, multiplicity i).
// Returned pairs are (factor, multiplicity) with non-trivial factors only.
std::vector<std::pair<PolyQ, int>> squarefree_factors(const PolyQ& a);

// All rational roots with multiplicity, via divisor candidates p/q on the
// primitive integer form (p | trailing, q | leading coefficient).
std::vector<std::pair<Rat, int>> rational_roots(const PolyQ& a);

// Dense bivariate polynomial; c[i] is the PolyQ (in the second variable)
// coefficient of the first variable's power i.
struct PolyQ2 {
    std::vector<PolyQ> c;

    PolyQ2() = default;
    explicit PolyQ2(std::vector<PolyQ> coeffs) : c(std::move(coeffs)) { trim(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();
};

// Res_s(m(s), chi(s, x)) for m in Q[s] and chi given as PolyQ2 with
// chi.c[j] = coefficient of x^j as a polynomial in s. Computed by
// fraction-free (subresultant-style) elimination of the Sylvester matrix
// over Q[x]. Result is a polynomial in x.
PolyQ bivariate_resultant(const PolyQ& m, const PolyQ2& chi);

std::string to_string(const PolyQ& a, const char* var = "t");

} // namespace walkclass
