#pragma once

#include "walkclass/polyq.hpp"
#include "walkclass/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace walkclass {

// Linear differential operator sum c[i](t) D^i with polynomial coefficients.
struct DiffOp {
    std::vector<PolyQ> c;
    int order() const;
    int degree() const; // max over coefficients
    bool zero() const;
    bool operator==(const DiffOp& o) const { return c == o.c; }
};

// Recurrence sum p[s](n) a(n+s) = 0 for n >= n0, shifts 0..order.
struct RecOp {
    std::vector<PolyQ> p;
    int n0 = 0;
    int order() const;
    int degree() const;
    bool zero() const;
    bool operator==(const RecOp& o) const { return p == o.p && n0 == o.n0; }
};

// Algebraic equation sum c[i](t) y^i = 0 for y = f(t).
struct AlgEq {
    std::vector<PolyQ> c;
    int ydeg() const;
    int tdeg() const;
    bool zero() const;
    bool operator==(const AlgEq& o) const { return c == o.c; }
};

// Canonical forms. Differential operators are scaled integer-primitive with
// positive leading coefficient of c[order]; recurrences additionally drop the
// common polynomial factor in n (raising n0 past any integer root it loses);
// algebraic equations drop the common polynomial factor in t.
DiffOp normalize(const DiffOp& L);
RecOp normalize(const RecOp& R);
AlgEq normalize(const AlgEq& P);

// Exact annihilation tests against an integer series a_0..a_{N-1}. Each checks
// every index the truncation makes computable.
bool annihilates(const DiffOp& L, const std::vector<Int>& a);
bool annihilates(const RecOp& R, const std::vector<Int>& a);
bool annihilates(const AlgEq& P, const std::vector<Int>& a);

// The recurrence satisfied by the coefficient sequence of any series solution:
// t^a D^i picks out falling-factorial terms, shifted so the first valid index
// is as printed in n0.
RecOp ode_to_rec(const DiffOp& L);

// Use the recurrence to extend a series to len terms. Throws std::domain_error
// naming the index if the leading coefficient vanishes somewhere needed.
std::vector<Int> extend_sequence(const RecOp& R, const std::vector<Int>& a, int len);

// Ore multiplication: (A*B) f = A(B f).
DiffOp mul(const DiffOp& A, const DiffOp& B);

// Rational function coefficients for division.
struct RatFuncQ {
    PolyQ num, den; // den monic, gcd(num, den) = 1; zero is 0/1
    RatFuncQ();
    explicit RatFuncQ(PolyQ n, PolyQ d = PolyQ::constant(Rat(1)));
    bool zero() const { return num.c.empty(); }
    bool operator==(const RatFuncQ& o) const { return num == o.num && den == o.den; }
};
RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);

using DiffOpF = std::vector<RatFuncQ>; // fraction-coefficient operator

DiffOpF to_fractions(const DiffOp& L);
DiffOp clear_denominators(const DiffOpF& L); // primitive, content-free

// A = Q*B + R with order(R) < order(B), coefficients in Q(t).
std::pair<DiffOpF, DiffOpF> right_divmod(const DiffOp& A, const DiffOp& B);

// Greatest common right divisor, returned content-free primitive.
DiffOp gcrd(const DiffOp& A, const DiffOp& B);

// Substitute t = 1/u and clear powers of u; the place u=0 is t=infinity.
DiffOp infinity_transform(const DiffOp& L);

// JSON serialization: {"type","order","degree","coeffs"} with coefficient
// rows coeffs[i][j] = decimal string of the t^j (or n^j) coefficient.
std::string to_json(const DiffOp& L);
std::string to_json(const RecOp& R);
std::string to_json(const AlgEq& P);
DiffOp diffop_from_json(const std::string& text);
RecOp recop_from_json(const std::string& text);
AlgEq algeq_from_json(const std::string& text);

std::string to_string(const DiffOp& L);
std::string to_string(const RecOp& R);
std::string to_string(const AlgEq& P);

} // namespace walkclass
