#pragma once

#include "walkclass/modular.hpp"
#include "walkclass/polyq.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace walkclass {

// Dense polynomial over F_p (p an odd prime < 2^62), coefficients ascending.
// Invariant as in PolyQ: empty == zero, otherwise back() != 0.
struct PolyMod {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    PolyMod() = default;
    explicit PolyMod(std::uint64_t prime) : p(prime) {}
    PolyMod(std::uint64_t prime, std::vector<std::uint64_t> coeffs)
        : p(prime), c(std::move(coeffs)) { trim(); }
    static PolyMod constant(std::uint64_t prime, std::uint64_t a);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    std::uint64_t lc() const { return c.back(); }
    std::uint64_t coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0;
    }
    void trim();
};

PolyMod operator+(const PolyMod& a, const PolyMod& b);
PolyMod operator-(const PolyMod& a, const PolyMod& b);
PolyMod operator*(const PolyMod& a, const PolyMod& b);
PolyMod scal_mul(std::uint64_t a, const PolyMod& b);
bool operator==(const PolyMod& a, const PolyMod& b);

std::pair<PolyMod, PolyMod> poly_divrem(const PolyMod& a, const PolyMod& b);
PolyMod poly_gcd(PolyMod a, PolyMod b); // monic
PolyMod derivative(const PolyMod& a);
std::uint64_t poly_eval(const PolyMod& a, std::uint64_t x);
PolyMod make_monic(PolyMod a);

// Reduction of a rational-coefficient polynomial mod p; throws if any
// denominator vanishes mod p.
PolyMod reduce_mod(const PolyQ& a, std::uint64_t p);

// base^e mod f by binary powering.
PolyMod pow_mod_poly(const PolyMod& base, const Int& e, const PolyMod& f);

// The monic irreducible quadratic factors of a over Q: split the squarefree
// part modulo a small good prime (brute-force linears, Cantor-Zassenhaus for
// the quadratic part), Hensel-lift every candidate past its Mignotte bound,
// reconstruct and keep those that divide exactly. Deterministic.
std::vector<PolyQ> quadratic_factors(const PolyQ& a);

// Rational function over F_p(t). Invariants: den monic, gcd(num, den) = 1,
// zero is num == 0, den == 1.
struct RatFuncMod {
    PolyMod num, den;

    RatFuncMod() = default;
    RatFuncMod(PolyMod n, PolyMod d); // normalizes
    static RatFuncMod from_poly(PolyMod n);
    static RatFuncMod zero(std::uint64_t p);
    static RatFuncMod one(std::uint64_t p);

    bool is_zero() const { return num.is_zero(); }
    std::uint64_t prime() const { return den.p; }
};

RatFuncMod operator+(const RatFuncMod& a, const RatFuncMod& b);
RatFuncMod operator-(const RatFuncMod& a, const RatFuncMod& b);
RatFuncMod operator*(const RatFuncMod& a, const RatFuncMod& b);
RatFuncMod operator/(const RatFuncMod& a, const RatFuncMod& b);
RatFuncMod derivative(const RatFuncMod& a);
bool operator==(const RatFuncMod& a, const RatFuncMod& b);

} // namespace walkclass
