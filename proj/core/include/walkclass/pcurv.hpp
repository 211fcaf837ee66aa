#pragma once

#include "walkclass/ore.hpp"
#include "walkclass/polymod.hpp"

#include <cstdint>
#include <vector>

namespace walkclass {

// p-curvature of a differential operator at a small prime: the matrix of D^p
// acting on the quotient F_p(t)[D]/(L) in the basis 1, D, ..., D^(r-1).
// Computed by the fraction-free reduction D^(r+k) = V_k / lc^(k+1) mod L, so
// the matrix scaled by lc^p is polynomial and nilpotency can be decided by
// exact polynomial matrix powers.
struct PCurvature {
    std::uint64_t p = 0;
    bool good = false;      // leading coefficient survives reduction mod p
    bool nilpotent = false;
    bool zero = false;      // the matrix itself vanishes
};

PCurvature p_curvature(const DiffOp& L, std::uint64_t p);

// The matrix itself, entries reduced; column j holds the coordinates of
// D^(p+j) mod L. Throws if the prime is bad.
std::vector<std::vector<RatFuncMod>> p_curvature_matrix(const DiffOp& L,
                                                        std::uint64_t p);

// Dense matrix helpers over F_p(t), row-major square matrices.
std::vector<std::vector<RatFuncMod>> mat_mul(const std::vector<std::vector<RatFuncMod>>& a,
                                             const std::vector<std::vector<RatFuncMod>>& b);
bool mat_is_zero(const std::vector<std::vector<RatFuncMod>>& a);

// Characteristic polynomial, monic, coefficients ascending in the matrix
// variable: Hessenberg reduction over the fraction field.
std::vector<RatFuncMod> char_poly(std::vector<std::vector<RatFuncMod>> m);

} // namespace walkclass
