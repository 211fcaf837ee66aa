#pragma once

#include "walkclass/modular.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace walkclass {

// Dense row-major matrix over F_p.
struct MatrixMod {
    std::uint64_t p = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    MatrixMod() = default;
    MatrixMod(std::uint64_t prime, std::size_t r, std::size_t c)
        : p(prime), rows(r), cols(c), a(r * c, 0) {}
    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(MatrixMod& m);

// Basis of the right nullspace {x : m x = 0}. Each basis vector is normalized
// so its first nonzero entry is 1. Deterministic: computed from the RREF,
// one vector per free column in ascending column order.
std::vector<std::vector<std::uint64_t>> nullspace_mod(const MatrixMod& m);

// The canonical "latest-support" nullspace element: re-echelonizes the basis
// (rows sorted by leading column) and returns the row whose leading column is
// maximal, normalized to leading coefficient 1. This is the nullspace vector
// with zeros in the most initial coordinates; with columns ordered from the
// biggest operator coefficients down, it is the minimal guess candidate.
// nullopt when the nullspace is trivial.
std::optional<std::vector<std::uint64_t>> nullspace_min_vector(const MatrixMod& m);

} // namespace walkclass
