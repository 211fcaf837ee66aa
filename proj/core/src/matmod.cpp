#include "walkclass/matmod.hpp"

#include <algorithm>

namespace walkclass {

std::vector<std::size_t> rref(MatrixMod& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(row, j));
        std::uint64_t inv = inv_mod(m.at(row, col), m.p);
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(row, j) = mul_mod(m.at(row, j), inv, m.p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            std::uint64_t f = m.at(i, col);
            if (!f) continue;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(row, j), m.p), m.p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<std::uint64_t>> nullspace_mod(const MatrixMod& m) {
    MatrixMod r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint64_t> v(m.cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = neg_mod(r.at(i, f), m.p);
        // normalize first nonzero entry to 1
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j]) {
                if (v[j] != 1) {
                    std::uint64_t inv = inv_mod(v[j], m.p);
                    for (std::size_t k = j; k < v.size(); ++k)
                        v[k] = mul_mod(v[k], inv, m.p);
                }
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<std::uint64_t>> nullspace_min_vector(const MatrixMod& m) {
    auto basis = nullspace_mod(m);
    if (basis.empty()) return std::nullopt;
    // re-echelonize the basis rows and keep the one with the latest leading column
    MatrixMod b(m.p, basis.size(), m.cols);
    for (std::size_t i = 0; i < basis.size(); ++i)
        std::copy(basis[i].begin(), basis[i].end(), b.a.begin() + i * m.cols);
    rref(b);
    std::size_t best_row = 0, best_lead = 0;
    bool found = false;
    for (std::size_t i = 0; i < b.rows; ++i) {
        std::size_t lead = m.cols;
        for (std::size_t j = 0; j < b.cols; ++j)
            if (b.at(i, j)) { lead = j; break; }
        if (lead == m.cols) continue; // zero row
        if (!found || lead > best_lead) {
            best_row = i;
            best_lead = lead;
            found = true;
        }
    }
    if (!found) return std::nullopt;
    std::vector<std::uint64_t> v(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) v[j] = b.at(best_row, j);
    return v;
}

} // namespace walkclass
