#include "walkclass/pcurv.hpp"

#include "walkclass/matmod.hpp"

#include <stdexcept>

namespace walkclass {

namespace {

using Mat = std::vector<std::vector<RatFuncMod>>;

struct ReducedOp {
    std::uint64_t p;
    std::vector<PolyMod> c; // size r+1, c[r] nonzero
};

bool reduce_op(const DiffOp& L, std::uint64_t p, ReducedOp& out) {
    const int r = L.order();
    if (r < 0) return false;
    out.p = p;
    out.c.clear();
    try {
        for (int i = 0; i <= r; ++i) out.c.push_back(reduce_mod(L.c[i], p));
    } catch (const std::domain_error&) {
        return false; // p divides some denominator
    }
    return !out.c[r].is_zero();
}

// V_0 = -(c_0..c_{r-1}); V_{k+1} = lc V' - (k+1) lc' V + lc shift(V) + V[r-1] V_0,
// giving D^(r+k) = V_k / lc^(k+1) mod L.
std::vector<std::vector<PolyMod>> v_rows(const ReducedOp& op, int kmax) {
    const int r = static_cast<int>(op.c.size()) - 1;
    const PolyMod& lc = op.c[r];
    const PolyMod dlc = derivative(lc);
    std::vector<std::vector<PolyMod>> v;
    std::vector<PolyMod> v0;
    for (int j = 0; j < r; ++j) v0.push_back(scal_mul(op.p - 1, op.c[j]));
    v.push_back(v0);
    for (int k = 0; k + 1 <= kmax; ++k) {
        const std::vector<PolyMod>& cur = v.back();
        std::vector<PolyMod> nxt(r, PolyMod(op.p));
        const std::uint64_t kk = (k + 1) % op.p;
        for (int j = 0; j < r; ++j) {
            PolyMod t = lc * derivative(cur[j]);
            if (kk) t = t - scal_mul(kk, dlc * cur[j]);
            if (j > 0) t = t + lc * cur[j - 1];
            t = t + cur[r - 1] * v0[j];
            nxt[j] = std::move(t);
        }
        v.push_back(std::move(nxt));
    }
    return v;
}

// B = lc^p * (p-curvature): polynomial entries, column j from D^(p+j) mod L
std::vector<std::vector<PolyMod>> scaled_matrix(const ReducedOp& op, std::uint64_t p) {
    const int r = static_cast<int>(op.c.size()) - 1;
    const PolyMod& lc = op.c[r];
    const int kmax = static_cast<int>(p) + r - 1 - r; // for column j=r-1
    auto v = v_rows(op, kmax);

    std::vector<PolyMod> lcpow{PolyMod::constant(op.p, 1)};
    for (int e = 1; e <= r; ++e) lcpow.push_back(lcpow.back() * lc);
    // lc^p needed only for tiny p < r columns
    PolyMod lcp = PolyMod::constant(op.p, 1);
    {
        std::uint64_t e = p;
        PolyMod base = lc;
        while (e) {
            if (e & 1) lcp = lcp * base;
            e >>= 1;
            if (e) base = base * base;
        }
    }

    std::vector<std::vector<PolyMod>> b(r, std::vector<PolyMod>(r, PolyMod(op.p)));
    for (int j = 0; j < r; ++j) {
        if (p + j < static_cast<std::uint64_t>(r)) {
            b[p + j][j] = lcp;
            continue;
        }
        const int k = static_cast<int>(p) + j - r;
        for (int i = 0; i < r; ++i) b[i][j] = v[k][i] * lcpow[r - 1 - j];
    }
    return b;
}

bool poly_mat_zero(const std::vector<std::vector<PolyMod>>& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

std::vector<std::vector<PolyMod>> poly_mat_mul(const std::vector<std::vector<PolyMod>>& a,
                                               const std::vector<std::vector<PolyMod>>& b,
                                               std::uint64_t p) {
    const std::size_t n = a.size();
    std::vector<std::vector<PolyMod>> c(n, std::vector<PolyMod>(n, PolyMod(p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyMod s(p);
            for (std::size_t k = 0; k < n; ++k)
                if (!a[i][k].is_zero() && !b[k][j].is_zero()) s = s + a[i][k] * b[k][j];
            c[i][j] = std::move(s);
        }
    return c;
}

// characteristic polynomial of a scalar matrix over F_p, monic ascending
std::vector<std::uint64_t> scalar_char_poly(MatrixMod m) {
    const std::size_t n = m.rows;
    const std::uint64_t p = m.p;
    // Hessenberg form by similarity
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, piv), m.at(i, c + 1));
        }
        const std::uint64_t inv = inv_mod(m.at(c + 1, c), p);
        for (std::size_t i = c + 2; i < n; ++i) {
            const std::uint64_t f = mul_mod(m.at(i, c), inv, p);
            if (!f) continue;
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = sub_mod(m.at(i, j), mul_mod(f, m.at(c + 1, j), p), p);
            for (std::size_t i2 = 0; i2 < n; ++i2)
                m.at(i2, c + 1) = add_mod(m.at(i2, c + 1), mul_mod(f, m.at(i2, i), p), p);
        }
    }
    // chi_k = (T - h[k-1][k-1]) chi_{k-1} - sum_j h[j][k-1] prod(subdiag) chi_j
    std::vector<std::vector<std::uint64_t>> chi(n + 1);
    chi[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint64_t> cur(k + 1, 0);
        const std::uint64_t d = m.at(k - 1, k - 1);
        for (std::size_t i = 0; i < chi[k - 1].size(); ++i) {
            cur[i + 1] = add_mod(cur[i + 1], chi[k - 1][i], p);
            cur[i] = sub_mod(cur[i], mul_mod(d, chi[k - 1][i], p), p);
        }
        std::uint64_t prod = 1;
        for (std::size_t j = k - 1; j-- > 0;) {
            prod = mul_mod(prod, m.at(j + 1, j), p);
            if (!prod) break;
            const std::uint64_t f = mul_mod(prod, m.at(j, k - 1), p);
            if (!f) continue;
            for (std::size_t i = 0; i < chi[j].size(); ++i)
                cur[i] = sub_mod(cur[i], mul_mod(f, chi[j][i], p), p);
        }
        chi[k] = std::move(cur);
    }
    return chi[n];
}

// cheap certain rejection: a nilpotent polynomial matrix evaluates to a
// nilpotent scalar matrix at every point
bool prescreen_not_nilpotent(const std::vector<std::vector<PolyMod>>& b,
                             std::uint64_t p) {
    const std::size_t n = b.size();
    const std::uint64_t tries = std::min<std::uint64_t>(p, 8);
    for (std::uint64_t theta = 0; theta < tries; ++theta) {
        MatrixMod m(p, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = poly_eval(b[i][j], theta);
        auto chi = scalar_char_poly(m);
        for (std::size_t i = 0; i + 1 < chi.size(); ++i)
            if (chi[i] != 0) return true;
    }
    return false;
}

} // namespace

PCurvature p_curvature(const DiffOp& L, std::uint64_t p) {
    PCurvature res;
    res.p = p;
    const int r = L.order();
    if (r <= 0) {
        res.good = true;
        res.nilpotent = true;
        res.zero = true;
        return res;
    }
    ReducedOp op;
    if (!reduce_op(L, p, op)) return res;
    res.good = true;

    auto b = scaled_matrix(op, p);
    if (poly_mat_zero(b)) {
        res.zero = true;
        res.nilpotent = true;
        return res;
    }
    if (prescreen_not_nilpotent(b, p)) return res;

    // square until the exponent reaches the matrix size
    int e = 1;
    while (e < r) {
        b = poly_mat_mul(b, b, op.p);
        e *= 2;
        if (poly_mat_zero(b)) {
            res.nilpotent = true;
            return res;
        }
    }
    return res;
}

std::vector<std::vector<RatFuncMod>> p_curvature_matrix(const DiffOp& L,
                                                        std::uint64_t p) {
    const int r = L.order();
    if (r <= 0) throw std::invalid_argument("operator order must be positive");
    ReducedOp op;
    if (!reduce_op(L, p, op)) throw std::domain_error("bad prime for this operator");

    Mat a(r, std::vector<RatFuncMod>(r, RatFuncMod::zero(p)));
    const PolyMod& lc = op.c[r];
    std::vector<std::vector<PolyMod>> v;
    if (p + r - 1 >= static_cast<std::uint64_t>(r))
        v = v_rows(op, static_cast<int>(p) - 1);
    for (int j = 0; j < r; ++j) {
        if (p + j < static_cast<std::uint64_t>(r)) {
            a[p + j][j] = RatFuncMod::one(p);
            continue;
        }
        const int k = static_cast<int>(p) + j - r;
        PolyMod den = PolyMod::constant(p, 1);
        for (int e = 0; e <= k; ++e) den = den * lc;
        for (int i = 0; i < r; ++i) a[i][j] = RatFuncMod(v[k][i], den);
    }
    return a;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    const std::uint64_t p = a[0][0].prime();
    Mat c(n, std::vector<RatFuncMod>(n, RatFuncMod::zero(p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatFuncMod s = RatFuncMod::zero(p);
            for (std::size_t k = 0; k < n; ++k)
                if (!a[i][k].is_zero() && !b[k][j].is_zero()) s = s + a[i][k] * b[k][j];
            c[i][j] = std::move(s);
        }
    return c;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

std::vector<RatFuncMod> char_poly(Mat m) {
    const std::size_t n = m.size();
    if (n == 0) return {RatFuncMod()};
    const std::uint64_t p = m[0][0].prime();
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            std::swap(m[piv], m[c + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][piv], m[i][c + 1]);
        }
        for (std::size_t i = c + 2; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            RatFuncMod f = m[i][c] / m[c + 1][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[c + 1][j];
            for (std::size_t i2 = 0; i2 < n; ++i2)
                m[i2][c + 1] = m[i2][c + 1] + f * m[i2][i];
        }
    }
    std::vector<std::vector<RatFuncMod>> chi(n + 1);
    chi[0] = {RatFuncMod::one(p)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<RatFuncMod> cur(k + 1, RatFuncMod::zero(p));
        for (std::size_t i = 0; i < chi[k - 1].size(); ++i) {
            cur[i + 1] = cur[i + 1] + chi[k - 1][i];
            cur[i] = cur[i] - m[k - 1][k - 1] * chi[k - 1][i];
        }
        RatFuncMod prod = RatFuncMod::one(p);
        for (std::size_t j = k - 1; j-- > 0;) {
            prod = prod * m[j + 1][j];
            if (prod.is_zero()) break;
            RatFuncMod f = prod * m[j][k - 1];
            if (f.is_zero()) continue;
            for (std::size_t i = 0; i < chi[j].size(); ++i)
                cur[i] = cur[i] - f * chi[j][i];
        }
        chi[k] = std::move(cur);
    }
    return chi[n];
}

} // namespace walkclass
