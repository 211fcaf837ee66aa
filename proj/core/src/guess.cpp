#include "walkclass/guess.hpp"

#include "walkclass/matmod.hpp"
#include "walkclass/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace walkclass {

int affordable_degree(int N, int order, int margin, bool uses_shifts) {
    const int rows = uses_shifts ? N - order : N;
    return (rows - margin) / (order + 1) - 1;
}

namespace {

enum class Kind { Ode, Rec, Alg };

struct PrimeCtx {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> a;                 // series residues
    std::vector<std::vector<std::uint64_t>> ff;   // (m)_i tables, Ode
    std::vector<std::vector<std::uint64_t>> npow; // n^j tables, Rec
    std::vector<std::vector<std::uint64_t>> fpow; // f^i mod t^N, Alg
};

PrimeCtx make_ctx(Kind kind, const std::vector<Int>& a, std::uint64_t p,
                  const GuessConfig& cfg) {
    PrimeCtx ctx;
    ctx.p = p;
    const int N = static_cast<int>(a.size());
    ctx.a.resize(N);
    for (int i = 0; i < N; ++i) ctx.a[i] = mod_of_int(a[i], p);

    if (kind == Kind::Ode) {
        ctx.ff.assign(cfg.max_order + 1, std::vector<std::uint64_t>(N, 1));
        for (int i = 1; i <= cfg.max_order; ++i)
            for (int m = 0; m < N; ++m) {
                const std::int64_t f = m - i + 1;
                const std::uint64_t fm = f >= 0 ? f % p : p - ((-f) % p);
                ctx.ff[i][m] = mul_mod(ctx.ff[i - 1][m], fm % p, p);
            }
    } else if (kind == Kind::Rec) {
        ctx.npow.assign(cfg.max_degree + 1, std::vector<std::uint64_t>(N, 1));
        for (int j = 1; j <= cfg.max_degree; ++j)
            for (int n = 0; n < N; ++n)
                ctx.npow[j][n] = mul_mod(ctx.npow[j - 1][n], n % p, p);
    } else {
        ctx.fpow.assign(1, std::vector<std::uint64_t>(N, 0));
        ctx.fpow[0][0] = 1;
    }
    return ctx;
}

void ensure_power(PrimeCtx& ctx, int r) {
    while (static_cast<int>(ctx.fpow.size()) <= r) {
        const std::vector<std::uint64_t>& prev = ctx.fpow.back();
        const int N = static_cast<int>(ctx.a.size());
        std::vector<std::uint64_t> nxt(N, 0);
        for (int m = 0; m < N; ++m) {
            unsigned __int128 acc = 0;
            for (int j = 0; j <= m; ++j) {
                if (!prev[j] || !ctx.a[m - j]) continue;
                acc += static_cast<unsigned __int128>(
                           mul_mod(prev[j], ctx.a[m - j], ctx.p));
                if ((j & 1023) == 1023) acc %= ctx.p;
            }
            nxt[m] = static_cast<std::uint64_t>(acc % ctx.p);
        }
        ctx.fpow.push_back(std::move(nxt));
    }
}

// one equation row: coefficient of unknown c_{i,j} at output index M
std::uint64_t entry(Kind kind, const PrimeCtx& ctx, int M, int i, int j) {
    switch (kind) {
    case Kind::Ode:
        return M >= j ? mul_mod(ctx.ff[i][M - j + i], ctx.a[M - j + i], ctx.p) : 0;
    case Kind::Rec:
        return mul_mod(ctx.npow[j][M], ctx.a[M + i], ctx.p);
    case Kind::Alg:
        return M >= j ? ctx.fpow[i][M - j] : 0;
    }
    return 0;
}

struct ShapeSolution {
    int r = -1, d = -1;
    std::size_t leadcol = 0;
    std::vector<std::uint64_t> v;
};

std::optional<ShapeSolution> solve_shape(Kind kind, PrimeCtx& ctx, int N, int r, int d,
                                         int margin) {
    const int U = (r + 1) * (d + 1);
    const int avail = kind == Kind::Alg ? N : N - r;
    const int E = std::min(avail, U + margin);
    if (E <= 0) return std::nullopt;
    if (kind == Kind::Alg) ensure_power(ctx, r);

    MatrixMod m(ctx.p, E, U);
    for (int M = 0; M < E; ++M) {
        std::size_t col = 0;
        for (int i = r; i >= 0; --i)
            for (int j = d; j >= 0; --j) m.at(M, col++) = entry(kind, ctx, M, i, j);
    }
    auto v = nullspace_min_vector(m);
    if (!v) return std::nullopt;
    ShapeSolution s;
    s.r = r;
    s.d = d;
    s.v = std::move(*v);
    while (s.leadcol < s.v.size() && s.v[s.leadcol] == 0) ++s.leadcol;
    return s;
}

// ascending order staircase with the largest affordable degree each time
std::optional<ShapeSolution> staircase(Kind kind, PrimeCtx& ctx, int N,
                                       const GuessConfig& cfg) {
    for (int r = 1; r <= cfg.max_order; ++r) {
        const int d = std::min(cfg.max_degree,
                               affordable_degree(N, r, cfg.margin, kind != Kind::Alg));
        if (d < 0) return std::nullopt;
        auto s = solve_shape(kind, ctx, N, r, d, cfg.margin);
        if (s) return s;
    }
    return std::nullopt;
}

std::vector<PolyQ> assemble(const std::vector<Rat>& cand, int r, int d) {
    std::vector<PolyQ> out(r + 1);
    std::size_t col = 0;
    for (int i = r; i >= 0; --i) {
        std::vector<Rat> c(d + 1);
        for (int j = d; j >= 0; --j) c[j] = cand[col++];
        out[i] = PolyQ(std::move(c));
    }
    return out;
}

struct Pin {
    int r = -1, d = -1;
    bool active() const { return r >= 0; }
};

// the modular backbone shared by the three gadgets; verify() is the exact
// arbiter applied to a reconstructed candidate
template <typename Verify>
std::optional<std::vector<PolyQ>> run_guess(Kind kind, const std::vector<Int>& a,
                                            const GuessConfig& cfg, GuessStats* stats,
                                            Verify verify, Pin pin = {}) {
    const int N = static_cast<int>(a.size());
    auto note = [&](const std::string& s) {
        if (stats) stats->note = s;
    };
    bool all_zero = true;
    for (const Int& x : a)
        if (x != 0) all_zero = false;
    if (all_zero) {
        note("zero series");
        return std::nullopt;
    }
    if (affordable_degree(N, 1, cfg.margin, kind != Kind::Alg) < 0) {
        note("too few terms for any shape");
        return std::nullopt;
    }

    GuessPrimeStream ps;
    ShapeSolution shape;
    bool have_shape = false;
    std::vector<Int> crt;
    Int modulus = 1;
    int primes_used = 0, accumulated = 0, stable = 0;
    std::vector<Rat> last_cand;

    while (primes_used < cfg.max_primes) {
        const std::uint64_t p = ps.next();
        ++primes_used;
        if (stats) stats->primes_used = primes_used;
        PrimeCtx ctx = make_ctx(kind, a, p, cfg);
        auto find_shape = [&]() {
            return pin.active() ? solve_shape(kind, ctx, N, pin.r, pin.d, cfg.margin)
                                : staircase(kind, ctx, N, cfg);
        };

        std::optional<ShapeSolution> sol;
        if (!have_shape) {
            sol = find_shape();
            if (!sol) {
                note("no candidate within the order/degree budget");
                return std::nullopt;
            }
        } else {
            sol = solve_shape(kind, ctx, N, shape.r, shape.d, cfg.margin);
            if (sol && sol->leadcol > shape.leadcol) continue; // p sees a fake
            if (!sol || sol->leadcol < shape.leadcol) {
                // the accumulated primes were fooled; restart from this one
                sol = sol ? sol : find_shape();
                if (!sol) {
                    note("no candidate within the order/degree budget");
                    return std::nullopt;
                }
                have_shape = false;
            }
        }
        if (!have_shape) {
            shape = *sol;
            have_shape = true;
            crt.assign(shape.v.size(), 0);
            modulus = 1;
            accumulated = 0;
            stable = 0;
            last_cand.clear();
            if (stats) {
                stats->shape_order = shape.r;
                stats->shape_degree = shape.d;
            }
        }

        // coordinatewise CRT with the new residue vector
        std::vector<std::uint64_t> vp = sol->v;
        if (accumulated == 0) {
            for (std::size_t i = 0; i < vp.size(); ++i) crt[i] = vp[i];
            modulus = Int(p);
        } else {
            for (std::size_t i = 0; i < vp.size(); ++i)
                crt[i] = crt_combine({crt[i], Int(vp[i])}, {modulus, Int(p)});
            modulus *= Int(p);
        }
        ++accumulated;
        if (accumulated < 2) continue;

        std::vector<Rat> cand;
        cand.reserve(crt.size());
        bool ok = true;
        for (const Int& x : crt) {
            auto q = rational_reconstruct(x, modulus);
            if (!q) {
                ok = false;
                break;
            }
            cand.push_back(*q);
        }
        if (!ok) continue;
        if (!last_cand.empty() && cand == last_cand)
            ++stable;
        else {
            last_cand = cand;
            stable = 1;
        }
        if (stable < cfg.stabilization) continue;

        auto polys = assemble(cand, shape.r, shape.d);
        if (verify(polys)) return polys;
        stable = 0;
        last_cand.clear();
    }
    note(have_shape ? "reconstruction did not stabilize" : "no shape settled");
    return std::nullopt;
}

} // namespace

namespace {

std::optional<DiffOp> ode_guess(const std::vector<Int>& a, const GuessConfig& cfg,
                                GuessStats* stats, Pin pin) {
    DiffOp result;
    auto got = run_guess(
        Kind::Ode, a, cfg, stats,
        [&](const std::vector<PolyQ>& polys) {
            DiffOp L;
            L.c = polys;
            L = normalize(L);
            if (L.zero() || !annihilates(L, a)) return false;
            result = L;
            return true;
        },
        pin);
    if (!got) return std::nullopt;
    return result;
}

std::optional<RecOp> rec_guess(const std::vector<Int>& a, const GuessConfig& cfg,
                               GuessStats* stats, Pin pin) {
    RecOp result;
    auto got = run_guess(
        Kind::Rec, a, cfg, stats,
        [&](const std::vector<PolyQ>& polys) {
            RecOp R;
            R.p = polys;
            R.n0 = 0;
            R = normalize(R);
            if (R.zero() || !annihilates(R, a)) return false;
            result = R;
            return true;
        },
        pin);
    if (!got) return std::nullopt;
    return result;
}

std::optional<AlgEq> algeq_guess(const std::vector<Int>& a, const GuessConfig& cfg,
                                 GuessStats* stats, Pin pin) {
    AlgEq result;
    auto got = run_guess(
        Kind::Alg, a, cfg, stats,
        [&](const std::vector<PolyQ>& polys) {
            AlgEq P;
            P.c = polys;
            P = normalize(P);
            if (P.zero() || !annihilates(P, a)) return false;
            result = P;
            return true;
        },
        pin);
    if (!got) return std::nullopt;
    return result;
}

} // namespace

std::optional<DiffOp> guess_ode(const std::vector<Int>& a, const GuessConfig& cfg,
                                GuessStats* stats) {
    return ode_guess(a, cfg, stats, {});
}

std::optional<RecOp> guess_rec(const std::vector<Int>& a, const GuessConfig& cfg,
                               GuessStats* stats) {
    return rec_guess(a, cfg, stats, {});
}

std::optional<AlgEq> guess_algeq(const std::vector<Int>& a, const GuessConfig& cfg,
                                 GuessStats* stats) {
    return algeq_guess(a, cfg, stats, {});
}

std::optional<DiffOp> guess_ode_at(const std::vector<Int>& a, int order, int degree,
                                   const GuessConfig& cfg, GuessStats* stats) {
    return ode_guess(a, cfg, stats, Pin{order, degree});
}

std::optional<RecOp> guess_rec_at(const std::vector<Int>& a, int order, int degree,
                                  const GuessConfig& cfg, GuessStats* stats) {
    return rec_guess(a, cfg, stats, Pin{order, degree});
}

std::optional<AlgEq> guess_algeq_at(const std::vector<Int>& a, int order, int degree,
                                    const GuessConfig& cfg, GuessStats* stats) {
    return algeq_guess(a, cfg, stats, Pin{order, degree});
}

} // namespace walkclass
