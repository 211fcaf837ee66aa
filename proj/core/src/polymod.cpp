#include "walkclass/polymod.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace walkclass {

PolyMod PolyMod::constant(std::uint64_t prime, std::uint64_t a) {
    PolyMod r(prime);
    a %= prime;
    if (a) r.c.push_back(a);
    return r;
}

void PolyMod::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyMod operator+(const PolyMod& a, const PolyMod& b) {
    PolyMod r(a.p ? a.p : b.p);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = add_mod(r.c[i], b.c[i], r.p);
    r.trim();
    return r;
}

PolyMod operator-(const PolyMod& a, const PolyMod& b) {
    PolyMod r(a.p ? a.p : b.p);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = sub_mod(r.c[i], b.c[i], r.p);
    r.trim();
    return r;
}

namespace {

// Kronecker substitution: pack coefficients into one big integer per operand,
// multiply once, read the product back out of fixed-width slots. Worth it for
// long operands over small primes, where slot carries cannot overflow.
PolyMod kronecker_mul(const PolyMod& a, const PolyMod& b) {
    const std::size_t n = a.c.size() + b.c.size() - 1;
    int slot = 64 - __builtin_clzll(a.p - 1);
    slot = 2 * slot + 64 - __builtin_clzll(std::min(a.c.size(), b.c.size()));
    slot = (slot + 31) / 32 * 32; // align slots to 32-bit lanes

    auto pack = [&](const std::vector<std::uint64_t>& c) {
        std::vector<std::uint32_t> lanes(c.size() * (slot / 32), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            lanes[i * (slot / 32)] = static_cast<std::uint32_t>(c[i]);
            if (slot >= 64 && (c[i] >> 32))
                lanes[i * (slot / 32) + 1] = static_cast<std::uint32_t>(c[i] >> 32);
        }
        Int z;
        mpz_import(z.get_mpz_t(), lanes.size(), -1, sizeof(std::uint32_t), 0, 0,
                   lanes.data());
        return z;
    };
    Int prod = pack(a.c) * pack(b.c);

    std::vector<std::uint32_t> lanes(n * (slot / 32) + 2, 0);
    std::size_t words = 0;
    mpz_export(lanes.data(), &words, -1, sizeof(std::uint32_t), 0, 0, prod.get_mpz_t());

    PolyMod r(a.p);
    r.c.resize(n);
    const int lpc = slot / 32;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 v = 0;
        for (int k = lpc; k-- > 0;) v = (v << 32) | lanes[i * lpc + k];
        r.c[i] = static_cast<std::uint64_t>(v % a.p);
    }
    r.trim();
    return r;
}

} // namespace

PolyMod operator*(const PolyMod& a, const PolyMod& b) {
    PolyMod r(a.p ? a.p : b.p);
    if (a.is_zero() || b.is_zero()) return r;
    const std::size_t na = a.c.size(), nb = b.c.size();
    // slot width check: products of min(na,nb) terms below p^2 must fit 96 bits
    if (na >= 32 && nb >= 32) {
        int pb = 64 - __builtin_clzll(r.p - 1);
        int need = 2 * pb + 64 - __builtin_clzll(std::min(na, nb));
        if (need <= 96) return kronecker_mul(a, b);
    }
    r.c.assign(na + nb - 1, 0);
    for (std::size_t i = 0; i < na; ++i) {
        std::uint64_t ai = a.c[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b.c[j]) r.c[i + j] = add_mod(r.c[i + j], mul_mod(ai, b.c[j], r.p), r.p);
        }
    }
    r.trim();
    return r;
}

PolyMod scal_mul(std::uint64_t a, const PolyMod& b) {
    PolyMod r = b;
    a %= r.p;
    if (!a) return PolyMod(b.p);
    for (auto& x : r.c) x = mul_mod(a, x, r.p);
    r.trim();
    return r;
}

bool operator==(const PolyMod& a, const PolyMod& b) { return a.c == b.c; }

std::pair<PolyMod, PolyMod> poly_divrem(const PolyMod& a, const PolyMod& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero");
    PolyMod q(a.p), r = a;
    int db = b.degree();
    if (r.degree() < db) return {q, r};
    q.c.assign(r.degree() - db + 1, 0);
    std::uint64_t binv = inv_mod(b.lc(), b.p);
    while (!r.is_zero() && r.degree() >= db) {
        std::uint64_t f = mul_mod(r.lc(), binv, b.p);
        int k = r.degree() - db;
        q.c[k] = f;
        for (int i = 0; i <= db; ++i)
            r.c[k + i] = sub_mod(r.c[k + i], mul_mod(f, b.c[i], b.p), b.p);
        r.trim();
    }
    q.trim();
    return {q, r};
}

PolyMod poly_gcd(PolyMod a, PolyMod b) {
    while (!b.is_zero()) {
        PolyMod r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

PolyMod derivative(const PolyMod& a) {
    PolyMod r(a.p);
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = mul_mod(i % a.p, a.c[i], a.p);
    r.trim();
    return r;
}

std::uint64_t poly_eval(const PolyMod& a, std::uint64_t x) {
    std::uint64_t v = 0;
    for (std::size_t i = a.c.size(); i-- > 0;)
        v = add_mod(mul_mod(v, x, a.p), a.c[i], a.p);
    return v;
}

PolyMod make_monic(PolyMod a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return scal_mul(inv_mod(a.lc(), a.p), a);
}

PolyMod reduce_mod(const PolyQ& a, std::uint64_t p) {
    PolyMod r(p);
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = mod_of_rat(a.c[i], p);
    r.trim();
    return r;
}

RatFuncMod::RatFuncMod(PolyMod n, PolyMod d) {
    if (d.is_zero()) throw std::domain_error("RatFuncMod: zero denominator");
    if (n.is_zero()) {
        num = PolyMod(d.p);
        den = PolyMod::constant(d.p, 1);
        return;
    }
    PolyMod g = poly_gcd(n, d);
    if (g.degree() > 0) {
        n = poly_divrem(n, g).first;
        d = poly_divrem(d, g).first;
    }
    std::uint64_t sc = inv_mod(d.lc(), d.p);
    num = scal_mul(sc, n);
    den = scal_mul(sc, d);
}

RatFuncMod RatFuncMod::from_poly(PolyMod n) {
    RatFuncMod r;
    r.den = PolyMod::constant(n.p, 1);
    r.num = std::move(n);
    return r;
}

RatFuncMod RatFuncMod::zero(std::uint64_t p) { return from_poly(PolyMod(p)); }
RatFuncMod RatFuncMod::one(std::uint64_t p) { return from_poly(PolyMod::constant(p, 1)); }

RatFuncMod operator+(const RatFuncMod& a, const RatFuncMod& b) {
    return RatFuncMod(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFuncMod operator-(const RatFuncMod& a, const RatFuncMod& b) {
    return RatFuncMod(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFuncMod operator*(const RatFuncMod& a, const RatFuncMod& b) {
    return RatFuncMod(a.num * b.num, a.den * b.den);
}

RatFuncMod operator/(const RatFuncMod& a, const RatFuncMod& b) {
    if (b.is_zero()) throw std::domain_error("RatFuncMod: division by zero");
    return RatFuncMod(a.num * b.den, a.den * b.num);
}

RatFuncMod derivative(const RatFuncMod& a) {
    return RatFuncMod(derivative(a.num) * a.den - a.num * derivative(a.den),
                      a.den * a.den);
}

bool operator==(const RatFuncMod& a, const RatFuncMod& b) {
    return a.num == b.num && a.den == b.den;
}

PolyMod pow_mod_poly(const PolyMod& base, const Int& e, const PolyMod& f) {
    PolyMod acc = PolyMod::constant(f.p, 1);
    PolyMod b = poly_divrem(base, f).second;
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        acc = poly_divrem(acc * acc, f).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = poly_divrem(acc * b, f).second;
    }
    return acc;
}

namespace {

// s*a + t*b = 1 for coprime a, b over F_p
std::pair<PolyMod, PolyMod> poly_xgcd(const PolyMod& a, const PolyMod& b) {
    PolyMod r0 = a, r1 = b;
    PolyMod s0 = PolyMod::constant(a.p, 1), s1 = PolyMod(a.p);
    PolyMod t0 = PolyMod(a.p), t1 = PolyMod::constant(a.p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = r1;
        r1 = r;
        PolyMod s = s0 - q * s1, t = t0 - q * t1;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if (r0.degree() != 0) throw std::domain_error("poly_xgcd: inputs not coprime");
    const std::uint64_t inv = inv_mod(r0.lc(), a.p);
    return {scal_mul(inv, s0), scal_mul(inv, t0)};
}

// equal-degree splitting of a product of distinct monic irreducible
// quadratics (Cantor-Zassenhaus with a seeded generator)
void split_quadratics(const PolyMod& q, std::mt19937_64& rng, std::vector<PolyMod>& out) {
    if (q.degree() <= 0) return;
    if (q.degree() == 2) {
        out.push_back(make_monic(q));
        return;
    }
    const std::uint64_t p = q.p;
    const Int half = (Int(static_cast<unsigned long>(p)) * Int(static_cast<unsigned long>(p)) - 1) / 2;
    for (;;) {
        PolyMod b(p);
        b.c.resize(4);
        for (auto& x : b.c) x = rng() % p;
        b.trim();
        if (b.degree() < 1) continue;
        PolyMod w = pow_mod_poly(b, half, q) - PolyMod::constant(p, 1);
        PolyMod g = poly_gcd(w, q);
        if (g.degree() > 0 && g.degree() < q.degree()) {
            split_quadratics(g, rng, out);
            split_quadratics(poly_divrem(q, g).first, rng, out);
            return;
        }
    }
}

Int center_lift(const Int& x, const Int& m) {
    Int r = x;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

} // namespace

std::vector<PolyQ> quadratic_factors(const PolyQ& a) {
    std::vector<PolyQ> out;
    if (a.degree() < 2) return out;
    PolyQ w = primitive_part(poly_divrem(a, poly_gcd(a, derivative(a))).first);
    if (w.degree() < 2) return out;
    const int dw = w.degree();

    // Mignotte-style bound on numerators of a monic quadratic factor scaled
    // by lc(w); lift until rational reconstruction is unambiguous
    Int norm2 = 0;
    for (const Rat& c : w.c) norm2 += c.get_num() * c.get_num();
    Int l2 = 1;
    mpz_sqrt(l2.get_mpz_t(), norm2.get_mpz_t());
    const Int bound = 4 * (l2 + 1) * abs(w.lc().get_num()) + 1;
    const Int target = 2 * bound * bound + 1;

    std::uint64_t p = 0;
    PolyMod wp;
    Int q = 2;
    while (p == 0) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        if (q > 100000) throw std::runtime_error("quadratic_factors: no good prime");
        const std::uint64_t qu = q.get_ui();
        if (mpz_fdiv_ui(w.lc().get_num().get_mpz_t(), qu) == 0) continue;
        PolyMod cand = reduce_mod(w, qu);
        if (poly_gcd(cand, derivative(cand)).degree() > 0) continue;
        p = qu;
        wp = std::move(cand);
    }

    // linear roots mod p, then the product of the irreducible quadratics
    std::vector<std::uint64_t> roots;
    PolyMod rest = wp;
    for (std::uint64_t x = 0; x < p; ++x)
        if (poly_eval(wp, x) == 0) {
            roots.push_back(x);
            PolyMod lin(p, {sub_mod(0, x, p), 1});
            rest = poly_divrem(rest, lin).first;
        }
    std::vector<PolyMod> cands;
    std::mt19937_64 rng(0x5eedULL);
    if (rest.degree() >= 2) {
        const Int pp = Int(static_cast<unsigned long>(p)) * Int(static_cast<unsigned long>(p));
        PolyMod xpp = pow_mod_poly(PolyMod(p, {0, 1}), pp, rest);
        PolyMod q2part = poly_gcd(xpp - PolyMod(p, {0, 1}), rest);
        split_quadratics(q2part, rng, cands);
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            PolyMod li(p, {sub_mod(0, roots[i], p), 1});
            PolyMod lj(p, {sub_mod(0, roots[j], p), 1});
            cands.push_back(li * lj);
        }

    // lift each candidate g (monic) with cofactor h, lc(h) = lc(w)
    for (const PolyMod& g0 : cands) {
        PolyMod h0 = poly_divrem(wp, g0).first;
        auto [s, t] = poly_xgcd(g0, h0);
        std::vector<Int> g(3), h(dw - 1);
        for (int i = 0; i <= 2; ++i) g[i] = g0.coeff(i);
        for (int i = 0; i <= dw - 2; ++i) h[i] = h0.coeff(i);
        Int M(static_cast<unsigned long>(p));
        const Int pz(static_cast<unsigned long>(p));
        while (M < target) {
            // e = (w - g*h) / M, everything exact over Z
            std::vector<Int> prod(dw + 1, 0);
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; j <= dw - 2; ++j) prod[i + j] += g[i] * h[j];
            std::vector<std::uint64_t> e(dw + 1, 0);
            for (int i = 0; i <= dw; ++i) {
                Int d = (w.c[i].get_num() - prod[i]) / M;
                e[i] = mod_of_int(d, p);
            }
            PolyMod ep(p, e);
            PolyMod u = poly_divrem(t * ep, g0).second;
            PolyMod v = poly_divrem(ep - u * h0, g0).first;
            for (int i = 0; i <= 1; ++i) g[i] += M * Int(center_lift(Int(u.coeff(i)), pz));
            for (int i = 0; i <= dw - 2; ++i) h[i] += M * Int(center_lift(Int(v.coeff(i)), pz));
            M *= pz;
            for (int i = 0; i <= 1; ++i) mpz_mod(g[i].get_mpz_t(), g[i].get_mpz_t(), M.get_mpz_t());
            for (int i = 0; i <= dw - 2; ++i) mpz_mod(h[i].get_mpz_t(), h[i].get_mpz_t(), M.get_mpz_t());
        }
        auto c0 = rational_reconstruct(g[0], M);
        auto c1 = rational_reconstruct(g[1], M);
        if (!c0 || !c1) continue;
        PolyQ gq{std::vector<Rat>{*c0, *c1, Rat(1)}};
        if (!poly_divrem(w, gq).second.is_zero()) continue;
        // keep only irreducible ones: discriminant not a rational square
        const Rat disc = *c1 * *c1 - 4 * *c0;
        if (disc > 0) {
            Int nd = disc.get_num() * disc.get_den();
            if (mpz_perfect_square_p(nd.get_mpz_t())) continue;
        }
        out.push_back(gq);
    }
    std::sort(out.begin(), out.end(), [](const PolyQ& x, const PolyQ& y) {
        return x.c[1] != y.c[1] ? x.c[1] < y.c[1] : x.c[0] < y.c[0];
    });
    return out;
}

} // namespace walkclass
