#include "walkclass/rational.hpp"

#include "walkclass/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace walkclass {

std::uint64_t mod_of_int(const Int& a, std::uint64_t p) {
    Int r = a % Int(p);
    if (r < 0) r += Int(p);
    return r.get_ui();
}

std::uint64_t mod_of_rat(const Rat& a, std::uint64_t p) {
    std::uint64_t den = mod_of_int(a.get_den(), p);
    if (den == 0) throw std::domain_error("mod_of_rat: denominator divisible by p");
    return mul_mod(mod_of_int(a.get_num(), p), inv_mod(den, p), p);
}

Int crt_combine(const std::vector<Int>& residues, const std::vector<Int>& moduli) {
    if (residues.size() != moduli.size() || residues.empty())
        throw std::invalid_argument("crt_combine: size mismatch");
    Int x = residues[0] % moduli[0];
    if (x < 0) x += moduli[0];
    Int m = moduli[0];
    for (std::size_t i = 1; i < residues.size(); ++i) {
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   m.get_mpz_t(), moduli[i].get_mpz_t());
        if (g != 1) throw std::domain_error("crt_combine: moduli not coprime");
        // x + m*s*(r_i - x) is ≡ x mod m and ≡ r_i mod m_i
        Int next_m = m * moduli[i];
        Int diff = residues[i] - x;
        x = (x + m * (s * diff % moduli[i])) % next_m;
        if (x < 0) x += next_m;
        m = next_m;
    }
    return x;
}

Int crt_combine(const std::vector<std::uint64_t>& residues,
                const std::vector<std::uint64_t>& moduli) {
    std::vector<Int> r(residues.begin(), residues.end());
    std::vector<Int> m(moduli.begin(), moduli.end());
    return crt_combine(r, m);
}

std::optional<Rat> rational_reconstruct(const Int& r, const Int& M) {
    if (M <= 1) return std::nullopt;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(M / 2).get_mpz_t()); // floor √(M/2)
    Int a0 = M, a1 = r % M;
    if (a1 < 0) a1 += M;
    Int t0 = 0, t1 = 1;
    while (a1 > bound) {
        Int q = a0 / a1;
        Int a2 = a0 - q * a1;
        a0 = a1; a1 = a2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    Int num = a1, den = t1;
    if (den == 0) return std::nullopt;
    if (den < 0) { num = -num; den = -den; }
    if (den > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n odd composite, not a prime power of small prime
    for (unsigned c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1;
        Int ys, g;
        unsigned long r = 1;
        const unsigned long m = 128;
        g = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    if (diff < 0) diff = -diff;
                    if (diff == 0) diff = 1;
                    q = q * diff % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                if (diff < 0) diff = -diff;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) { out.push_back(n); return; }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<Int, int>> factor_int(const Int& n) {
    Int m = n >= 0 ? n : Int(-n);
    std::vector<std::pair<Int, int>> out;
    if (m <= 1) return out;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
        if (m == 1) break;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) { m /= static_cast<unsigned long>(p); ++e; }
        if (e) out.emplace_back(Int(static_cast<unsigned long>(p)), e);
    }
    for (std::uint64_t p = 53; p < 100000 && m > 1; p += 2) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) { m /= static_cast<unsigned long>(p); ++e; }
            out.emplace_back(Int(static_cast<unsigned long>(p)), e);
        }
    }
    if (m > 1) {
        std::vector<Int> rest;
        factor_rec(m, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            out.emplace_back(rest[i], static_cast<int>(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> divisors(const Int& n, std::size_t cap) {
    auto f = factor_int(n);
    std::vector<Int> out{1};
    for (auto& [p, e] : f) {
        std::size_t base = out.size();
        if (base * (e + 1) > cap) throw std::runtime_error("divisors: too many divisors");
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Rat& q) {
    return q.get_str();
}

} // namespace walkclass
