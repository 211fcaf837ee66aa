#include "walkclass/polyq.hpp"

#include "walkclass/polymod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walkclass {

PolyQ PolyQ::constant(const Rat& a) {
    PolyQ p;
    if (a != 0) p.c.push_back(a);
    return p;
}

PolyQ PolyQ::monomial(const Rat& a, int deg) {
    PolyQ p;
    if (a != 0) {
        p.c.assign(deg + 1, Rat(0));
        p.c[deg] = a;
    }
    return p;
}

void PolyQ::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

PolyQ operator-(const PolyQ& a) {
    PolyQ r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    PolyQ r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

PolyQ operator*(const Rat& a, const PolyQ& b) {
    if (a == 0) return {};
    PolyQ r = b;
    for (auto& x : r.c) x *= a;
    return r;
}

bool operator==(const PolyQ& a, const PolyQ& b) { return a.c == b.c; }

std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero");
    PolyQ q, r = a;
    int db = b.degree();
    if (r.degree() < db) return {q, r};
    q.c.assign(r.degree() - db + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= db) {
        Rat f = r.lc() / b.lc();
        int k = r.degree() - db;
        q.c[k] = f;
        for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat inv = Rat(1) / a.lc();
        for (auto& x : a.c) x *= inv;
    }
    return a;
}

PolyQ derivative(const PolyQ& a) {
    PolyQ r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = Rat(static_cast<long>(i)) * a.c[i];
    r.trim();
    return r;
}

Rat poly_eval(const PolyQ& a, const Rat& x) {
    Rat v(0);
    for (std::size_t i = a.c.size(); i-- > 0;) v = v * x + a.c[i];
    return v;
}

PolyQ poly_pow(const PolyQ& a, unsigned e) {
    PolyQ r = PolyQ::constant(1), base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

PolyQ poly_shift(const PolyQ& a, const Rat& s) {
    // a(x+s) via Taylor coefficients a^{(k)}(s)/k!
    PolyQ r;
    r.c.assign(a.c.size(), Rat(0));
    PolyQ d = a;
    Rat fact(1);
    for (std::size_t k = 0; k < a.c.size(); ++k) {
        if (k) {
            d = derivative(d);
            fact *= Rat(static_cast<long>(k));
        }
        r.c[k] = poly_eval(d, s) / fact;
    }
    r.trim();
    return r;
}

PolyQ primitive_part(const PolyQ& a) {
    if (a.is_zero()) return {};
    Int den_lcm = 1;
    for (const auto& x : a.c) {
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        den_lcm = den_lcm / g * x.get_den();
    }
    Int content = 0;
    std::vector<Int> ints(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        ints[i] = a.c[i].get_num() * (den_lcm / a.c[i].get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
        content = g;
    }
    if (ints.back() < 0) content = -content;
    PolyQ r;
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = Rat(ints[i] / content);
    r.trim();
    return r;
}

std::vector<std::pair<PolyQ, int>> squarefree_factors(const PolyQ& a) {
    std::vector<std::pair<PolyQ, int>> out;
    if (a.degree() < 1) return out;
    PolyQ f = a;
    Rat inv = Rat(1) / f.lc();
    for (auto& x : f.c) x *= inv; // monic
    PolyQ fp = derivative(f);
    PolyQ a0 = poly_gcd(f, fp);
    PolyQ b = poly_divrem(f, a0).first;
    PolyQ c = poly_divrem(fp, a0).first;
    PolyQ d = c - derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        PolyQ g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = poly_divrem(b, g).first;
        c = poly_divrem(d, g).first;
        d = c - derivative(b);
        ++i;
    }
    return out;
}

namespace {

// Horner evaluation of an integer-coefficient polynomial at x modulo M.
Int eval_int_mod(const PolyQ& w, const Int& x, const Int& M) {
    Int v = 0;
    for (int i = w.degree(); i >= 0; --i) {
        v = v * x + w.c[i].get_num();
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    }
    return v;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots(const PolyQ& a) {
    std::vector<std::pair<Rat, int>> out;
    if (a.degree() < 1) return out;
    PolyQ f = primitive_part(a);
    // factor out roots at 0
    int zero_mult = 0;
    while (!f.is_zero() && f.c[0] == 0) {
        f.c.erase(f.c.begin());
        ++zero_mult;
    }
    if (zero_mult) out.emplace_back(Rat(0), zero_mult);

    auto take = [&](const Rat& r) {
        int mult = 0;
        PolyQ lin{std::vector<Rat>{-r, Rat(1)}};
        while (true) {
            auto [quo, rem] = poly_divrem(f, lin);
            if (!rem.is_zero()) break;
            f = quo;
            ++mult;
        }
        if (mult) out.emplace_back(r, mult);
    };

    if (f.degree() >= 1) {
        // A root u/v in lowest terms has u | f(0), v | lc(f), but enumerating
        // those divisors means factoring coefficients that can run to
        // hundreds of digits. Instead brute-force the roots of the squarefree
        // part modulo a small prime, Hensel-lift each one quadratically past
        // 2 * max(|f(0)|, |lc|)^2 and reconstruct the rational it shadows.
        PolyQ w = primitive_part(poly_divrem(f, poly_gcd(f, derivative(f))).first);
        const PolyQ wd = derivative(w);
        Int A = w.c[0].get_num();
        mpz_abs(A.get_mpz_t(), A.get_mpz_t());
        Int L = w.lc().get_num();
        mpz_abs(L.get_mpz_t(), L.get_mpz_t());
        if (L > A) A = L;
        const Int target = 2 * A * A + 1;

        std::uint64_t p = 0;
        PolyMod wp;
        Int q = 2;
        while (p == 0) {
            mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
            if (q > 100000) throw std::runtime_error("rational_roots: no good prime");
            const std::uint64_t qu = q.get_ui();
            if (mpz_fdiv_ui(w.lc().get_num().get_mpz_t(), qu) == 0) continue;
            PolyMod cand = reduce_mod(w, qu);
            if (poly_gcd(cand, derivative(cand)).degree() > 0) continue;
            p = qu;
            wp = std::move(cand);
        }

        for (std::uint64_t x0 = 0; x0 < p; ++x0) {
            if (poly_eval(wp, x0) != 0) continue;
            Int M(static_cast<unsigned long>(p));
            Int x(static_cast<unsigned long>(x0));
            while (M < target) {
                M *= M;
                const Int wx = eval_int_mod(w, x, M);
                const Int dwx = eval_int_mod(wd, x, M);
                Int inv;
                mpz_invert(inv.get_mpz_t(), dwx.get_mpz_t(), M.get_mpz_t());
                x -= wx * inv;
                mpz_mod(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
            }
            auto r = rational_reconstruct(x, M);
            if (r) take(*r);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

void PolyQ2::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

PolyQ bivariate_resultant(const PolyQ& m, const PolyQ2& chi) {
    // Sylvester matrix of m(s) and chi(s,x) w.r.t. s, entries in Q[x];
    // fraction-free Bareiss elimination keeps everything polynomial.
    // View chi as a polynomial in s whose coefficients are polynomials in x.
    int dm = m.degree();
    if (dm < 0) throw std::domain_error("bivariate_resultant: zero modulus");
    std::vector<PolyQ> chi_s; // coefficient of s^k as PolyQ in x
    for (int j = 0; j <= chi.degree(); ++j) {
        const PolyQ& cj = chi.c[j]; // coefficient of x^j, polynomial in s
        for (int k = 0; k <= cj.degree(); ++k) {
            if (static_cast<int>(chi_s.size()) <= k) chi_s.resize(k + 1);
            chi_s[k] = chi_s[k] + PolyQ::monomial(cj.coeff(k), j);
        }
    }
    while (!chi_s.empty() && chi_s.back().is_zero()) chi_s.pop_back();
    int dc = static_cast<int>(chi_s.size()) - 1;
    if (dc < 0) return {}; // chi == 0 → resultant 0
    if (dm == 0) {
        // Res(const, chi) = const^{deg_s chi}
        Rat v(1);
        for (int i = 0; i < dc; ++i) v *= m.c[0];
        return PolyQ::constant(v);
    }
    if (dc == 0) {
        // Res_s(m, c(x)) = c(x)^{dm}
        return poly_pow(chi_s[0], dm);
    }
    int n = dm + dc;
    std::vector<std::vector<PolyQ>> M(n, std::vector<PolyQ>(n));
    for (int i = 0; i < dc; ++i)
        for (int k = 0; k <= dm; ++k)
            M[i][i + dm - k] = PolyQ::constant(m.coeff(k));
    for (int i = 0; i < dm; ++i)
        for (int k = 0; k <= dc; ++k)
            M[dc + i][i + dc - k] = chi_s[k];
    // Bareiss
    PolyQ prev = PolyQ::constant(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!M[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return {}; // singular → resultant 0
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                PolyQ num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto [q, r] = poly_divrem(num, prev);
                if (!r.is_zero()) throw std::logic_error("bivariate_resultant: Bareiss division not exact");
                M[i][j] = q;
            }
            M[i][k] = {};
        }
        prev = M[k][k];
    }
    PolyQ res = M[n - 1][n - 1];
    if (sign < 0) res = -res;
    return res;
}

std::string to_string(const PolyQ& a, const char* var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        Rat c = a.c[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat ac = c > 0 ? c : Rat(-c);
        if (i == 0 || ac != 1) os << ac.get_str();
        if (i > 0) {
            if (ac != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace walkclass
