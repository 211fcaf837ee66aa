#include "walkclass/asympt.hpp"

#include "walkclass/polymod.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace walkclass {

double SurdQ::approx() const {
    return a.get_d() + b.get_d() * std::sqrt(c.get_d());
}

BigFloat SurdQ::value(mpfr_prec_t prec) const {
    return BigFloat(a, prec) + BigFloat(b, prec) * sqrt(BigFloat(c, prec));
}

std::string SurdQ::str() const {
    auto rs = [](const Rat& q) {
        std::string s = q.get_str();
        return s.find('/') == std::string::npos ? s : "(" + s + ")";
    };
    if (rational()) return a.get_str();
    std::string s;
    if (a != 0) s += a.get_str() + (b > 0 ? "+" : "");
    if (b == -1)
        s += "-";
    else if (b != 1)
        s += rs(b) + "*";
    s += "sqrt(" + c.get_str() + ")";
    return s;
}

PolyQ char_poly(const RecOp& R) {
    int D = 0;
    for (const PolyQ& p : R.p) D = std::max(D, p.degree());
    std::vector<Rat> c(R.p.size());
    for (std::size_t k = 0; k < R.p.size(); ++k) c[k] = R.p[k].coeff(D);
    return PolyQ(std::move(c));
}

namespace {

// n = u^2 * c with c squarefree, by trial division; a square of a prime past
// the bound would stay inside c, which only affects the print form
std::pair<Int, Int> square_split(Int n) {
    Int u = 1, c = 1;
    Int q = 1;
    while (true) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        if (q > 100000 || q * q > n) break;
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
            n /= q;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) u *= q;
        if (e & 1) c *= q;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        u *= r;
    } else {
        c *= n;
    }
    return {u, c};
}

std::vector<double> real_roots_numeric(const PolyQ& f) {
    std::vector<double> roots;
    const int d = f.degree();
    if (d < 1) return roots;
    std::vector<double> co(d + 1);
    for (int i = 0; i <= d; ++i) co[i] = f.c[i].get_d();
    double R = 0;
    for (int i = 0; i < d; ++i) R = std::max(R, std::fabs(co[i] / co[d]));
    R += 1;
    auto ev = [&](double x) {
        double v = 0;
        for (int i = d; i >= 0; --i) v = v * x + co[i];
        return v;
    };
    const int G = 1 << 13;
    double px = -R, pv = ev(px);
    for (int g = 1; g <= G; ++g) {
        const double x = -R + 2 * R * g / G;
        const double v = ev(x);
        if (pv == 0)
            roots.push_back(px);
        else if (pv * v < 0) {
            double lo = px, hi = x;
            for (int it = 0; it < 80; ++it) {
                const double mid = (lo + hi) / 2;
                (ev(lo) * ev(mid) <= 0 ? hi : lo) = mid;
            }
            roots.push_back((lo + hi) / 2);
        }
        px = x;
        pv = v;
    }
    return roots;
}

} // namespace

RhoCandidates char_candidates(const RecOp& R) {
    RhoCandidates out;
    const PolyQ cp = char_poly(R);
    if (cp.degree() < 1) return out;
    PolyQ rem = cp;
    for (const auto& [r, mult] : rational_roots(cp)) {
        out.exact.push_back(SurdQ{r, Rat(0), Int(1)});
        PolyQ lin{std::vector<Rat>{-r, Rat(1)}};
        for (int i = 0; i < mult; ++i) rem = poly_divrem(rem, lin).first;
    }
    for (const PolyQ& g : quadratic_factors(rem)) {
        while (poly_divrem(rem, g).second.is_zero()) rem = poly_divrem(rem, g).first;
        const Rat B = g.c[1], C = g.c[0];
        const Rat disc = B * B - 4 * C;
        if (disc <= 0) continue; // complex pair, no real growth rate
        auto [u, c] = square_split(disc.get_num() * disc.get_den());
        Rat b(u, 2 * disc.get_den());
        b.canonicalize();
        const Rat half = -B / 2;
        out.exact.push_back(SurdQ{half, b, c});
        out.exact.push_back(SurdQ{half, -b, c});
    }
    out.numeric = real_roots_numeric(rem);
    return out;
}

std::optional<SurdQ> match_rho(const RhoCandidates& cands, double estimate,
                               double tol) {
    std::optional<SurdQ> best;
    double bestd = tol * std::max(1.0, std::fabs(estimate));
    for (const SurdQ& s : cands.exact) {
        const double d = std::fabs(s.approx() - estimate);
        if (d <= bestd) {
            bestd = d;
            best = s;
        }
    }
    return best;
}

namespace {

struct StridedSeq {
    std::vector<const Int*> b; // b[k] = a[off + s*k]
    int off = 0, s = 1;
};

std::optional<StridedSeq> stride_view(const std::vector<Int>& a, std::string* why) {
    std::vector<int> idx;
    for (int n = 0; n < static_cast<int>(a.size()); ++n)
        if (a[n] != 0) idx.push_back(n);
    if (idx.size() < 32) {
        if (why) *why = "support too sparse";
        return std::nullopt;
    }
    int s = 0;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        s = std::gcd(s, idx[i + 1] - idx[i]);
    if (s == 0) {
        if (why) *why = "degenerate support";
        return std::nullopt;
    }
    const int off = idx[0];
    const int expect = (static_cast<int>(a.size()) - 1 - off) / s + 1;
    if (static_cast<int>(idx.size()) != expect) {
        if (why) *why = "irregular support";
        return std::nullopt;
    }
    StridedSeq sv;
    sv.off = off;
    sv.s = s;
    sv.b.reserve(idx.size());
    for (int n : idx) sv.b.push_back(&a[n]);
    return sv;
}

// Neville extrapolation to x = 0 through the points (x[j], f[j]). With the
// substitution x = n^(-1/2) this cancels the first L-1 terms of a tail
// expansion in half-integer powers of 1/n. Values are exact rationals of the
// coefficients, so the Lagrange weights (huge for clustered tail nodes) cost
// only precision, never stability; err is the last diagonal gap.
BigFloat neville0(const std::vector<BigFloat>& x, std::vector<BigFloat> f,
                  BigFloat* err) {
    const int L = static_cast<int>(f.size());
    BigFloat prev = f[0];
    for (int m = 1; m < L; ++m) {
        for (int j = 0; j + m < L; ++j)
            f[j] = (x[j + m] * f[j] - x[j] * f[j + 1]) / (x[j + m] - x[j]);
        if (m == L - 2) prev = f[0];
    }
    if (err) *err = abs(f[0] - prev);
    return f[0];
}

// Support indices for the fit: L nodes spaced 12 apart at the very end of
// the tail (deepest asymptotic regime), k[0] largest. A fixed residue class
// mod 12 turns every oscillating component whose order divides 12 into a
// constant factor along the ladder: parity from a singularity at -rho, the
// mod-3 rotation of Kreweras-like step sets (conjugate pair of 9t^2+3t+1 on
// the same circle as t = 1/3), quarter and sixth turns. What remains is a
// smooth decaying tail the extrapolation can cancel.
std::vector<int> tail_nodes(int K, int levels) {
    std::vector<int> ks;
    if (K < 130) return ks;
    const int top = K - 3;
    const int L = std::min(std::min(levels, 12), (top - 1) / 12 + 1);
    for (int j = 0; j < L; ++j) ks.push_back(top - 12 * j);
    return ks;
}

AsymptoticFit fit_core(const std::vector<Int>& a, std::optional<SurdQ> exact,
                       double rho_d, int levels) {
    if (static_cast<int>(a.size()) < 500)
        throw std::invalid_argument("fit_asymptotics: need at least 500 terms");
    if (!(rho_d > 0)) throw std::invalid_argument("fit_asymptotics: rho must be positive");
    AsymptoticFit fit;
    fit.rho_exact = exact;
    fit.rho = rho_d;

    std::string why;
    auto sv = stride_view(a, &why);
    if (!sv) {
        fit.note = why;
        return fit;
    }
    for (const Int* x : sv->b)
        if (*x <= 0) throw std::invalid_argument("fit_asymptotics: non-positive terms");
    fit.stride = sv->s;

    const std::vector<int> ks = tail_nodes(static_cast<int>(sv->b.size()), levels);
    if (ks.size() < 4) {
        fit.note = "too few usable terms";
        return fit;
    }
    const int L = static_cast<int>(ks.size());
    const int n_top = sv->off + sv->s * ks[0];
    const mpfr_prec_t P = mpz_sizeinbase(sv->b[ks[0] + 2]->get_mpz_t(), 2) + 64 +
                          L * (64 - __builtin_clzll(n_top + 2));
    const BigFloat rho = exact ? exact->value(P) : BigFloat(rho_d, P);
    // ratios step by two support points: a second real singularity at -rho
    // puts a (-1)^n component into single-step ratios that never decays,
    // while double steps keep a fixed parity class
    const BigFloat rho_2s = pow(rho, static_cast<long>(2 * sv->s));
    const BigFloat one(Rat(1), P);

    const double est = estimate_rho(a);
    if (std::isfinite(est) && std::fabs(est - rho_d) > 1e-6 * std::max(1.0, rho_d)) {
        std::ostringstream os;
        os << "ratio limit " << est << " disagrees with rho " << rho_d;
        fit.note = os.str();
    }

    auto ladder_x = [&](int m) {
        std::vector<BigFloat> xs;
        for (int j = 0; j < L; ++j) {
            const int n = sv->off + sv->s * ks[j];
            xs.push_back(one / pow(BigFloat(Int(n), P), Rat(1, m)));
        }
        return xs;
    };
    auto alpha_ladder = [&](const std::vector<BigFloat>& xs, BigFloat* err) {
        std::vector<BigFloat> uv;
        for (int j = 0; j < L; ++j) {
            const int k = ks[j];
            const int n = sv->off + sv->s * k;
            const BigFloat q =
                BigFloat(*sv->b[k + 2], P) / (rho_2s * BigFloat(*sv->b[k], P));
            uv.push_back((q - one) * BigFloat(Rat(n, 2 * sv->s), P));
        }
        return neville0(xs, std::move(uv), err);
    };

    std::vector<BigFloat> xs = ladder_x(2);
    BigFloat aerr(P);
    BigFloat alpha = alpha_ladder(xs, &aerr);
    fit.alpha = alpha.to_double();
    fit.alpha_err = aerr.to_double();

    // Exponents with denominator 3 or 4 bring Puiseux correction terms at
    // third or quarter powers of 1/n, outside the half-integer basis. Snap
    // the exponent to a small-denominator rational and rerun the ladders in
    // x = n^(-1/m) with m covering that family; the exact snapped exponent
    // also keeps the n^alpha division in the constant ladder drift-free.
    std::optional<Rat> alpha_exact;
    if (fit.alpha_err < 1e-3) {
        for (int q : {1, 2, 3, 4, 6}) {
            const double p = std::round(fit.alpha * q);
            if (std::fabs(fit.alpha - p / q) < 1e-3) {
                alpha_exact = Rat(static_cast<long>(p), q);
                alpha_exact->canonicalize();
                break;
            }
        }
    }
    if (alpha_exact) {
        const long den = alpha_exact->get_den().get_si();
        const int m = static_cast<int>(std::lcm(2L, den));
        if (m > 2) {
            xs = ladder_x(m);
            alpha = alpha_ladder(xs, &aerr);
            fit.alpha = alpha.to_double();
            fit.alpha_err = aerr.to_double();
        }
    }
    if (fit.alpha_err > 1e-3 && fit.note.empty())
        fit.note = "exponent did not converge; oscillatory or non-standard asymptotics";

    std::vector<BigFloat> vv;
    for (int j = 0; j < L; ++j) {
        const int k = ks[j];
        const int n = sv->off + sv->s * k;
        const BigFloat nb(Int(n), P);
        vv.push_back(BigFloat(*sv->b[k], P) /
                     (pow(rho, static_cast<long>(n)) *
                      (alpha_exact ? pow(nb, *alpha_exact) : pow(nb, alpha))));
    }
    BigFloat kerr(P);
    const BigFloat kappa = neville0(xs, vv, &kerr);
    fit.kappa = kappa.to_double();
    const double rel =
        fit.kappa != 0 ? std::fabs(kerr.to_double() / fit.kappa) : 1.0;
    fit.beta_residual = rel;
    int digits = 0;
    if (rel > 0 && std::isfinite(rel))
        digits = std::max(0, std::min(17, static_cast<int>(-std::log10(rel))));
    else if (rel == 0)
        digits = 17;
    fit.kappa_stable_digits = digits;
    if (digits < 4 && fit.note.empty()) fit.note = "low kappa stability";
    return fit;
}

} // namespace

AsymptoticFit fit_asymptotics(const std::vector<Int>& a, const SurdQ& rho,
                              int levels) {
    return fit_core(a, rho, rho.approx(), levels);
}

AsymptoticFit fit_asymptotics(const std::vector<Int>& a, double rho, int levels) {
    return fit_core(a, std::nullopt, rho, levels);
}

double estimate_rho(const std::vector<Int>& a) {
    auto sv = stride_view(a, nullptr);
    if (!sv) return std::nan("");
    for (const Int* x : sv->b)
        if (*x <= 0) return std::nan("");
    const std::vector<int> ks = tail_nodes(static_cast<int>(sv->b.size()), 12);
    if (ks.size() < 4) return std::nan("");
    const int L = static_cast<int>(ks.size());
    const int n_top = sv->off + sv->s * ks[0];
    const mpfr_prec_t P = mpz_sizeinbase(sv->b[ks[0] + 2]->get_mpz_t(), 2) + 64 +
                          L * (64 - __builtin_clzll(n_top + 2));
    const BigFloat one(Rat(1), P);
    std::vector<BigFloat> xs, rv;
    for (int j = 0; j < L; ++j) {
        const int k = ks[j];
        const int n = sv->off + sv->s * k;
        xs.push_back(one / sqrt(BigFloat(Int(n), P)));
        rv.push_back(BigFloat(*sv->b[k + 2], P) / BigFloat(*sv->b[k], P));
    }
    const BigFloat rs = neville0(xs, rv, nullptr);
    if (rs.sign() <= 0) return std::nan("");
    return pow(rs, Rat(1, 2 * sv->s)).to_double();
}

// s-expression closed forms

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    std::string peek() {
        const std::size_t save = i;
        std::string t = next();
        i = save;
        return t;
    }
    std::string next() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) return "";
        if (s[i] == '(' || s[i] == ')') return std::string(1, s[i++]);
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
               s[i] != '(' && s[i] != ')')
            ++i;
        return s.substr(start, i - start);
    }
};

ClosedFormExpr parse_node(Lexer& lx) {
    using Op = ClosedFormExpr::Op;
    const std::string tok = lx.next();
    if (tok.empty()) throw std::invalid_argument("closed form: unexpected end");
    ClosedFormExpr e;
    if (tok == "(") {
        const std::string head = lx.next();
        if (head == "+")
            e.op = Op::add;
        else if (head == "-")
            e.op = Op::sub;
        else if (head == "*")
            e.op = Op::mul;
        else if (head == "/")
            e.op = Op::div;
        else if (head == "sqrt")
            e.op = Op::sqrt;
        else if (head == "pow")
            e.op = Op::pow;
        else if (head == "gamma")
            e.op = Op::gamma;
        else
            throw std::invalid_argument("closed form: unknown head '" + head + "'");
        while (lx.peek() != ")") {
            if (lx.peek().empty())
                throw std::invalid_argument("closed form: missing ')'");
            e.kids.push_back(parse_node(lx));
        }
        lx.next();
        const std::size_t n = e.kids.size();
        const bool ok = (e.op == Op::add || e.op == Op::mul) ? n >= 2
                        : (e.op == Op::sub)                  ? (n == 1 || n == 2)
                        : (e.op == Op::div || e.op == Op::pow) ? n == 2
                                                               : n == 1;
        if (!ok)
            throw std::invalid_argument("closed form: bad arity for '" + head + "'");
        return e;
    }
    if (tok == ")") throw std::invalid_argument("closed form: unexpected ')'");
    if (tok == "pi") {
        e.op = Op::pi;
        return e;
    }
    if (tok.size() == 1 && tok[0] >= 'A' && tok[0] <= 'F') {
        e.op = Op::cname;
        e.cname = tok[0];
        return e;
    }
    try {
        e.op = Op::lit;
        e.lit = Rat(tok, 10);
        e.lit.canonicalize();
    } catch (const std::exception&) {
        throw std::invalid_argument("closed form: bad atom '" + tok + "'");
    }
    return e;
}

BigFloat named_constant(char name, mpfr_prec_t P) {
    const BigFloat one(Rat(1), P);
    switch (name) {
    case 'A': return one + sqrt(BigFloat(Int(2), P));
    case 'B': return one + BigFloat(Int(2), P) * sqrt(BigFloat(Int(2), P));
    case 'C': return one + sqrt(BigFloat(Int(3), P));
    case 'D': return one + BigFloat(Int(2), P) * sqrt(BigFloat(Int(3), P));
    case 'E':
        return sqrt(BigFloat(Int(6), P) *
                    (BigFloat(Int(379), P) +
                     BigFloat(Int(156), P) * sqrt(BigFloat(Int(6), P))));
    case 'F': return one + sqrt(BigFloat(Int(6), P));
    default: throw std::invalid_argument("closed form: unknown constant");
    }
}

} // namespace

ClosedFormExpr ClosedFormExpr::parse(const std::string& sexpr) {
    Lexer lx{sexpr};
    ClosedFormExpr e = parse_node(lx);
    if (!lx.next().empty())
        throw std::invalid_argument("closed form: trailing input");
    e.text = sexpr;
    return e;
}

BigFloat ClosedFormExpr::eval(mpfr_prec_t prec) const {
    switch (op) {
    case Op::lit: return BigFloat(lit, prec);
    case Op::pi: return BigFloat::pi(prec);
    case Op::cname: return named_constant(cname, prec);
    case Op::add: {
        BigFloat r = kids[0].eval(prec);
        for (std::size_t i = 1; i < kids.size(); ++i) r = r + kids[i].eval(prec);
        return r;
    }
    case Op::sub:
        return kids.size() == 1 ? -kids[0].eval(prec)
                                : kids[0].eval(prec) - kids[1].eval(prec);
    case Op::mul: {
        BigFloat r = kids[0].eval(prec);
        for (std::size_t i = 1; i < kids.size(); ++i) r = r * kids[i].eval(prec);
        return r;
    }
    case Op::div: return kids[0].eval(prec) / kids[1].eval(prec);
    case Op::sqrt: return sqrt(kids[0].eval(prec));
    case Op::pow: return pow(kids[0].eval(prec), kids[1].eval(prec));
    case Op::gamma: return gamma(kids[0].eval(prec));
    }
    throw std::logic_error("closed form: bad node");
}

bool verify_constant(const BigFloat& kappa, const std::string& sexpr, double tol) {
    const mpfr_prec_t P = std::max<mpfr_prec_t>(kappa.prec(), 256);
    const BigFloat v = ClosedFormExpr::parse(sexpr).eval(P);
    return abs(kappa - v).to_double() <= tol;
}

} // namespace walkclass
