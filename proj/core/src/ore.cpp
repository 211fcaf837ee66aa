#include "walkclass/ore.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walkclass {

namespace {

void trim_top(std::vector<PolyQ>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Scale a coefficient stack by the positive rational that makes it jointly
// integer and primitive; flip sign so the top polynomial has positive lc.
void make_primitive(std::vector<PolyQ>& v) {
    Int den_lcm = 1;
    for (const PolyQ& p : v)
        for (const Rat& q : p.c)
            if (q != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                q.get_den().get_mpz_t());
    Int g = 0;
    for (const PolyQ& p : v)
        for (const Rat& q : p.c)
            if (q != 0) {
                Int z = q.get_num() * (den_lcm / q.get_den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
            }
    if (g == 0) return;
    Rat scale(den_lcm, g);
    scale.canonicalize();
    if (!v.empty() && !v.back().is_zero() && v.back().lc() < 0) scale = -scale;
    for (PolyQ& p : v) p = scale * p;
}

PolyQ stack_content(const std::vector<PolyQ>& v) {
    PolyQ g;
    for (const PolyQ& p : v) g = poly_gcd(g, p);
    return g;
}

void divide_out(std::vector<PolyQ>& v, const PolyQ& g) {
    if (g.degree() < 1) return;
    for (PolyQ& p : v) {
        auto [q, r] = poly_divrem(p, g);
        if (!r.is_zero()) throw std::logic_error("content division not exact");
        p = q;
    }
}

Int falling(const Int& m, int i) {
    Int f = 1;
    for (int j = 0; j < i; ++j) f *= m - j;
    return f;
}

} // namespace

int DiffOp::order() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (!c[i].is_zero()) return i;
    return -1;
}
int DiffOp::degree() const {
    int d = -1;
    for (const PolyQ& p : c) d = std::max(d, p.degree());
    return d;
}
bool DiffOp::zero() const { return order() < 0; }

int RecOp::order() const {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}
int RecOp::degree() const {
    int d = -1;
    for (const PolyQ& q : p) d = std::max(d, q.degree());
    return d;
}
bool RecOp::zero() const { return order() < 0; }

int AlgEq::ydeg() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (!c[i].is_zero()) return i;
    return -1;
}
int AlgEq::tdeg() const {
    int d = -1;
    for (const PolyQ& p : c) d = std::max(d, p.degree());
    return d;
}
bool AlgEq::zero() const { return ydeg() < 0; }

DiffOp normalize(const DiffOp& L) {
    DiffOp out = L;
    trim_top(out.c);
    make_primitive(out.c);
    return out;
}

RecOp normalize(const RecOp& R) {
    RecOp out = R;
    trim_top(out.p);
    // drop vanished bottom shifts: p_0 = 0 means the relation only constrains
    // a(n+1).., i.e. the same recurrence one index later
    while (!out.p.empty() && out.p.front().is_zero()) {
        out.p.erase(out.p.begin());
        for (PolyQ& q : out.p) q = poly_shift(q, Rat(-1));
        out.n0 += 1;
    }
    PolyQ g = stack_content(out.p);
    if (g.degree() >= 1) {
        divide_out(out.p, g);
        // the reduced relation can fail at integer roots of the factor we lost
        for (const auto& [root, mult] : rational_roots(g)) {
            (void)mult;
            if (root.get_den() == 1 && root >= out.n0) {
                if (root > 1000000000)
                    throw std::logic_error("absurd integer root in recurrence content");
                out.n0 = static_cast<int>(root.get_num().get_si()) + 1;
            }
        }
    }
    make_primitive(out.p);
    return out;
}

AlgEq normalize(const AlgEq& P) {
    AlgEq out = P;
    trim_top(out.c);
    divide_out(out.c, stack_content(out.c));
    make_primitive(out.c);
    return out;
}

bool annihilates(const DiffOp& L, const std::vector<Int>& a) {
    const int r = L.order();
    if (r < 0) return true;
    const int N = static_cast<int>(a.size());
    if (N - r <= 0) return true;
    for (int M = 0; M <= N - 1 - r; ++M) {
        Rat acc = 0;
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j <= std::min(L.c[i].degree(), M); ++j) {
                const Rat& cij = L.c[i].c[j];
                if (cij == 0) continue;
                const int idx = M - j + i;
                acc += cij * Rat(falling(Int(idx), i) * a[idx]);
            }
        if (acc != 0) return false;
    }
    return true;
}

bool annihilates(const RecOp& R, const std::vector<Int>& a) {
    const int r = R.order();
    if (r < 0) return true;
    const int N = static_cast<int>(a.size());
    for (int n = std::max(R.n0, 0); n + r <= N - 1; ++n) {
        Rat acc = 0;
        for (int s = 0; s <= r; ++s)
            if (!R.p[s].is_zero()) acc += poly_eval(R.p[s], Rat(n)) * Rat(a[n + s]);
        if (acc != 0) return false;
    }
    return true;
}

bool annihilates(const AlgEq& P, const std::vector<Int>& a) {
    const int k = P.ydeg();
    if (k < 0) return true;
    const int N = static_cast<int>(a.size());
    AlgEq Q = normalize(P); // integer coefficients
    std::vector<Int> acc(N, 0);
    for (int m = 0; m <= Q.c[k].degree() && m < N; ++m)
        acc[m] = Q.c[k].c[m].get_num();
    std::vector<Int> tmp(N);
    for (int i = k - 1; i >= 0; --i) {
        for (int m = 0; m < N; ++m) {
            Int s = 0;
            for (int j = 0; j <= m; ++j)
                if (acc[j] != 0 && a[m - j] != 0) s += acc[j] * a[m - j];
            tmp[m] = s;
        }
        std::swap(acc, tmp);
        for (int m = 0; m <= Q.c[i].degree() && m < N; ++m)
            acc[m] += Q.c[i].c[m].get_num();
    }
    for (const Int& v : acc)
        if (v != 0) return false;
    return true;
}

RecOp ode_to_rec(const DiffOp& L) {
    const int r = L.order();
    if (r < 0) return RecOp{};
    const int d = L.degree();
    // t^j D^i contributes c_{i,j} (M-j+i)_i a(M-j+i) at t^M; shift index range
    // i-j in [-d, r] up to 0..r+d
    std::vector<PolyQ> p(r + d + 1);
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= L.c[i].degree(); ++j) {
            const Rat& cij = L.c[i].c[j];
            if (cij == 0) continue;
            // with n = M - d the term lands at shift s = d + i - j and the
            // falling factorial (M+i-j)_i becomes (n+s)(n+s-1)...(n+s-i+1)
            const int s = d + i - j;
            PolyQ f = PolyQ::constant(cij);
            for (int u = 0; u < i; ++u)
                f = f * PolyQ({Rat(s - u), Rat(1)});
            p[s] = p[s] + f;
        }
    RecOp out;
    out.p = std::move(p);
    out.n0 = 0; // every referenced index n+s is then nonnegative
    return normalize(out);
}

std::vector<Int> extend_sequence(const RecOp& R, const std::vector<Int>& a, int len) {
    const int r = R.order();
    if (r < 0) throw std::invalid_argument("cannot extend with the zero recurrence");
    std::vector<Int> out = a;
    out.reserve(len);
    while (static_cast<int>(out.size()) < len) {
        const int m = static_cast<int>(out.size());
        const int n = m - r;
        if (n < R.n0)
            throw std::domain_error("recurrence starts at n0=" + std::to_string(R.n0) +
                                    ", cannot reach index " + std::to_string(m));
        Rat lead = poly_eval(R.p[r], Rat(n));
        if (lead == 0)
            throw std::domain_error("leading coefficient vanishes at n=" +
                                    std::to_string(n));
        Rat acc = 0;
        for (int s = 0; s < r; ++s)
            if (!R.p[s].is_zero()) acc += poly_eval(R.p[s], Rat(n)) * Rat(out[n + s]);
        Rat next = -acc / lead;
        if (next.get_den() != 1)
            throw std::domain_error("non-integer extension at index " + std::to_string(m));
        out.push_back(Int(next.get_num()));
    }
    return out;
}

namespace {

// rows[i] = D^i * B as a polynomial-coefficient operator
std::vector<std::vector<PolyQ>> d_power_rows(const DiffOp& B, int imax) {
    std::vector<std::vector<PolyQ>> rows;
    rows.push_back(B.c);
    for (int i = 1; i <= imax; ++i) {
        const std::vector<PolyQ>& prev = rows.back();
        std::vector<PolyQ> nxt(prev.size() + 1);
        for (std::size_t j = 0; j < prev.size(); ++j) {
            nxt[j] = nxt[j] + derivative(prev[j]);
            nxt[j + 1] = nxt[j + 1] + prev[j];
        }
        rows.push_back(std::move(nxt));
    }
    return rows;
}

} // namespace

DiffOp mul(const DiffOp& A, const DiffOp& B) {
    if (A.zero() || B.zero()) return DiffOp{};
    auto rows = d_power_rows(B, A.order());
    DiffOp out;
    out.c.assign(A.order() + B.order() + 1, PolyQ{});
    for (int i = 0; i <= A.order(); ++i) {
        if (A.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            out.c[j] = out.c[j] + A.c[i] * rows[i][j];
    }
    trim_top(out.c);
    return out;
}

RatFuncQ::RatFuncQ() : num(), den(PolyQ::constant(Rat(1))) {}

RatFuncQ::RatFuncQ(PolyQ n, PolyQ d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) {
        den = PolyQ::constant(Rat(1));
        return;
    }
    PolyQ g = poly_gcd(num, den);
    if (g.degree() >= 1) {
        num = poly_divrem(num, g).first;
        den = poly_divrem(den, g).first;
    }
    Rat inv_lc = Rat(1) / den.lc();
    num = inv_lc * num;
    den = inv_lc * den;
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num * b.den - b.num * a.den, a.den * b.den);
}
RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    return RatFuncQ(a.num * b.num, a.den * b.den);
}
RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
    if (b.zero()) throw std::domain_error("division by zero rational function");
    return RatFuncQ(a.num * b.den, a.den * b.num);
}

DiffOpF to_fractions(const DiffOp& L) {
    DiffOpF out;
    out.reserve(L.c.size());
    for (const PolyQ& p : L.c) out.emplace_back(p);
    return out;
}

DiffOp clear_denominators(const DiffOpF& L) {
    PolyQ l = PolyQ::constant(Rat(1));
    for (const RatFuncQ& f : L)
        if (!f.zero()) {
            PolyQ g = poly_gcd(l, f.den);
            l = l * poly_divrem(f.den, g).first;
        }
    DiffOp out;
    out.c.reserve(L.size());
    for (const RatFuncQ& f : L)
        out.c.push_back(f.zero() ? PolyQ{} : f.num * poly_divrem(l, f.den).first);
    trim_top(out.c);
    divide_out(out.c, stack_content(out.c));
    make_primitive(out.c);
    return out;
}

std::pair<DiffOpF, DiffOpF> right_divmod(const DiffOp& A, const DiffOp& B) {
    const int rb = B.order();
    if (rb < 0) throw std::domain_error("right division by zero operator");
    auto trim = [](DiffOpF& v) {
        while (!v.empty() && v.back().zero()) v.pop_back();
    };
    DiffOpF R = to_fractions(A);
    trim(R);
    const int ra = static_cast<int>(R.size()) - 1;
    if (ra < rb) return {DiffOpF{}, R};
    DiffOpF Q(ra - rb + 1);
    auto rows = d_power_rows(B, ra - rb);
    while (static_cast<int>(R.size()) - 1 >= rb) {
        const int k = static_cast<int>(R.size()) - 1 - rb;
        RatFuncQ q = R.back() / RatFuncQ(B.c[rb]);
        Q[k] = q;
        for (std::size_t j = 0; j < rows[k].size(); ++j)
            R[j] = R[j] - q * RatFuncQ(rows[k][j]);
        trim(R);
    }
    return {Q, R};
}

DiffOp gcrd(const DiffOp& A, const DiffOp& B) {
    DiffOp a = normalize(A), b = normalize(B);
    while (!b.zero()) {
        DiffOp r = clear_denominators(right_divmod(a, b).second);
        a = b;
        b = r;
    }
    return clear_denominators(to_fractions(a));
}

namespace {

// Laurent polynomial over Q: value = sum c[k] u^(off+k)
struct Laur {
    int off = 0;
    std::vector<Rat> c;

    void trim() {
        std::size_t lo = 0;
        while (lo < c.size() && c[lo] == 0) ++lo;
        if (lo == c.size()) {
            c.clear();
            off = 0;
            return;
        }
        c.erase(c.begin(), c.begin() + lo);
        off += static_cast<int>(lo);
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
};

Laur laur_add(const Laur& a, const Laur& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    Laur out;
    out.off = std::min(a.off, b.off);
    int top = std::max(a.off + static_cast<int>(a.c.size()),
                       b.off + static_cast<int>(b.c.size()));
    out.c.assign(top - out.off, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[a.off - out.off + i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[b.off - out.off + i] += b.c[i];
    out.trim();
    return out;
}

Laur laur_mul(const Laur& a, const Laur& b) {
    if (a.zero() || b.zero()) return Laur{};
    Laur out;
    out.off = a.off + b.off;
    out.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

Laur laur_deriv(const Laur& a) {
    Laur out;
    out.off = a.off - 1;
    out.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        out.c[i] = Rat(a.off + static_cast<int>(i)) * a.c[i];
    out.trim();
    return out;
}

} // namespace

DiffOp infinity_transform(const DiffOp& L) {
    const int r = L.order();
    if (r < 0) return DiffOp{};
    // rows[i] = (-u^2 D_u)^i as sum of Laurent coefficients times D_u^j
    std::vector<std::vector<Laur>> rows(r + 1);
    rows[0] = {Laur{0, {Rat(1)}}};
    for (int i = 1; i <= r; ++i) {
        const auto& prev = rows[i - 1];
        std::vector<Laur> nxt(prev.size() + 1);
        for (std::size_t j = 0; j < prev.size(); ++j) {
            nxt[j] = laur_add(nxt[j], laur_deriv(prev[j]));
            nxt[j + 1] = laur_add(nxt[j + 1], prev[j]);
        }
        Laur mu2{2, {Rat(-1)}}; // -u^2
        for (Laur& l : nxt) l = laur_mul(mu2, l);
        rows[i] = std::move(nxt);
    }

    std::vector<Laur> total(r + 1);
    for (int i = 0; i <= r; ++i) {
        if (L.c[i].is_zero()) continue;
        Laur ci; // c_i(1/u)
        ci.off = -L.c[i].degree();
        ci.c.assign(L.c[i].c.rbegin(), L.c[i].c.rend());
        ci.trim();
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            total[j] = laur_add(total[j], laur_mul(ci, rows[i][j]));
    }

    bool any = false;
    int min_off = 0;
    for (const Laur& l : total)
        if (!l.zero()) min_off = any ? std::min(min_off, l.off) : (any = true, l.off);
    DiffOp out;
    out.c.resize(total.size());
    for (std::size_t j = 0; j < total.size(); ++j) {
        if (total[j].zero()) continue;
        std::vector<Rat> cc(total[j].off - min_off, Rat(0));
        cc.insert(cc.end(), total[j].c.begin(), total[j].c.end());
        out.c[j] = PolyQ(std::move(cc));
    }
    trim_top(out.c);
    return normalize(out);
}

namespace {

using nlohmann::json;

json coeff_rows(const std::vector<PolyQ>& v, int width) {
    json rows = json::array();
    for (const PolyQ& p : v) {
        json row = json::array();
        for (int j = 0; j < width; ++j) {
            Rat q = p.coeff(j);
            row.push_back(q.get_den() == 1 ? q.get_num().get_str() : to_string(q));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<PolyQ> rows_to_polys(const json& rows) {
    std::vector<PolyQ> v;
    for (const auto& row : rows) {
        std::vector<Rat> c;
        for (const auto& cell : row) {
            Rat q(cell.get<std::string>());
            q.canonicalize();
            c.push_back(q);
        }
        v.emplace_back(std::move(c));
    }
    return v;
}

json parse_typed(const std::string& text, const char* want) {
    json j = json::parse(text);
    if (j.at("type").get<std::string>() != want)
        throw std::runtime_error("expected operator type \"" + std::string(want) +
                                 "\", got \"" + j.at("type").get<std::string>() + "\"");
    return j;
}

} // namespace

std::string to_json(const DiffOp& L) {
    json j{{"type", "ode"}, {"order", L.order()}, {"degree", L.degree()}};
    j["coeffs"] = coeff_rows(L.c, L.degree() + 1);
    return j.dump();
}

std::string to_json(const RecOp& R) {
    json j{{"type", "rec"}, {"order", R.order()}, {"degree", R.degree()}, {"n0", R.n0}};
    j["coeffs"] = coeff_rows(R.p, R.degree() + 1);
    return j.dump();
}

std::string to_json(const AlgEq& P) {
    json j{{"type", "algeq"}, {"order", P.ydeg()}, {"degree", P.tdeg()}};
    j["coeffs"] = coeff_rows(P.c, P.tdeg() + 1);
    return j.dump();
}

DiffOp diffop_from_json(const std::string& text) {
    json j = parse_typed(text, "ode");
    DiffOp L;
    L.c = rows_to_polys(j.at("coeffs"));
    trim_top(L.c);
    return L;
}

RecOp recop_from_json(const std::string& text) {
    json j = parse_typed(text, "rec");
    RecOp R;
    R.p = rows_to_polys(j.at("coeffs"));
    R.n0 = j.value("n0", 0);
    trim_top(R.p);
    return R;
}

AlgEq algeq_from_json(const std::string& text) {
    json j = parse_typed(text, "algeq");
    AlgEq P;
    P.c = rows_to_polys(j.at("coeffs"));
    trim_top(P.c);
    return P;
}

namespace {

std::string render(const std::vector<PolyQ>& v, const char* var,
                   const std::string& gadget_open, const std::string& gadget_close,
                   bool shift_form) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(v[i], var) << ")*" << gadget_open;
        if (shift_form)
            os << "n" << (i ? "+" + std::to_string(i) : "");
        else
            os << i;
        os << gadget_close;
    }
    return first ? "0" : os.str();
}

} // namespace

std::string to_string(const DiffOp& L) { return render(L.c, "t", "D^", "", false); }
std::string to_string(const RecOp& R) {
    std::string s = render(R.p, "n", "a(", ")", true);
    return s + "  [n >= " + std::to_string(R.n0) + "]";
}
std::string to_string(const AlgEq& P) { return render(P.c, "t", "y^", "", false); }

} // namespace walkclass
