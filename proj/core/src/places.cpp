#include "walkclass/places.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace walkclass {

namespace {

constexpr int VINF = INT_MAX / 2;

PolyQ make_monic(const PolyQ& a) {
    if (a.is_zero()) return a;
    return (Rat(1) / a.lc()) * a;
}

PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

PolyQ mod_reduce(const PolyQ& a, const PolyQ& m) {
    if (a.degree() < m.degree()) return a;
    return poly_divrem(a, m).second;
}

// Uniform valuation profile of coeffs at the squarefree modulus m, splitting
// m whenever two of its factors would disagree. Appends one entry per final
// bundle: the bundle and the valuation vector.
void valuation_profile(const PolyQ& m, const std::vector<PolyQ>& coeffs,
                       std::vector<std::pair<PolyQ, std::vector<int>>>& out) {
    std::vector<int> v(coeffs.size(), VINF);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        PolyQ f = coeffs[i];
        int val = 0;
        while (!f.is_zero()) {
            PolyQ g = poly_gcd(m, f);
            if (g.degree() <= 0) break;
            if (g.degree() < m.degree()) {
                valuation_profile(g, coeffs, out);
                valuation_profile(make_monic(exact_div(m, g)), coeffs, out);
                return;
            }
            f = exact_div(f, m);
            ++val;
        }
        if (!coeffs[i].is_zero()) v[i] = val;
    }
    out.emplace_back(m, std::move(v));
}

PlaceReport analyze_bundle(const PolyQ& m, const std::vector<int>& v,
                           const std::vector<PolyQ>& coeffs) {
    PlaceReport rep;
    rep.minpoly = m;
    rep.valuations = v;
    const int r = static_cast<int>(coeffs.size()) - 1;

    rep.regular = true;
    for (int i = 0; i < r; ++i)
        if (v[i] < v[r] - (r - i)) rep.regular = false;

    int w = VINF;
    for (int i = 0; i <= r; ++i) w = std::min(w, v[i] == VINF ? VINF : v[i] - i);
    // chi(s, x) = sum over the minimal set of (c_i / m^{v_i}) m'^i (x)_i mod m
    PolyQ dm = derivative(m);
    PolyQ2 chi;
    PolyQ falling = PolyQ::constant(Rat(1)); // (x)_i built in x with s-coeffs
    std::vector<PolyQ> chi_x;                // coefficient of x^j as poly in s
    for (int i = 0; i <= r; ++i) {
        if (v[i] == VINF || v[i] - i != w) continue;
        PolyQ q = coeffs[i];
        for (int k = 0; k < v[i]; ++k) q = exact_div(q, m);
        PolyQ lead = mod_reduce(q, m);
        for (int k = 0; k < i; ++k) lead = mod_reduce(lead * dm, m);
        // multiply in (x)_i = x(x-1)...(x-i+1): coefficients over Q
        std::vector<Rat> ff{Rat(1)};
        for (int k = 0; k < i; ++k) {
            std::vector<Rat> nf(ff.size() + 1, Rat(0));
            for (std::size_t j = 0; j < ff.size(); ++j) {
                nf[j + 1] += ff[j];
                nf[j] += Rat(-k) * ff[j];
            }
            ff = std::move(nf);
        }
        if (static_cast<int>(chi_x.size()) < static_cast<int>(ff.size()))
            chi_x.resize(ff.size());
        for (std::size_t j = 0; j < ff.size(); ++j)
            chi_x[j] = chi_x[j] + ff[j] * lead;
    }
    chi.c = std::move(chi_x);
    chi.trim();

    PolyQ norm = m.degree() == 1
                     ? [&] {
                           Rat root = -m.c[0];
                           std::vector<Rat> cc;
                           for (const PolyQ& p : chi.c) cc.push_back(poly_eval(p, root));
                           return PolyQ(std::move(cc));
                       }()
                     : bivariate_resultant(m, chi);
    rep.indicial = primitive_part(norm);
    rep.exponents = rational_roots(rep.indicial);
    int found = 0;
    for (const auto& [root, mult] : rep.exponents) {
        (void)root;
        found += mult;
    }
    rep.all_exponents_rational = found == rep.indicial.degree();
    return rep;
}

} // namespace

std::string PlaceReport::label() const {
    if (at_infinity) return "t=infinity";
    if (minpoly.degree() == 1) {
        Rat root = -minpoly.c[0];
        return "t=" + to_string(root);
    }
    return to_string(primitive_part(minpoly), "t") + "=0";
}

std::vector<PlaceReport> analyze_finite_place(const DiffOp& L, const PolyQ& m) {
    const int r = L.order();
    if (r < 0) throw std::invalid_argument("zero operator has no places");
    std::vector<PolyQ> coeffs(L.c.begin(), L.c.begin() + r + 1);
    std::vector<std::pair<PolyQ, std::vector<int>>> bundles;
    valuation_profile(make_monic(m), coeffs, bundles);
    std::vector<PlaceReport> out;
    out.reserve(bundles.size());
    for (const auto& [bm, v] : bundles) out.push_back(analyze_bundle(bm, v, coeffs));
    return out;
}

AnalyticReport analyze_analytic(const DiffOp& L) {
    const int r = L.order();
    if (r < 0) throw std::invalid_argument("zero operator has no places");
    AnalyticReport rep;

    // radical of the leading coefficient; rational roots become their own
    // degree-1 places, the rest stays bundled until valuations force a split
    PolyQ lead = L.c[r];
    PolyQ radical = PolyQ::constant(Rat(1));
    for (const auto& [f, mult] : squarefree_factors(lead)) {
        (void)mult;
        radical = radical * f;
    }
    radical = make_monic(radical);

    std::vector<PlaceReport> finite;
    PolyQ rest = radical;
    for (const auto& [root, mult] : rational_roots(radical)) {
        (void)mult;
        PolyQ lin({-root, Rat(1)});
        rest = exact_div(rest, lin);
        auto sub = analyze_finite_place(L, lin);
        finite.insert(finite.end(), sub.begin(), sub.end());
    }
    if (rest.degree() >= 1) {
        auto sub = analyze_finite_place(L, rest);
        finite.insert(finite.end(), sub.begin(), sub.end());
    }
    std::sort(finite.begin(), finite.end(), [](const PlaceReport& a, const PlaceReport& b) {
        if (a.minpoly.degree() != b.minpoly.degree())
            return a.minpoly.degree() < b.minpoly.degree();
        if (a.minpoly.degree() == 1) return -a.minpoly.c[0] < -b.minpoly.c[0];
        return a.label() < b.label();
    });

    DiffOp at_inf = infinity_transform(L);
    auto inf_sub = analyze_finite_place(at_inf, PolyQ({Rat(0), Rat(1)}));
    if (inf_sub.size() != 1) throw std::logic_error("u=0 cannot split");
    inf_sub[0].at_infinity = true;
    inf_sub[0].minpoly = PolyQ{};

    rep.places = std::move(finite);
    rep.places.push_back(std::move(inf_sub[0]));
    rep.fuchsian = true;
    rep.all_exponents_rational = true;
    for (const PlaceReport& p : rep.places) {
        if (!p.regular) rep.fuchsian = false;
        if (!p.all_exponents_rational) rep.all_exponents_rational = false;
    }
    return rep;
}

} // namespace walkclass
