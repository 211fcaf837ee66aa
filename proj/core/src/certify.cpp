#include "walkclass/certify.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace walkclass {

namespace {

std::size_t digits10(const Int& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 10);
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

const std::vector<PolyQ>& payload_polys(const Guessed& g) {
    if (const auto* L = std::get_if<DiffOp>(&g)) return L->c;
    if (const auto* R = std::get_if<RecOp>(&g)) return R->p;
    return std::get<AlgEq>(g).c;
}

int payload_unknowns(const Guessed& g) {
    int maxdeg = 0;
    const auto& polys = payload_polys(g);
    for (const PolyQ& c : polys) maxdeg = std::max(maxdeg, c.degree());
    return static_cast<int>(polys.size()) * (maxdeg + 1);
}

std::size_t payload_digits(const Guessed& g) {
    std::size_t total = 0;
    for (const PolyQ& c : payload_polys(g))
        for (int j = 0; j <= c.degree(); ++j) {
            const Rat q = c.coeff(j);
            total += digits10(q.get_num());
            if (q.get_den() != 1) total += digits10(q.get_den());
        }
    return total;
}

bool payload_annihilates(const Guessed& g, const std::vector<Int>& a) {
    if (const auto* L = std::get_if<DiffOp>(&g)) return annihilates(*L, a);
    if (const auto* R = std::get_if<RecOp>(&g)) return annihilates(*R, a);
    return annihilates(std::get<AlgEq>(g), a);
}

std::uint64_t next_prime_u64(std::uint64_t p) {
    Int z(static_cast<unsigned long>(p));
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    return z.get_ui();
}

} // namespace

const char* status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "inconclusive";
    }
}

bool SieveReport::overall() const {
    const Verdict* v[4] = {&size, &extension, &analytic, &arithmetic};
    int passes = 0;
    for (const Verdict* x : v) {
        if (x->failed()) return false;
        if (x->passed()) ++passes;
    }
    return passes >= 3;
}

Verdict size_sieve(const Guessed& g, const std::vector<Int>& series, double theta,
                   bool stabilized) {
    Verdict v;
    if (!stabilized) {
        v.status = Status::fail;
        v.evidence = "modular reconstruction never stabilized";
        return v;
    }
    std::size_t term_digits = 0;
    for (const Int& x : series) term_digits = std::max(term_digits, digits10(x));
    const int unknowns = payload_unknowns(g);
    const std::size_t got = payload_digits(g);
    const double budget = theta * unknowns * static_cast<double>(term_digits);
    std::ostringstream ev;
    ev << "coefficient digits " << got << (got <= budget ? " within" : " exceed")
       << " budget " << budget << " (theta " << theta << ", " << unknowns
       << " unknowns, terms up to " << term_digits << " digits)";
    v.status = got <= budget ? Status::pass : Status::fail;
    v.evidence = ev.str();
    return v;
}

Verdict extension_sieve(const Guessed& g, const std::vector<Int>& extended,
                        int terms_used) {
    Verdict v;
    if (static_cast<int>(extended.size()) <= terms_used) {
        v.status = Status::inconclusive;
        v.evidence = "no terms beyond the guessing window";
        return v;
    }
    std::ostringstream ev;
    if (payload_annihilates(g, extended)) {
        v.status = Status::pass;
        ev << "annihilates the series recomputed to " << extended.size() << " terms";
    } else {
        v.status = Status::fail;
        ev << "fails on the series recomputed to " << extended.size()
           << " terms (guessed from " << terms_used << ")";
    }
    v.evidence = ev.str();
    return v;
}

Verdict analytic_sieve(const DiffOp& L) {
    Verdict v;
    const AnalyticReport rep = analyze_analytic(L);
    for (const PlaceReport& pl : rep.places) {
        if (!pl.regular) {
            v.status = Status::fail;
            v.evidence = "irregular singular place " + pl.label();
            return v;
        }
        if (!pl.all_exponents_rational) {
            v.status = Status::fail;
            v.evidence = "irrational exponents at place " + pl.label() +
                         ", indicial " + to_string(pl.indicial, "x");
            return v;
        }
    }
    std::ostringstream ev;
    ev << "Fuchsian; exponents";
    for (const PlaceReport& pl : rep.places) {
        ev << " " << pl.label() << ":{";
        for (std::size_t i = 0; i < pl.exponents.size(); ++i) {
            ev << (i ? "," : "") << rat_str(pl.exponents[i].first);
            if (pl.exponents[i].second > 1) ev << "^" << pl.exponents[i].second;
        }
        ev << "}";
    }
    v.status = Status::pass;
    v.evidence = ev.str();
    return v;
}

Verdict arithmetic_sieve(const DiffOp& L, int K, double* zero_fraction) {
    Verdict v;
    int tested = 0, zero = 0;
    std::uint64_t p = 2, first = 0, last = 0;
    const int scan_budget = 40 + 10 * K;
    for (int scanned = 0; tested < K && scanned < scan_budget; ++scanned) {
        p = next_prime_u64(p);
        const PCurvature pc = p_curvature(L, p);
        if (!pc.good) continue;
        if (!tested) first = p;
        last = p;
        ++tested;
        if (pc.zero) ++zero;
        if (!pc.nilpotent) {
            if (zero_fraction) *zero_fraction = zero / static_cast<double>(tested);
            v.status = Status::fail;
            std::ostringstream ev;
            ev << "non-nilpotent p-curvature at p=" << p;
            v.evidence = ev.str();
            return v;
        }
    }
    if (zero_fraction) *zero_fraction = tested ? zero / static_cast<double>(tested) : 0.0;
    std::ostringstream ev;
    if (tested < K) {
        v.status = Status::inconclusive;
        ev << "only " << tested << " good primes within the scan budget";
    } else {
        v.status = Status::pass;
        ev << "nilpotent at " << K << " good primes " << first << ".." << last
           << "; zero curvature at " << zero << "/" << K;
    }
    v.evidence = ev.str();
    return v;
}

SieveReport certify(const Guessed& g, const CertifyContext& ctx) {
    const DiffOp* L = std::get_if<DiffOp>(&g);
    if (!L) L = ctx.companion_ode;

    auto size_f = std::async(std::launch::async, [&] {
        return size_sieve(g, ctx.series, ctx.theta, ctx.stabilized);
    });
    auto ext_f = std::async(std::launch::async, [&] {
        return extension_sieve(g, ctx.extended, static_cast<int>(ctx.series.size()));
    });
    std::future<Verdict> ana_f, ari_f;
    double zero_fraction = 0.0;
    if (L) {
        ana_f = std::async(std::launch::async, [&] { return analytic_sieve(*L); });
        ari_f = std::async(std::launch::async, [&] {
            return arithmetic_sieve(*L, ctx.sieve_primes, &zero_fraction);
        });
    }

    SieveReport rep;
    rep.size = size_f.get();
    rep.extension = ext_f.get();
    if (L) {
        rep.analytic = ana_f.get();
        rep.arithmetic = ari_f.get();
    } else {
        rep.analytic.status = rep.arithmetic.status = Status::inconclusive;
        rep.analytic.evidence = rep.arithmetic.evidence =
            "no differential operator to analyze";
    }

    // Grothendieck cross-check: an algebraic series' minimal operator should
    // have vanishing curvature at nearly every good prime.
    if (std::holds_alternative<AlgEq>(g) && L && rep.arithmetic.passed()) {
        std::ostringstream ev;
        ev << rep.arithmetic.evidence << "; zero-curvature fraction " << zero_fraction;
        if (zero_fraction < 0.8) {
            rep.arithmetic.status = Status::fail;
            ev << " below the 0.8 algebraicity oracle";
        } else {
            ev << " meets the 0.8 algebraicity oracle";
        }
        rep.arithmetic.evidence = ev.str();
    }
    return rep;
}

} // namespace walkclass
