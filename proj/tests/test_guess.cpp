#include "doctest.h"

#include "walkclass/fixtures.hpp"
#include "walkclass/guess.hpp"
#include "walkclass/series.hpp"

using namespace walkclass;

namespace {
PolyQ poly(std::vector<long> asc) {
    std::vector<Rat> c;
    for (long v : asc) c.emplace_back(v);
    return PolyQ(std::move(c));
}
std::vector<Int> catalan(int n) {
    std::vector<Int> a{1};
    for (int k = 0; k + 1 < n; ++k) a.push_back(a.back() * 2 * (2 * k + 1) / (k + 2));
    return a;
}
} // namespace

TEST_CASE("first order patterns") {
    std::vector<Int> pow2;
    for (int n = 0; n < 30; ++n) pow2.push_back(Int(1) << n);
    GuessConfig cfg;
    cfg.max_order = 3;
    cfg.max_degree = 3;

    auto R = guess_rec(pow2, cfg);
    REQUIRE(R.has_value());
    CHECK(*R == RecOp{{poly({-2}), poly({1})}, 0});

    std::vector<Int> ones(30, 1);
    auto L = guess_ode(ones, cfg);
    REQUIRE(L.has_value());
    CHECK(L->order() == 1);
    CHECK(annihilates(*L, ones));

    std::vector<Int> fact{1};
    for (int n = 1; n < 25; ++n) fact.push_back(fact.back() * n);
    auto F = guess_rec(fact, cfg);
    REQUIRE(F.has_value());
    CHECK(*F == RecOp{{poly({-1, -1}), poly({1})}, 0}); // a(n+1) = (n+1) a(n)
}

TEST_CASE("algebraic guess recovers the Catalan equation") {
    GuessConfig cfg;
    cfg.max_order = 3;
    cfg.max_degree = 3;
    auto P = guess_algeq(catalan(40), cfg);
    REQUIRE(P.has_value());
    // t y^2 - y + 1 = 0
    CHECK(*P == AlgEq{{poly({1}), poly({-1}), poly({0, 1})}});
}

TEST_CASE("Kreweras equations from 100 terms") {
    SeriesZ f = expand_counts(StepSet::from_bits("01010001"), spec2(1, 1), 100);
    GuessConfig cfg;
    cfg.max_order = 10;
    cfg.max_degree = 20;

    GuessStats st;
    auto R = guess_rec(f.a, cfg, &st);
    REQUIRE(R.has_value());
    CHECK(*R == kreweras_rec());
    CHECK(st.primes_used >= 2);
    CHECK(st.shape_order == 6);
    CHECK(st.shape_degree == 4);
    // leading coefficient in factored form: 2 (n+6)(n+7)(2n+13)(7n+34)
    PolyQ lead = Rat(2) * (poly({6, 1}) * poly({7, 1}) * poly({13, 2}) * poly({34, 7}));
    CHECK(R->p[6] == lead);

    cfg.max_order = 6;
    cfg.max_degree = 24;
    auto L = guess_ode(f.a, cfg);
    REQUIRE(L.has_value());
    CHECK(*L == kreweras_ode());
    // leading coefficient 4 t^2 (t+1) (3t-4) (3t-1)^3 (9t^2+3t+1)
    PolyQ lc = Rat(4) * (poly({0, 0, 1}) * poly({1, 1}) * poly({-4, 3}) *
                         poly_pow(poly({-1, 3}), 3) * poly({1, 3, 9}));
    CHECK(L->c[4] == lc);

    cfg.max_order = 12;
    cfg.max_degree = 20;
    auto P = guess_algeq(f.a, cfg);
    REQUIRE(P.has_value());
    CHECK(*P == kreweras_algeq());
    CHECK(P->c[0] == poly({2, 1, 43}));
}

TEST_CASE("non-holonomic input yields nothing") {
    std::vector<Int> primes{2, 3, 5, 7};
    while (primes.size() < 60) {
        Int n = primes.back() + 1;
        while (!mpz_probab_prime_p(n.get_mpz_t(), 30)) n += 1;
        primes.push_back(n);
    }
    GuessConfig cfg;
    cfg.max_order = 3;
    cfg.max_degree = 3;
    GuessStats st;
    CHECK_FALSE(guess_rec(primes, cfg, &st).has_value());
    CHECK_FALSE(st.note.empty());
    CHECK_FALSE(guess_ode(primes, cfg).has_value());
    CHECK_FALSE(guess_algeq(primes, cfg).has_value());
}

TEST_CASE("pinned shapes manufacture truncation artefacts") {
    SeriesZ f = expand_counts(StepSet::from_bits("01010001"), spec2(1, 1), 40);
    std::vector<Int> noisy = f.a;
    noisy.back() += 1;

    GuessConfig cfg;
    cfg.margin = 0;
    cfg.max_primes = 64;
    // (5+1)(5+1) = 36 unknowns against 35 usable equations: always solvable
    auto fake = guess_rec_at(noisy, 5, 5, cfg);
    REQUIRE(fake.has_value());
    CHECK(annihilates(*fake, noisy));
    // but the honest staircase finds nothing on the corrupted data
    GuessConfig honest;
    honest.max_order = 6;
    honest.max_degree = 6;
    CHECK_FALSE(guess_rec(noisy, honest).has_value());
}

TEST_CASE("affordable degree bookkeeping") {
    // criterion sizing: 100 terms must afford the (6,4) recurrence shape
    CHECK(affordable_degree(100, 6, 32, false) >= 4);
    // and the (4,9) operator shape
    CHECK(affordable_degree(100, 4, 32, true) >= 9);
    CHECK(affordable_degree(10, 9, 32, false) < 0);
    for (int o = 0; o < 4; ++o)
        CHECK(affordable_degree(60, o, 16, false) >= affordable_degree(50, o, 16, false));
}
