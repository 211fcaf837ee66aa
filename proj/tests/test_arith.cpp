#include "doctest.h"

#include "walkclass/matmod.hpp"
#include "walkclass/modular.hpp"
#include "walkclass/polymod.hpp"
#include "walkclass/polyq.hpp"
#include "walkclass/rational.hpp"

#include <algorithm>

using namespace walkclass;

namespace {
PolyQ poly(std::vector<long> asc) {
    std::vector<Rat> c;
    for (long v : asc) c.emplace_back(v);
    return PolyQ(std::move(c));
}
} // namespace

TEST_CASE("word-size modular arithmetic") {
    const std::uint64_t p = 97;
    CHECK(add_mod(96, 5, p) == 4);
    CHECK(sub_mod(3, 5, p) == 95);
    CHECK(neg_mod(0, p) == 0);
    CHECK(neg_mod(1, p) == 96);
    CHECK(mul_mod(96, 96, p) == 1);
    CHECK(pow_mod(7, 100, 101) == 1); // Fermat
    CHECK(pow_mod(5, 0, p) == 1);
    CHECK(inv_mod(3, p) == 65);       // 3*65 = 195 = 2*97 + 1
    CHECK(mul_mod(inv_mod(12345, p), 12345, p) == 1);
    CHECK_THROWS(inv_mod(0, p));
}

TEST_CASE("primality and prime streams") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561)); // Carmichael
    CHECK(is_prime_u64((1ull << 61) - 1));
    CHECK_FALSE(is_prime_u64((1ull << 62) - 1)); // (2^31-1)(2^31+1)
    CHECK(prev_prime_below(100) == 97);
    CHECK(next_prime_above(100) == 101);

    GuessPrimeStream gs;
    std::uint64_t p1 = gs.next(), p2 = gs.next();
    CHECK(is_prime_u64(p1));
    CHECK(is_prime_u64(p2));
    CHECK(p1 < (1ull << 62));
    CHECK(p2 < p1);
    GuessPrimeStream gs2; // deterministic restart
    CHECK(gs2.next() == p1);

    CHECK(sieve_primes(5) == std::vector<std::uint64_t>{3, 5, 7, 11, 13});
    SievePrimeStream ss;
    CHECK(ss.next() == 3);
    CHECK(ss.next() == 5);
}

TEST_CASE("integer and rational residues") {
    CHECK(mod_of_int(Int(-5), 7) == 2);
    CHECK(mod_of_int(Int(5), 7) == 5);
    Int big("123456789123456789123456789");
    CHECK(Int(mod_of_int(big, 97)) == big % 97);
    CHECK(Int(mod_of_int(-big, 97)) == 97 - big % 97);
    CHECK(mod_of_rat(Rat(1, 3), 97) == 65);
    CHECK_THROWS(mod_of_rat(Rat(1, 97), 97));
}

TEST_CASE("Chinese remaindering") {
    CHECK(crt_combine(std::vector<std::uint64_t>{2, 3}, {3, 5}) == 8);
    // round-trip a fixed large integer through three residues
    Int x("12345678901234567890123");
    std::vector<std::uint64_t> mods{1000000007ull, 1000000009ull, 998244353ull};
    std::vector<std::uint64_t> res;
    for (auto m : mods) res.push_back(mod_of_int(x, m));
    CHECK(crt_combine(res, mods) == x);
    CHECK_THROWS(crt_combine(std::vector<std::uint64_t>{0, 0}, {6, 9}));
}

TEST_CASE("rational reconstruction") {
    CHECK(rational_reconstruct(Int(65), Int(97)).value() == Rat(1, 3));
    // round-trip under the symmetric bound
    Int M = Int(1) << 61;
    M -= 1; // 2^61 - 1, prime
    Rat q(-22, 7);
    Int r(mod_of_rat(q, (1ull << 61) - 1));
    CHECK(rational_reconstruct(r, M).value() == q);
    CHECK(rational_reconstruct(Int(0), M).value() == Rat(0));
}

TEST_CASE("integer factorization and divisors") {
    auto f = factor_int(Int(2) * 2 * 2 * 2 * 9 * 5 * 7 * 1009);
    std::vector<std::pair<Int, int>> want{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {1009, 1}};
    CHECK(f == want);
    auto d = divisors(Int(60));
    CHECK(d.size() == 12);
    CHECK(std::is_sorted(d.begin(), d.end()));
    CHECK(d.front() == 1);
    CHECK(d.back() == 60);
}

TEST_CASE("PolyQ ring operations") {
    PolyQ x = PolyQ::monomial(Rat(1), 1);
    PolyQ one = PolyQ::constant(Rat(1));
    CHECK((x + one) * (x + one) == poly({1, 2, 1}));
    CHECK((x * x * x - one) == poly({-1, 0, 0, 1}));
    auto [q, r] = poly_divrem(poly({-1, 0, 0, 1}), poly({-1, 1}));
    CHECK(q == poly({1, 1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_gcd(poly({-1, 0, 1}), poly({1, -2, 1})) == poly({-1, 1})); // monic
    CHECK(derivative(poly({5, 3, 2})) == poly({3, 4}));
    CHECK(poly_eval(poly({1, 2, 3}), Rat(2)) == Rat(17));
    CHECK(poly_pow(poly({1, 1}), 3) == poly({1, 3, 3, 1}));
    CHECK(poly_shift(poly({0, 0, 1}), Rat(1)) == poly({1, 2, 1})); // (x+1)^2
    CHECK(PolyQ().degree() == -1);
}

TEST_CASE("primitive part, squarefree split, rational roots") {
    PolyQ a(std::vector<Rat>{Rat(1, 3), Rat(0), Rat(2, 3)});
    CHECK(primitive_part(a) == poly({1, 0, 2}));
    CHECK(primitive_part(PolyQ()) == PolyQ());
    // sign normalization: negative leading coefficient flips
    CHECK(primitive_part(poly({2, -4})) == poly({-1, 2}));

    // (x-1)^2 (x+2)
    PolyQ b = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    auto sf = squarefree_factors(b);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].first == poly({2, 1}));
    CHECK(sf[0].second == 1);
    CHECK(sf[1].first == poly({-1, 1}));
    CHECK(sf[1].second == 2);

    // (2x-1)(x+3)^2 = 2x^3 + 11x^2 + 12x - 9
    auto roots = rational_roots(poly({-9, 12, 11, 2}));
    std::sort(roots.begin(), roots.end());
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair<Rat, int>{Rat(-3), 2});
    CHECK(roots[1] == std::pair<Rat, int>{Rat(1, 2), 1});
}

TEST_CASE("bivariate resultant eliminates the parameter") {
    // chi = x - s, m = s^2 - 2: the norm of x - s is x^2 - 2
    PolyQ2 chi(std::vector<PolyQ>{poly({0, -1}), poly({1})});
    PolyQ res = bivariate_resultant(poly({-2, 0, 1}), chi);
    CHECK(primitive_part(res) == poly({-2, 0, 1}));
    // linear m: evaluation at s = 3
    PolyQ lin = bivariate_resultant(poly({-3, 1}), chi);
    CHECK(primitive_part(lin) == poly({-3, 1}));
}

TEST_CASE("PolyMod arithmetic and gcd") {
    const std::uint64_t p = 5;
    PolyMod a(p, {1, 1});       // x + 1
    PolyMod b(p, {4, 1});       // x - 1
    CHECK((a * b) == PolyMod(p, {4, 0, 1})); // x^2 - 1
    CHECK((a + b).degree() == 1);
    auto [q, r] = poly_divrem(PolyMod(p, {4, 0, 1}), a);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK(poly_gcd(PolyMod(p, {4, 0, 1}), PolyMod(p, {1, 2, 1})) == a); // monic x+1
    CHECK(poly_eval(PolyMod(p, {1, 2, 3}), 2) == (1 + 4 + 12) % 5);
    CHECK(derivative(PolyMod(p, {7 % 5, 3, 2})) == PolyMod(p, {3, 4}));

    CHECK(reduce_mod(PolyQ(std::vector<Rat>{Rat(1), Rat(1, 2)}), 5) == PolyMod(5, {1, 3}));
    CHECK_THROWS(reduce_mod(PolyQ(std::vector<Rat>{Rat(1, 5)}), 5));

    // x^5 mod (x^2 - 1) over F_3 is x
    PolyMod f(3, {2, 0, 1});
    CHECK(pow_mod_poly(PolyMod(3, {0, 1}), Int(5), f) == PolyMod(3, {0, 1}));
}

TEST_CASE("quadratic factor extraction over Q") {
    // (x^2+1)(x^2-2)(x-1)
    PolyQ a = poly({1, 0, 1}) * poly({-2, 0, 1}) * poly({-1, 1});
    auto quads = quadratic_factors(a);
    REQUIRE(quads.size() == 2);
    bool has_i = std::find(quads.begin(), quads.end(), poly({1, 0, 1})) != quads.end();
    bool has_s2 = std::find(quads.begin(), quads.end(), poly({-2, 0, 1})) != quads.end();
    CHECK(has_i);
    CHECK(has_s2);
    CHECK(quadratic_factors(poly({-1, 0, 0, 0, 1})).size() == 1); // x^4-1: only x^2+1
}

TEST_CASE("rational functions over F_p") {
    const std::uint64_t p = 7;
    RatFuncMod invx(PolyMod::constant(p, 1), PolyMod(p, {0, 1})); // 1/x
    RatFuncMod two_over_x = invx + invx;
    CHECK(two_over_x == RatFuncMod(PolyMod::constant(p, 2), PolyMod(p, {0, 1})));
    // d/dx (1/x) = -1/x^2
    CHECK(derivative(invx) == RatFuncMod(PolyMod::constant(p, p - 1), PolyMod(p, {0, 0, 1})));
    CHECK((invx / invx) == RatFuncMod::one(p));
    CHECK((invx - invx).is_zero());
}

TEST_CASE("nullspace over F_p") {
    MatrixMod m(5, 2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    auto basis = nullspace_mod(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<std::uint64_t>{1, 2}); // 1 + 2*2 = 5 = 0

    // all-ones row over F_7: the canonical element has zeros first
    MatrixMod w(7, 1, 3);
    w.at(0, 0) = w.at(0, 1) = w.at(0, 2) = 1;
    auto v = nullspace_min_vector(w);
    REQUIRE(v.has_value());
    CHECK(*v == std::vector<std::uint64_t>{0, 1, 6});

    MatrixMod id(5, 2, 2);
    id.at(0, 0) = id.at(1, 1) = 1;
    CHECK(nullspace_mod(id).empty());
    CHECK_FALSE(nullspace_min_vector(id).has_value());
}
