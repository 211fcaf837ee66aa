#include "doctest.h"

#include "walkclass/asympt.hpp"
#include "walkclass/bigfloat.hpp"
#include "walkclass/fixtures.hpp"
#include "walkclass/ore.hpp"
#include "walkclass/series.hpp"

#include <cmath>
#include <cstdlib>

using namespace walkclass;

namespace {
std::vector<Int> powers(long b, int n) {
    std::vector<Int> a{1};
    for (int k = 1; k < n; ++k) a.push_back(a.back() * b);
    return a;
}
std::vector<Int> central_binomials(int n) {
    // C(n, floor(n/2)): ratio (n+1)/(floor(n/2)+1) steps C(n,k) to C(n+1,k')
    std::vector<Int> a;
    Int c(1);
    for (int k = 0; k < n; ++k) {
        a.push_back(c);
        c = c * (k + 1) / ((k / 2) + 1);
    }
    return a;
}
} // namespace

TEST_CASE("surd values") {
    SurdQ three{Rat(3), Rat(0), Int(1)};
    CHECK(three.rational());
    CHECK(three.approx() == 3.0);
    CHECK(three.str() == "3");

    SurdQ silver{Rat(1), Rat(2), Int(2)}; // 1 + 2 sqrt(2)
    CHECK_FALSE(silver.rational());
    CHECK(silver.approx() == doctest::Approx(3.8284271247461903).epsilon(1e-12));
    CHECK(silver.str() == "1+2*sqrt(2)");
    CHECK(std::fabs(silver.value(128).to_double() - silver.approx()) < 1e-12);
}

TEST_CASE("characteristic candidates of the Kreweras recurrence") {
    RhoCandidates cands = char_candidates(kreweras_rec());
    bool has_three = false;
    for (const auto& s : cands.exact) has_three = has_three || s == SurdQ{Rat(3), Rat(0), Int(1)};
    CHECK(has_three);
    auto hit = match_rho(cands, 3.0000004);
    REQUIRE(hit.has_value());
    CHECK(*hit == SurdQ{Rat(3), Rat(0), Int(1)});
    CHECK_FALSE(match_rho(cands, 2.5).has_value());
}

TEST_CASE("growth rate estimation") {
    CHECK(estimate_rho(powers(2, 600)) == doctest::Approx(2.0).epsilon(1e-9));
    std::vector<Int> far =
        extend_sequence(kreweras_rec(),
                        expand_counts(StepSet::from_bits("01010001"), spec2(1, 1), 10).a, 2000);
    CHECK(estimate_rho(far) == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("pure geometric growth fits exactly") {
    AsymptoticFit fit = fit_asymptotics(powers(2, 600), SurdQ{Rat(2), Rat(0), Int(1)});
    CHECK(fit.rho == 2.0);
    CHECK(std::fabs(fit.alpha) < 1e-10);
    CHECK(std::fabs(fit.kappa - 1.0) < 1e-10);
    CHECK(fit.kappa_stable_digits >= 10);
}

TEST_CASE("central binomial constant") {
    AsymptoticFit fit = fit_asymptotics(central_binomials(2000), SurdQ{Rat(2), Rat(0), Int(1)});
    CHECK(std::fabs(fit.alpha + 0.5) < 1e-6);
    const double want = std::sqrt(2.0 / 3.14159265358979323846);
    CHECK(std::fabs(fit.kappa - want) < 1e-6);
    BigFloat k(fit.kappa, 64);
    CHECK(verify_constant(k, "(/ (sqrt 2) (gamma 1/2))", 1e-6));
}

TEST_CASE("Kreweras constant against the closed form") {
    std::vector<Int> far =
        extend_sequence(kreweras_rec(),
                        expand_counts(StepSet::from_bits("01010001"), spec2(1, 1), 10).a, 2000);
    AsymptoticFit fit = fit_asymptotics(far, SurdQ{Rat(3), Rat(0), Int(1)});
    CHECK(fit.rho_exact.has_value());
    CHECK(std::fabs(fit.alpha + 0.75) < 1e-6);
    CHECK(verify_constant(BigFloat(fit.kappa, 64), "(/ (* 2 (sqrt 2)) (gamma 1/4))", 1e-6));
    CHECK(fit.kappa_stable_digits >= 6);
    CHECK(std::fabs(fit.beta) < 1e-6); // no logarithmic correction
}

TEST_CASE("fit input validation") {
    CHECK_THROWS_AS(fit_asymptotics(powers(2, 100), SurdQ{Rat(2), Rat(0), Int(1)}),
                    std::invalid_argument); // too short
    CHECK_THROWS_AS(fit_asymptotics(powers(2, 600), SurdQ{Rat(0), Rat(0), Int(1)}),
                    std::invalid_argument); // rho must be positive
}

TEST_CASE("closed form expression grammar") {
    CHECK(ClosedFormExpr::parse("1/2").eval(64).to_double() == 0.5);
    CHECK(ClosedFormExpr::parse("pi").eval(64).to_double() ==
          doctest::Approx(3.14159265358979).epsilon(1e-12));
    CHECK(ClosedFormExpr::parse("(- (* 2 2) (/ 9 3))").eval(64).to_double() == 1.0);
    CHECK(ClosedFormExpr::parse("(sqrt 2)").eval(64).to_double() ==
          doctest::Approx(1.4142135623730951).epsilon(1e-12));
    CHECK(ClosedFormExpr::parse("(gamma 1/2)").eval(96).to_double() ==
          doctest::Approx(1.7724538509055160).epsilon(1e-12)); // sqrt(pi)
    CHECK(ClosedFormExpr::parse("(pow 8 2/3)").eval(64).to_double() ==
          doctest::Approx(4.0).epsilon(1e-12));
    // named constants
    CHECK(ClosedFormExpr::parse("B").eval(64).to_double() ==
          doctest::Approx(1 + 2 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ClosedFormExpr::parse("F").eval(64).to_double() ==
          doctest::Approx(1 + std::sqrt(6.0)).epsilon(1e-12));
    CHECK_THROWS(ClosedFormExpr::parse("(bogus 1)"));
    CHECK_THROWS(ClosedFormExpr::parse("(+ 1"));

    CHECK(verify_constant(BigFloat(1.0, 64), "(/ (gamma 1/2) (sqrt pi))", 1e-12));
    CHECK_FALSE(verify_constant(BigFloat(1.0, 64), "(sqrt 2)", 1e-3));
}

TEST_CASE("every Table 1 closed form evaluates to a positive constant") {
    for (const auto& row : table1()) {
        BigFloat v = ClosedFormExpr::parse(row.kappa).eval(128);
        CHECK(v.to_double() > 0);
        // and the growth constant is consistent with Theorem 1: rho <= |S|
        SurdQ rho = table1_rho(row);
        StepSet s = StepSet::from_bits(row.bits);
        CHECK(rho.approx() <= static_cast<double>(s.size()) + 1e-9);
    }
}
