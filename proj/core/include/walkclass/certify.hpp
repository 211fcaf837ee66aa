#pragma once

#include "walkclass/ore.hpp"
#include "walkclass/places.hpp"
#include "walkclass/pcurv.hpp"

#include <string>
#include <variant>
#include <vector>

namespace walkclass {

// Empirical certification of a guessed equation by four independent sieves.
// None of them is a proof; together they make an artefact of the truncation
// spectacularly unlikely.
//
//   size        the equation's integer coefficients must be far smaller than
//               the information content of the data would allow a fake to be
//   extension   the equation must keep annihilating a series recomputed to
//               twice the length used for guessing
//   analytic    a differential operator must be Fuchsian with rational
//               exponents at every singular place including infinity
//   arithmetic  its p-curvature must be nilpotent modulo the first K good
//               primes; the fraction of primes with vanishing curvature
//               doubles as an algebraicity oracle
//
// The analytic and arithmetic sieves only speak about differential operators;
// recurrence and algebraic payloads get them through a companion operator for
// the same series when one is supplied, and are inconclusive otherwise.

enum class Status { pass, fail, inconclusive };

struct Verdict {
    Status status = Status::inconclusive;
    std::string evidence; // witness on fail, sizes/places/primes otherwise
    bool passed() const { return status == Status::pass; }
    bool failed() const { return status == Status::fail; }
};

struct SieveReport {
    Verdict size, extension, analytic, arithmetic;
    // no fail anywhere and at least three passes
    bool overall() const;
};

const char* status_name(Status s);

using Guessed = std::variant<DiffOp, RecOp, AlgEq>;

struct CertifyContext {
    std::vector<Int> series;   // the terms the guess was made from
    std::vector<Int> extended; // the same series to twice the length
    bool stabilized = true;    // did modular reconstruction stabilize
    const DiffOp* companion_ode = nullptr; // lends analytic/arithmetic sieves
                                           // to rec/algeq payloads
    int sieve_primes = 20;
    double theta = 0.2;
};

// Pass iff the total decimal digit count of the payload's coefficients stays
// below theta * unknowns * (max digit count among the series terms), and the
// modular reconstruction stabilized. A genuine equation weighs a few hundred
// digits where a truncation artefact weighs tens of thousands.
Verdict size_sieve(const Guessed& g, const std::vector<Int>& series, double theta,
                   bool stabilized);

// Pass iff the payload annihilates the extended series exactly. Fitting noise
// survives to exactly the length it was fitted on and no further.
Verdict extension_sieve(const Guessed& g, const std::vector<Int>& extended,
                        int terms_used);

// Pass iff every place of the operator is regular (Fuchs criterion) and every
// indicial or norm polynomial has only rational roots.
Verdict analytic_sieve(const DiffOp& L);

// Pass iff the p-curvature matrix is nilpotent for the first K good primes
// (ascending from 3). zero_fraction, when given, receives the fraction of
// those primes with identically zero curvature.
Verdict arithmetic_sieve(const DiffOp& L, int K, double* zero_fraction = nullptr);

// All four sieves, run concurrently. For an algebraic payload with a
// companion operator the arithmetic sieve additionally demands a vanishing
// curvature fraction of at least 0.8, the Grothendieck algebraicity oracle.
SieveReport certify(const Guessed& g, const CertifyContext& ctx);

} // namespace walkclass
