#pragma once

#include "walkclass/ore.hpp"
#include "walkclass/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walkclass {

// Modular guessing of annihilating equations from series prefixes.
//
// For each candidate order the solver takes the largest affordable degree,
// builds the linear system over F_p with `margin` oversampling rows, and
// extracts the canonical minimal nullspace element (columns ordered order
// then degree descending, so the re-echelonized basis row with the latest
// leading column has minimal order, then minimal leading degree). Residues
// from successive primes are CRT-combined; once rational reconstruction
// returns the same candidate for `stabilization` consecutive primes, the
// candidate is verified exactly over Q against all supplied terms, which is
// the final arbiter.
struct GuessConfig {
    int max_order = 6;
    int max_degree = 24;
    int margin = 32;        // oversampling equations beyond the unknown count
    int stabilization = 2;  // consecutive identical reconstructions required
    int max_primes = 16;    // give up after this many primes
};

struct GuessStats {
    int primes_used = 0;
    int shape_order = -1, shape_degree = -1; // shape the solver settled on
    std::string note;                        // why nothing was returned
};

std::optional<DiffOp> guess_ode(const std::vector<Int>& a, const GuessConfig& cfg,
                                GuessStats* stats = nullptr);
std::optional<RecOp> guess_rec(const std::vector<Int>& a, const GuessConfig& cfg,
                               GuessStats* stats = nullptr);
std::optional<AlgEq> guess_algeq(const std::vector<Int>& a, const GuessConfig& cfg,
                                 GuessStats* stats = nullptr);

// Pin one shape instead of climbing the staircase. With more unknowns than
// equations this manufactures the truncation artefacts the sieves are
// calibrated against: a nullspace element that fits every available term yet
// means nothing.
std::optional<DiffOp> guess_ode_at(const std::vector<Int>& a, int order, int degree,
                                   const GuessConfig& cfg, GuessStats* stats = nullptr);
std::optional<RecOp> guess_rec_at(const std::vector<Int>& a, int order, int degree,
                                  const GuessConfig& cfg, GuessStats* stats = nullptr);
std::optional<AlgEq> guess_algeq_at(const std::vector<Int>& a, int order, int degree,
                                    const GuessConfig& cfg, GuessStats* stats = nullptr);

// Largest degree d with (order+1)(d+1) + margin equations available from N
// terms for the given gadget; negative when the order is not affordable.
int affordable_degree(int N, int order, int margin, bool ode_like);

} // namespace walkclass
