#pragma once

#include "walkclass/asympt.hpp"
#include "walkclass/certify.hpp"
#include "walkclass/guess.hpp"
#include "walkclass/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walkclass {

inline constexpr const char* tool_version = "0.1.0";

// Shape bounds for the three gadgets. The defaults cover every equation in
// the embedded tables: 2D ODEs top out at (5,24), recurrences at (9,18),
// minimal polynomials at (8,9); the 3D long-run bounds follow the largest
// printed shape (10,75).
struct Bounds {
    GuessConfig rec, ode, alg;
    std::string signature() const; // participates in the idempotence key
};
Bounds default_bounds(int dim, bool long_run);

struct ClassifyOptions {
    int dim = 2;
    int N = 250;
    Spec spec = spec2(1, 1);
    Bounds bounds = default_bounds(2, false);
    int jobs = 1;
    bool long_run = false;              // unlocks the full 3D enumeration
    std::string db_path;                // empty: keep records in memory only
    std::string cache_dir;              // empty: no series cache
    std::vector<std::string> only_bits; // restrict the campaign to these sets
    int sieve_primes = 20;
    int fit_terms = 2000;               // recurrence-extended length for fits
    int prefix_len = 30;                // dedupe prefix
};

struct Shape {
    int order = -1, degree = -1;
    bool present() const { return order >= 0; }
    bool operator==(const Shape&) const = default;
};

// One classified equivalence class of step sets. Payloads keep exact
// integer coefficients; records are append-only once written.
struct ClassificationRecord {
    std::string bits;                 // representative (lex-least member)
    std::vector<std::string> members; // every step set of the class
    int dim = 2;
    bool rep = true;
    std::string spec;                 // specialization, csv
    int N = 0;
    std::string bounds;               // Bounds::signature()
    std::string verdict;              // algebraic | D-finite-transcendental-candidate | none-found
    Shape rec_shape, ode_shape, alg_shape;
    std::optional<RecOp> rec;
    std::optional<DiffOp> ode;
    std::optional<AlgEq> alg;
    SieveReport sieves;
    std::optional<AsymptoticFit> fit;
    std::string oeis;                 // embedded fixture tag, may be empty
    std::string note;                 // failure diagnostics
    std::string created;              // UTC, ISO 8601
    std::string version = tool_version;

    std::string key() const;          // (stepset, N, bounds, version)
};

std::string to_json_line(const ClassificationRecord& r);
ClassificationRecord record_from_json(const std::string& line);

std::vector<ClassificationRecord> read_db(const std::string& path);
void append_record(const std::string& path, const ClassificationRecord& r);

// Full pipeline for one class: expand, guess all three gadgets, certify the
// strongest payload against a doubled series, fit asymptotics along the
// recurrence extension, and tag against the embedded tables. Exceptions are
// caught into note with verdict none-found.
ClassificationRecord classify_class(const StepSet& rep,
                                    const std::vector<std::string>& members,
                                    const ClassifyOptions& opt);

struct CampaignSummary {
    int classes = 0;    // nondegenerate classes seen this run
    int dfinite = 0;    // includes the algebraic ones
    int algebraic = 0;
    int none = 0;
    int degenerate = 0; // classes excluded from guessing
    int reused = 0;     // records skipped via the idempotence key
    int failures = 0;   // classes whose record carries an error note
};

// Enumerate (or take only_bits), dedupe by series prefix, classify every
// nondegenerate class not already in the database, and append records in
// representative order. A 3D run without only_bits requires long_run.
CampaignSummary run_campaign(const ClassifyOptions& opt,
                             std::vector<ClassificationRecord>* records = nullptr);

struct TableCheck {
    int rows_compared = 0;
    int mismatches = 0;
    std::vector<std::string> details; // one line per mismatch
};

// Compare database records against the embedded tables: shapes, verdicts,
// payload re-annihilation against freshly expanded series, and asymptotic
// constants through verify_constant at tol 1e-4. Rows considered are the
// whole fixture for the dimension, or only_rows (tags or bitstrings) when
// nonempty; considered rows absent from the database count as mismatches.
// For dim 2 any record with an equation outside Table 1 is also a mismatch.
TableCheck check_tables(const std::vector<ClassificationRecord>& db, int dim,
                        const std::vector<std::string>& only_rows = {});

struct ReversalReport {
    int dfinite = 0;          // records examined
    int self_reversed = 0;
    int agree = 0;            // reversal class also has an equation
    int reversal_none = 0;    // reversal class classified none-found
    int unresolved = 0;       // reversal class absent from the database
    std::vector<std::string> details;
};

// For every class with an equation, locate the arrow-reversed step set's
// class in the same database and report whether an equation was found there.
ReversalReport reversal_report(const std::vector<ClassificationRecord>& db);

} // namespace walkclass
