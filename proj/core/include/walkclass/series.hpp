#pragma once

#include "walkclass/rational.hpp"
#include "walkclass/stepset.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace walkclass {

// Specialization point for the counting series: coordinates in {0,1}.
// spec=(1,1[,1]) counts all walks of length n, spec=(0,0[,0]) those ending at
// the origin, spec=(1,0) those ending on the x axis, and so on.
using Spec = std::array<int, 3>;

inline Spec spec2(int x, int y) { return {x, y, 0}; }
inline Spec spec3(int x, int y, int z) { return {x, y, z}; }
std::string spec_csv(const Spec& sp, int dim);
Spec parse_spec(const std::string& csv, int dim);

// Integer coefficient series a_0..a_{N-1}.
struct SeriesZ {
    std::vector<Int> a;
    int terms() const { return static_cast<int>(a.size()); }
};

// Orthant walk counts by slice-streaming dynamic programming. Every term is
// checked against the a_n <= |S|^n bound. Large 3D expansions run the same
// recurrence modulo several word-size primes and CRT-combine the terms to
// keep one slice per word instead of one per big integer.
SeriesZ expand_counts(const StepSet& s, const Spec& spec, int N);

// Independent exponential-time oracle: explicit depth-first walk enumeration.
// Refuses n > 12.
Int brute_force_walks(const StepSet& s, const Spec& spec, int n);

struct DedupeClass {
    StepSet rep;                  // lexicographically least bitstring
    std::vector<StepSet> members; // ascending bitstring order
    std::vector<Int> prefix;
    bool degenerate = false;      // all terms after a_0 vanish
};

// Partition by equality of the first prefix_len terms of the spec series.
// Classes ordered by representative bitstring.
std::vector<DedupeClass> dedupe_by_prefix(const std::vector<StepSet>& sets,
                                          int prefix_len, const Spec& spec);

// Series cache files: header line "# steps=<bits> dim=<d> spec=<csv> N=<n>",
// then one decimal coefficient per line, LF endings.
void write_series_file(const std::string& path, const StepSet& s,
                       const Spec& spec, const SeriesZ& series);
// Returns the series if the file exists and its header matches; header
// mismatch throws, missing file returns nullopt.
std::optional<SeriesZ> read_series_file(const std::string& path, const StepSet& s,
                                        const Spec& spec, int N);
std::string series_cache_name(const StepSet& s, const Spec& spec, int N);

} // namespace walkclass
