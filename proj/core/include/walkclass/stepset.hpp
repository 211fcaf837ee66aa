#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace walkclass {

using Step = std::array<int, 3>; // dz unused (0) in dimension 2

// A set of short steps in dimension 2 or 3 (coordinates in {-1,0,1}, not all
// zero), kept sorted in lexicographic order over (dx, dy, dz).
//
// Canonical bitstring: one char per candidate step, '1' if present, candidates
// enumerated in lexicographic order over coordinate tuples with the zero tuple
// skipped. Length 8 for 2D, 26 for 3D.
struct StepSet {
    int dim = 2;
    std::vector<Step> steps;

    static StepSet from_bits(const std::string& bits); // length 8 or 26
    // 2D only: comma-separated compass names, e.g. "W,S,NE".
    static StepSet from_compass(const std::string& names);
    static const std::vector<Step>& candidates(int dim);

    std::string bits() const;
    std::size_t size() const { return steps.size(); }
    bool contains(const Step& s) const;
};

bool operator==(const StepSet& a, const StepSet& b);

// All step sets of the given dimension with at most max_size steps (including
// the empty set), in ascending lexicographic bitstring order.
std::vector<StepSet> enumerate_stepsets(int dim, int max_size);

// Negate every step.
StepSet reverse_steps(const StepSet& s);

} // namespace walkclass
