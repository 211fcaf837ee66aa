#pragma once

#include "walkclass/ore.hpp"
#include "walkclass/polyq.hpp"

#include <string>
#include <vector>

namespace walkclass {

// One singular place of a differential operator: either a finite place given
// by a monic squarefree polynomial (degree 1 for a rational point), or the
// point at infinity. Conjugate algebraic points sharing a factor of the
// leading coefficient are analyzed together as long as their coefficient
// valuations agree, and split apart when they do not.
struct PlaceReport {
    PolyQ minpoly;            // monic squarefree; unset for infinity
    bool at_infinity = false;
    std::vector<int> valuations; // per D^i coefficient; INT_MAX/2 for zero
    bool regular = false;
    PolyQ indicial;              // primitive; for algebraic places the norm
    std::vector<std::pair<Rat, int>> exponents; // rational roots with mult
    bool all_exponents_rational = false;
    std::string label() const;
};

struct AnalyticReport {
    bool fuchsian = false;           // every place regular singular
    bool all_exponents_rational = false;
    std::vector<PlaceReport> places; // rational asc, algebraic, then infinity
};

// Full local analysis at every root of the leading coefficient and at
// infinity: Fuchs criterion v(c_i) >= v(c_r) - (r-i) and indicial polynomial
// via the falling-factorial leading parts (norm over the minimal polynomial
// for algebraic places).
AnalyticReport analyze_analytic(const DiffOp& L);

// The indicial data at one given finite place (m monic squarefree). May split.
std::vector<PlaceReport> analyze_finite_place(const DiffOp& L, const PolyQ& m);

} // namespace walkclass
