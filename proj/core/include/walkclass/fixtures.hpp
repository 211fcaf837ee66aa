#pragma once

#include "walkclass/asympt.hpp"
#include "walkclass/ore.hpp"

#include <string>
#include <vector>

namespace walkclass {

// Embedded reference tables for the two campaign dimensions, plus a handful
// of printed sequences used as spot checks. Shapes are {order, degree} of
// the minimal recurrence and differential equation; algebraic rows also give
// {deg_y, deg_t} of the minimal polynomial. Growth rates are quadratic surds
// rho = a + b*sqrt(c); kappa is a closed-form s-expression in the grammar of
// ClosedFormExpr. All values are read-only reference data.

struct Table1Row {
    const char* tag;   // OEIS id
    const char* bits;  // one step set of the class, canonical bitstring
    const char* terms; // first 8 counts, comma separated
    int rec_r, rec_d;
    int ode_r, ode_d;
    int alg_y, alg_t;  // -1, -1 when the series is transcendental
    int rho_a, rho_b, rho_c;
    const char* alpha; // rational
    const char* kappa; // s-expression
};

struct Table2Row {
    const char* tag;
    const char* terms;
    const char* bits1;
    const char* bits2;
    int rec_r, rec_d, ode_r, ode_d, alg_y, alg_t;
};

struct Table3Row {
    const char* tag;
    const char* terms;
    std::vector<std::string> bits; // every step set listed under the tag
    int rec_r, rec_d, ode_r, ode_d;
};

struct SpotSequence {
    const char* tag;
    const char* bits;
    const char* terms; // as printed, starting at a_0
};

const std::vector<Table1Row>& table1(); // 36 2D D-finite classes
const std::vector<Table2Row>& table2(); // 3 algebraic 3D classes
const std::vector<Table3Row>& table3(); // 32 transcendental 3D tags
const std::vector<SpotSequence>& spot_sequences(); // printed 3D examples

std::vector<Int> parse_terms(const std::string& csv);
SurdQ table1_rho(const Table1Row& row);

// Row whose bits decode to a step set counted by the same class as any of
// the given member bitstrings; nullptr when none matches.
const Table1Row* table1_find(const std::vector<std::string>& member_bits);

// The three reference Kreweras equations for F(t;1,1), exactly as printed:
// the order-4 degree-9 operator, the order-6 degree-4 recurrence, and the
// (6,8) minimal polynomial with constant term 43t^2 + t + 2.
const DiffOp& kreweras_ode();
const RecOp& kreweras_rec();
const AlgEq& kreweras_algeq();

} // namespace walkclass
