// Closed-form Hamming and Lee distances for the eight code families, plus
// the generic sandwich bound d_H(C) <= d_L(C) <= 2 d_H(C). Every result
// carries a source id ("thm8/clause2") naming the formula clause that
// produced it, so sweep output can be traced back clause by clause.
#pragma once

#include <string>
#include <vector>

#include "u3cyclic/codespec.hpp"

namespace u3c {

enum class Coverage { Exact, Bounds, NotCovered };

struct DistanceResult {
    Coverage kind = Coverage::NotCovered;
    long value = -1;          // Exact only
    long lo = -1, hi = -1;    // Bounds only (inclusive)
    std::string source;       // clause id, e.g. "thm8/clause2", "thm8/gap"
    int gamma = -1;           // window index when a gamma clause fired

    bool is_exact() const { return kind == Coverage::Exact; }
};

// Distance table for <(x+1)^ell> over F_{2^m}, 0 <= ell <= 2^sigma:
// 1 at ell = 0; 2 up to 2^(sigma-1); 2^(gamma+1) on the gamma-th tail
// window; 0 at ell = 2^sigma. The Hamming and Lee tables coincide.
unsigned base_hamming(unsigned sigma, unsigned ell, int* gamma_out = nullptr);
unsigned base_lee(unsigned sigma, unsigned ell, int* gamma_out = nullptr);

// Verifies that the base table tiles [0, 2^sigma] with no gap or overlap.
bool base_table_tiles(unsigned sigma);

// The exponent r such that d_H(C) = d_H(<(x+1)^r>): 2^sigma or 0 for the
// trivial ideals, then ell, L, mu, V, omega, W, omega for types 2..8.
int reduction_exponent(const CodeSpec& spec);

// Name of the Lee-distance theorem the spec dispatches to ("thm8", ...;
// "type8/remaining" for the Type 8 unit patterns with no published formula).
std::string lee_theorem(const CodeSpec& spec);

DistanceResult hamming_distance(const CodeSpec& spec);
DistanceResult lee_distance(const CodeSpec& spec);

// [d_H(C), 2 d_H(C)] - always valid, used when lee_distance is NotCovered.
DistanceResult lee_bounds_sandwich(const CodeSpec& spec);

// All clauses of the dispatched Lee theorem whose guards accept the spec,
// in the theorem's own order ("otherwise" clauses count as accepting only
// when nothing before them did). lee_distance() is the front entry; more
// than one entry flags a clause overlap, none flags a gap.
std::vector<DistanceResult> audit_clauses(const CodeSpec& spec);

}  // namespace u3c
