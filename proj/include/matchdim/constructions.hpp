#pragma once

#include <string>
#include <utility>

#include "matchdim/graph.hpp"
#include "matchdim/invariants.hpp"

namespace matchdim {

/// Which of the seven construction templates realizes a feasible (a,b,c,d).
enum class CaseTag { C1, C2, C3, C4, C5, C6, C7 };

const char* to_string(CaseTag tag);

/// True iff 1 <= a <= b <= c <= 2b and d >= max{a, 2(c-b)}. Throws on
/// non-positive input.
bool feasible(int a, int b, int c, int d);

/// Human-readable name of the first violated feasibility inequality, empty
/// when the tuple is feasible. Throws on non-positive input.
std::string feasibility_violation(int a, int b, int c, int d);

/// Resolves a feasible tuple to its construction case. Exactly one tag
/// matches every feasible tuple; throws on infeasible input.
CaseTag dispatch_case(int a, int b, int c, int d);

/// A feasible tuple together with its resolved case; the only way to obtain
/// one is resolve(), so instances are valid by construction.
struct ConstructionParams {
    int a, b, c, d;
    CaseTag case_tag;

    static ConstructionParams resolve(int a, int b, int c, int d);
};

// The seven builders. Vertex layout is fixed: the v-block occupies indices
// 0..2b-1 (labels v_1..v_{2b}), then the x-block, then the y-block; the
// single apex of cases 4-5 sits at index 2b with label "x". Empty y-blocks
// at the parameter boundaries are permitted.

Graph build_case1(int b, int d);                 // a = 1, b = c
Graph build_case2(int b, int c);                 // a = 1, b < c, d = 2(c-b)
Graph build_case3(int b, int c, int d);          // a = 1, b < c, d > 2(c-b)
Graph build_case4(int a, int b);                 // a > 1, b = c, d = a
Graph build_case5(int a, int b, int d);          // a > 1, b = c, d > a
Graph build_case6(int a, int b, int c, int d);   // a > 1, b < c, 2(c-b) >= a
Graph build_case7(int a, int b, int c, int d);   // a > 1, b < c, a > 2(c-b)

/// Builds the connected simple graph whose profile is exactly (a,b,c,d),
/// dispatching to the matching case. Throws std::invalid_argument naming the
/// violated inequality when the tuple is infeasible.
Graph construct(int a, int b, int c, int d);

/// Explicit witness matchings for the dispatched case:
/// first a maximal matching of size b, second a maximum matching of size c
/// (for b = c the same matching serves both roles). Both are validated
/// against the predicates before being returned.
std::pair<Matching, Matching> witness_matchings(int a, int b, int c, int d);

}  // namespace matchdim
