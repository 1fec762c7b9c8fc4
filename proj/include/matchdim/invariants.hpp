#pragma once

#include <vector>

#include "matchdim/graph.hpp"

namespace matchdim {

/// Set of pairwise vertex-disjoint edges. Stored as normalized (u < v) pairs;
/// order is irrelevant to the predicates, witnesses come back sorted.
using Matching = std::vector<Edge>;

/// The quadruple (ind-match, min-match, match, dim) of a graph.
struct InvariantProfile {
    int ind_match = 0;
    int min_match = 0;
    int match = 0;
    int dim = 0;

    bool operator==(const InvariantProfile&) const = default;
};

/// True iff the edges of m are pairwise vertex-disjoint.
/// Throws if some pair of m is not an edge of g.
bool is_matching(const Graph& g, const Matching& m);

/// True iff no edge of g is vertex-disjoint from every edge of m.
/// Throws if m is not a matching of g.
bool is_maximal_matching(const Graph& g, const Matching& m);

/// True iff no edge of g meets two distinct edges of m.
/// Throws if m is not a matching of g.
bool is_induced_matching(const Graph& g, const Matching& m);

// Exact solvers. All require g.order() >= 1 and throw std::invalid_argument
// on the empty graph. Edgeless graphs get match = min-match = ind-match = 0
// (the empty matching is the unique maximal matching) and dim = n.

/// Maximum matching cardinality (augmenting paths with blossom contraction).
int matching_number(const Graph& g);

/// Minimum cardinality over all maximal matchings (exact branch and bound).
int min_matching_number(const Graph& g);

/// Maximum induced matching cardinality (exact branch and bound).
int induced_matching_number(const Graph& g);

/// Maximum independent set size, i.e. the Krull dimension of the edge-ideal
/// quotient ring (exact branch and bound).
int dimension(const Graph& g);

InvariantProfile invariant_profile(const Graph& g);

// Witnesses. Each returns an object that passes the matching predicate /
// independence check and has the cardinality reported by the solver above.
// Ties between equally sized witnesses are broken by lexicographic order on
// the sorted edge (resp. vertex) list, so output is deterministic.

Matching maximum_matching_witness(const Graph& g);
Matching minimum_maximal_matching_witness(const Graph& g);
Matching maximum_induced_matching_witness(const Graph& g);
VertexSet maximum_independent_set_witness(const Graph& g);

}  // namespace matchdim
