#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchdim/constructions.hpp"
#include "matchdim/graph.hpp"
#include "matchdim/invariants.hpp"

namespace matchdim {

/// Outcome of one construct-then-solve round trip for a feasible tuple.
/// elapsed_seconds is informational only and is never serialized, so report
/// streams stay byte-identical across runs and thread counts.
struct VerificationReport {
    int a = 0, b = 0, c = 0, d = 0;
    CaseTag case_tag = CaseTag::C1;
    InvariantProfile expected;
    InvariantProfile computed;
    bool connected = false;
    bool passed = false;
    double elapsed_seconds = 0.0;
    int maximal_witness_size = 0;
    int maximum_witness_size = 0;
};

/// Verifies every feasible (a,b,c,d) with a <= b <= max_b, b <= c <= 2b and
/// max{a, 2(c-b)} <= d <= max{a, 2(c-b)} + d_slack. Tuples are evaluated in
/// parallel (jobs = 0 means all hardware threads, 1 forces serial) and the
/// returned list is always in lexicographic tuple order.
std::vector<VerificationReport> sweep_theorem(int max_b, int d_slack,
                                              int jobs = 0);

/// Serial twin of sweep_theorem, kept as the reference path for determinism
/// tests and the benchmark.
std::vector<VerificationReport> sweep_theorem_serial(int max_b, int d_slack);

/// Same (n, p, seed, forbid_isolated) always yields the identical graph; see
/// README for the exact drawing scheme (mt19937_64, lexicographic pair order).
struct RandomGraphSpec {
    int n = 0;
    double p = 0.0;
    uint64_t seed = 0;
    bool forbid_isolated = false;
};

Graph random_graph(const RandomGraphSpec& spec);

/// Chain ind <= min <= match <= 2 min (skipped for edgeless graphs) plus the
/// two dimension lower bounds dim >= ind and dim >= 2(match - min).
bool check_chain_and_bounds(const Graph& g);

/// Suspension rules: ind-match(G^S) = ind-match(G) and dim(G^S) = dim(G),
/// +1 exactly when |S| = dim(G). Requires g without isolated vertices and
/// independent s.
bool check_suspension(const Graph& g, const VertexSet& s);

/// Deleting a degree-1 twin pendant (j, k pendant on the same i) leaves
/// match, min-match and ind-match unchanged.
bool check_pendant_reduction(const Graph& g, VertexId i, VertexId j, VertexId k);

/// All four invariants of a disjoint union equal the component-wise sums.
bool check_union_additivity(const std::vector<Graph>& gs);

/// dim(G) = 1 holds exactly for complete graphs.
bool check_dim_one_iff_complete(const Graph& g);

struct LemmaSuiteResult {
    std::string lemma;
    int samples = 0;
    int failures = 0;

    bool passed() const { return failures == 0; }
};

/// Runs every check_* suite over a seeded random corpus; corpus_size samples
/// per suite. Fully deterministic for a fixed (corpus_size, seed).
std::vector<LemmaSuiteResult> run_lemma_suites(int corpus_size, uint64_t seed);

}  // namespace matchdim
