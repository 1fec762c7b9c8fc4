#include "matchdim/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matchdim {

namespace {

std::vector<std::array<int, 4>> enumerate_tuples(int max_b, int d_slack) {
    if (max_b < 1)
        throw std::invalid_argument("sweep_theorem: max_b must be >= 1");
    if (d_slack < 0)
        throw std::invalid_argument("sweep_theorem: d_slack must be >= 0");
    std::vector<std::array<int, 4>> tuples;
    for (int a = 1; a <= max_b; ++a)
        for (int b = a; b <= max_b; ++b)
            for (int c = b; c <= 2 * b; ++c) {
                const int d_min = std::max(a, 2 * (c - b));
                for (int d = d_min; d <= d_min + d_slack; ++d)
                    tuples.push_back({a, b, c, d});
            }
    return tuples;
}

VerificationReport verify_tuple(int a, int b, int c, int d) {
    VerificationReport report;
    report.a = a;
    report.b = b;
    report.c = c;
    report.d = d;
    report.expected = InvariantProfile{a, b, c, d};
    const auto start = std::chrono::steady_clock::now();
    try {
        report.case_tag = dispatch_case(a, b, c, d);
        const Graph g = construct(a, b, c, d);
        report.connected = g.connected();
        report.computed = invariant_profile(g);
        const auto [maximal, maximum] = witness_matchings(a, b, c, d);
        report.maximal_witness_size = static_cast<int>(maximal.size());
        report.maximum_witness_size = static_cast<int>(maximum.size());
        report.passed = report.connected && report.computed == report.expected;
    } catch (const std::exception&) {
        report.passed = false;
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

// Canonical [0,1) double from a 64-bit draw (top 53 bits).
double unit_double(uint64_t x) { return (x >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<VerificationReport> sweep_theorem(int max_b, int d_slack, int jobs) {
    const auto tuples = enumerate_tuples(max_b, d_slack);
    std::vector<VerificationReport> reports(tuples.size());
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long i = 0; i < static_cast<long long>(tuples.size()); ++i) {
        const auto& [a, b, c, d] = tuples[i];
        reports[i] = verify_tuple(a, b, c, d);
    }
    return reports;
}

std::vector<VerificationReport> sweep_theorem_serial(int max_b, int d_slack) {
    const auto tuples = enumerate_tuples(max_b, d_slack);
    std::vector<VerificationReport> reports;
    reports.reserve(tuples.size());
    for (const auto& [a, b, c, d] : tuples)
        reports.push_back(verify_tuple(a, b, c, d));
    return reports;
}

Graph random_graph(const RandomGraphSpec& spec) {
    if (spec.n < 0)
        throw std::invalid_argument("random_graph: n must be >= 0");
    if (spec.p < 0.0 || spec.p > 1.0)
        throw std::invalid_argument("random_graph: p must lie in [0, 1]");
    if (spec.forbid_isolated && spec.n < 2)
        throw std::invalid_argument(
            "random_graph: forbid_isolated requires n >= 2");

    std::mt19937_64 rng(spec.seed);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < spec.n; ++u)
        for (VertexId v = u + 1; v < spec.n; ++v)
            if (unit_double(rng()) < spec.p) edges.emplace_back(u, v);

    Graph g = with_edges(spec.n, edges);
    if (spec.forbid_isolated) {
        // Patch isolated vertices in ascending order by attaching each to a
        // uniformly drawn other vertex.
        for (VertexId v = 0; v < spec.n; ++v) {
            if (g.degree(v) > 0) continue;
            VertexId t = static_cast<VertexId>(rng() % (spec.n - 1));
            if (t >= v) ++t;
            edges.push_back(make_edge(v, t));
            g = with_edges(spec.n, edges);
        }
    }
    return g;
}

bool check_chain_and_bounds(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("check_chain_and_bounds: empty graph");
    const InvariantProfile p = invariant_profile(g);
    if (g.edge_count() > 0) {
        if (!(p.ind_match <= p.min_match && p.min_match <= p.match &&
              p.match <= 2 * p.min_match))
            return false;
    }
    return p.dim >= p.ind_match && p.dim >= 2 * (p.match - p.min_match);
}

bool check_suspension(const Graph& g, const VertexSet& s) {
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument(
                "check_suspension: graph has an isolated vertex (" +
                std::to_string(v) + ")");
    const Graph gs = s_suspension(g, s);  // validates independence of s
    const int dim_g = dimension(g);
    const int expected_dim =
        static_cast<int>(s.size()) == dim_g ? dim_g + 1 : dim_g;
    return induced_matching_number(gs) == induced_matching_number(g) &&
           dimension(gs) == expected_dim;
}

bool check_pendant_reduction(const Graph& g, VertexId i, VertexId j, VertexId k) {
    if (j == k || !g.has_edge(i, j) || !g.has_edge(i, k) || g.degree(j) != 1 ||
        g.degree(k) != 1)
        throw std::invalid_argument(
            "check_pendant_reduction: j, k must be distinct degree-1 "
            "neighbors of i");
    VertexSet keep;
    for (VertexId v = 0; v < g.order(); ++v)
        if (v != k) keep.push_back(v);
    const Graph reduced = induced_subgraph(g, keep);
    return matching_number(reduced) == matching_number(g) &&
           min_matching_number(reduced) == min_matching_number(g) &&
           induced_matching_number(reduced) == induced_matching_number(g);
}

bool check_union_additivity(const std::vector<Graph>& gs) {
    for (const Graph& g : gs)
        if (g.order() == 0)
            throw std::invalid_argument(
                "check_union_additivity: component with n = 0");
    const InvariantProfile whole = invariant_profile(disjoint_union(gs));
    InvariantProfile sum;
    for (const Graph& g : gs) {
        const InvariantProfile p = invariant_profile(g);
        sum.ind_match += p.ind_match;
        sum.min_match += p.min_match;
        sum.match += p.match;
        sum.dim += p.dim;
    }
    return whole == sum;
}

bool check_dim_one_iff_complete(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("check_dim_one_iff_complete: empty graph");
    const long long n = g.order();
    const bool complete = g.edge_count() == n * (n - 1) / 2;
    return (dimension(g) == 1) == complete;
}

namespace {

// Grows a random independent set to the requested size, stopping early if it
// gets stuck; used to hit the |S| < dim branch of the suspension lemma.
VertexSet grow_independent_set(const Graph& g, int target, std::mt19937_64& rng) {
    std::vector<VertexId> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet s;
    for (VertexId v : order) {
        if (static_cast<int>(s.size()) >= target) break;
        bool ok = true;
        for (VertexId w : s)
            if (g.has_edge(v, w)) {
                ok = false;
                break;
            }
        if (ok) s.push_back(v);
    }
    return s;
}

}  // namespace

std::vector<LemmaSuiteResult> run_lemma_suites(int corpus_size, uint64_t seed) {
    if (corpus_size < 1)
        throw std::invalid_argument("run_lemma_suites: corpus_size must be >= 1");
    constexpr double kProbabilities[] = {0.2, 0.5, 0.8};
    std::vector<LemmaSuiteResult> results;

    // Chain + the two dim lower bounds (HHKT Prop 2.1 chain, Lemma 1.4).
    {
        LemmaSuiteResult r{"chain_and_dim_bounds", corpus_size, 0};
        for (int i = 0; i < corpus_size; ++i) {
            RandomGraphSpec spec{2 + i % 8, kProbabilities[i % 3],
                                 seed * 1000003 + i, false};
            if (!check_chain_and_bounds(random_graph(spec))) ++r.failures;
        }
        results.push_back(r);
    }

    // Suspension rules (Lemma 1.3); both |S| < dim and |S| = dim branches.
    {
        LemmaSuiteResult r{"suspension", corpus_size, 0};
        for (int i = 0; i < corpus_size; ++i) {
            RandomGraphSpec spec{2 + i % 7, kProbabilities[i % 3],
                                 seed * 2000003 + i, true};
            const Graph g = random_graph(spec);
            std::mt19937_64 rng(seed * 2000003 + i + 7777);
            VertexSet s;
            if (i % 4 == 0) {
                s = maximum_independent_set_witness(g);  // |S| = dim branch
            } else {
                const int target =
                    static_cast<int>(rng() % (dimension(g) + 1));
                s = grow_independent_set(g, target, rng);
            }
            if (!check_suspension(g, s)) ++r.failures;
        }
        results.push_back(r);
    }

    // Twin-pendant deletion and the floor(n/2) bound (Lemma 1.7).
    {
        LemmaSuiteResult r{"pendant_twin_and_floor", corpus_size, 0};
        for (int i = 0; i < corpus_size; ++i) {
            RandomGraphSpec spec{2 + i % 6, kProbabilities[i % 3],
                                 seed * 3000017 + i, false};
            const Graph base = random_graph(spec);
            std::mt19937_64 rng(seed * 3000017 + i + 7777);
            const VertexId attach = static_cast<VertexId>(rng() % base.order());
            std::vector<Edge> edges = base.edges();
            edges.push_back(make_edge(attach, base.order()));
            edges.push_back(make_edge(attach, base.order() + 1));
            const Graph aug = with_edges(base.order() + 2, edges);
            const bool ok =
                check_pendant_reduction(aug, attach, base.order(),
                                        base.order() + 1) &&
                matching_number(aug) <= aug.order() / 2;
            if (!ok) ++r.failures;
        }
        results.push_back(r);
    }

    // Component additivity of all four invariants (Lemma 1.8).
    {
        LemmaSuiteResult r{"union_additivity", corpus_size, 0};
        for (int i = 0; i < corpus_size; ++i) {
            RandomGraphSpec left{1 + i % 7, kProbabilities[i % 3],
                                 seed * 4000037 + i, false};
            RandomGraphSpec right{1 + (i / 2) % 7, kProbabilities[(i + 1) % 3],
                                  seed * 4000037 + i + 999983, false};
            if (!check_union_additivity(
                    {random_graph(left), random_graph(right)}))
                ++r.failures;
        }
        results.push_back(r);
    }

    // dim = 1 iff complete; every fifth sample is a complete graph so both
    // sides of the equivalence are exercised.
    {
        LemmaSuiteResult r{"dim_one_iff_complete", corpus_size, 0};
        for (int i = 0; i < corpus_size; ++i) {
            const Graph g =
                i % 5 == 0
                    ? complete_graph(1 + i % 8)
                    : random_graph(RandomGraphSpec{1 + i % 8,
                                                   kProbabilities[i % 3],
                                                   seed * 5000011 + i, false});
            if (!check_dim_one_iff_complete(g)) ++r.failures;
        }
        results.push_back(r);
    }

    return results;
}

}  // namespace matchdim
