// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Run directly or through ctest (-R acceptance).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "matchdim/constructions.hpp"
#include "matchdim/graph.hpp"
#include "matchdim/invariants.hpp"
#include "matchdim/io.hpp"
#include "matchdim/oracle.hpp"
#include "matchdim/verifier.hpp"

#ifndef MATCHDIM_CLI_PATH
#error "MATCHDIM_CLI_PATH must point at the matchdim binary"
#endif

using namespace matchdim;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kProbabilities[] = {0.2, 0.5, 0.8};

std::vector<Graph> oracle_corpus() {
    std::vector<Graph> corpus;
    corpus.reserve(500);
    for (int i = 0; i < 500; ++i)
        corpus.push_back(random_graph(
            {2 + i % 8, kProbabilities[i % 3], 0xC0FFEEull + i, false}));
    return corpus;
}

// 1. Every feasible tuple with b <= 3, c <= 2b, d <= max{a, 2(c-b)} + 2
//    yields a connected graph with the exact requested profile.
bool criterion_sweep(std::string& detail) {
    const auto reports = sweep_theorem(3, 2);
    int failed = 0;
    for (const auto& r : reports)
        if (!r.passed) ++failed;
    detail = std::to_string(reports.size() - failed) + "/" +
             std::to_string(reports.size()) + " tuples exact and connected";
    return failed == 0 && !reports.empty();
}

// 2. The seven reference parameter sets construct and verify exactly.
bool criterion_examples(std::string& detail) {
    const std::array<std::array<int, 4>, 7> tuples = {{{1, 2, 2, 3},
                                                       {1, 2, 3, 2},
                                                       {1, 3, 4, 5},
                                                       {2, 3, 3, 2},
                                                       {2, 3, 3, 4},
                                                       {3, 4, 6, 5},
                                                       {3, 4, 5, 4}}};
    int good = 0;
    for (const auto& [a, b, c, d] : tuples) {
        const Graph g = construct(a, b, c, d);
        if (g.connected() &&
            invariant_profile(g) == InvariantProfile{a, b, c, d})
            ++good;
    }
    detail = std::to_string(good) + "/7 example tuples verified";
    return good == 7;
}

// 3. Closed forms: star K_{1,s} -> (1,1,1,s); complete K_{2s} -> (1,s,s,1).
bool criterion_closed_forms(std::string& detail) {
    int good = 0, total = 0;
    for (int s = 1; s <= 8; ++s, ++total)
        if (invariant_profile(star_graph(s)) == InvariantProfile{1, 1, 1, s})
            ++good;
    for (int s = 1; s <= 5; ++s, ++total)
        if (invariant_profile(complete_graph(2 * s)) ==
            InvariantProfile{1, s, s, 1})
            ++good;
    detail = std::to_string(good) + "/" + std::to_string(total) +
             " closed-form profiles";
    return good == total;
}

// 4. The 3-cycle remark: suspension bumps match and min-match from 1 to 2.
bool criterion_c3_remark(std::string& detail) {
    const Graph c3 = with_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    const Graph k4 = s_suspension(c3, {});
    const bool ok = matching_number(c3) == 1 && min_matching_number(c3) == 1 &&
                    matching_number(k4) == 2 && min_matching_number(k4) == 2;
    detail = "match/min-match of C3 = 1, of its suspension = 2";
    return ok;
}

// 5. Optimized solvers equal the exhaustive oracle on 500 seeded graphs.
bool criterion_oracle_equivalence(std::string& detail) {
    const auto corpus = oracle_corpus();
    int good = 0;
    for (const Graph& g : corpus)
        if (invariant_profile(g) == oracle_profile(g)) ++good;
    detail = std::to_string(good) + "/" + std::to_string(corpus.size()) +
             " graphs agree on all four invariants";
    return good == static_cast<int>(corpus.size());
}

// 6. Chain and dimension bounds hold on the full oracle corpus.
bool criterion_inequalities(std::string& detail) {
    const auto corpus = oracle_corpus();
    int good = 0;
    for (const Graph& g : corpus)
        if (check_chain_and_bounds(g)) ++good;
    detail = std::to_string(good) + "/" + std::to_string(corpus.size()) +
             " graphs satisfy chain + dim bounds";
    return good == static_cast<int>(corpus.size());
}

// 7. Suspension rules on 200 seeded (g, S) pairs, both |S| branches hit.
bool criterion_suspension(std::string& detail) {
    int good = 0, full_branch = 0, partial_branch = 0;
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(
            {2 + i % 7, kProbabilities[i % 3], 0x5EED00ull + i, true});
        std::mt19937_64 rng(0x5EED00ull + i);
        VertexSet s;
        if (i % 4 == 0) {
            s = maximum_independent_set_witness(g);
        } else {
            const int target = static_cast<int>(rng() % (dimension(g) + 1));
            std::vector<VertexId> order(g.order());
            for (VertexId v = 0; v < g.order(); ++v) order[v] = v;
            std::shuffle(order.begin(), order.end(), rng);
            for (VertexId v : order) {
                if (static_cast<int>(s.size()) >= target) break;
                bool ok = true;
                for (VertexId w : s)
                    if (g.has_edge(v, w)) ok = false;
                if (ok) s.push_back(v);
            }
        }
        if (static_cast<int>(s.size()) == dimension(g))
            ++full_branch;
        else
            ++partial_branch;
        if (check_suspension(g, s)) ++good;
    }
    detail = std::to_string(good) + "/200 pairs (" +
             std::to_string(full_branch) + " with |S| = dim, " +
             std::to_string(partial_branch) + " below)";
    return good == 200 && full_branch > 0 && partial_branch > 0;
}

// 8. Twin-pendant reduction and the floor(n/2) bound on augmented graphs.
bool criterion_pendant(std::string& detail) {
    int good = 0;
    for (int i = 0; i < 100; ++i) {
        const Graph base = random_graph(
            {2 + i % 6, kProbabilities[i % 3], 0xFACADEull + i, false});
        std::mt19937_64 rng(0xFACADEull + i);
        const VertexId attach = static_cast<VertexId>(rng() % base.order());
        std::vector<Edge> edges = base.edges();
        edges.push_back(make_edge(attach, base.order()));
        edges.push_back(make_edge(attach, base.order() + 1));
        const Graph aug = with_edges(base.order() + 2, edges);
        if (check_pendant_reduction(aug, attach, base.order(),
                                    base.order() + 1) &&
            matching_number(aug) <= aug.order() / 2)
            ++good;
    }
    detail = std::to_string(good) + "/100 augmented graphs";
    return good == 100;
}

// 9. Additivity of all four invariants over 100 seeded component pairs.
bool criterion_additivity(std::string& detail) {
    int good = 0;
    for (int i = 0; i < 100; ++i) {
        const Graph left = random_graph(
            {1 + i % 7, kProbabilities[i % 3], 0xAB1E00ull + i, false});
        const Graph right = random_graph(
            {1 + (i / 2) % 7, kProbabilities[(i + 1) % 3], 0xAB1E00ull + 7919 + i,
             false});
        if (check_union_additivity({left, right})) ++good;
    }
    detail = std::to_string(good) + "/100 component pairs additive";
    return good == 100;
}

// 10. dim = 1 iff complete, on the corpus and on all 1024 subgraphs of K5.
bool criterion_dim_one(std::string& detail) {
    int good = 0, total = 0;
    std::vector<Edge> all;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) all.emplace_back(u, v);
    for (unsigned mask = 0; mask < 1u << 10; ++mask, ++total) {
        std::vector<Edge> edges;
        for (size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) edges.push_back(all[i]);
        if (check_dim_one_iff_complete(with_edges(5, edges))) ++good;
    }
    for (const Graph& g : oracle_corpus()) {
        ++total;
        if (check_dim_one_iff_complete(g)) ++good;
    }
    detail = std::to_string(good) + "/" + std::to_string(total) +
             " graphs (1024 K5 subsets + corpus)";
    return good == total;
}

std::string capture(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return "<popen failed>";
    std::string out;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        out.append(buffer, got);
    pclose(pipe);
    return out;
}

// 11. verify --jobs 4 and --jobs 1 emit byte-identical report streams.
bool criterion_determinism(std::string& detail) {
    const std::string base =
        std::string(MATCHDIM_CLI_PATH) + " verify --max-b 3 --d-slack 2";
    const std::string serial = capture(base + " --jobs 1 2>/dev/null");
    const std::string parallel = capture(base + " --jobs 4 2>/dev/null");
    const bool ok = !serial.empty() && serial == parallel;
    detail = std::to_string(serial.size()) + " bytes, streams " +
             (ok ? "identical" : "DIFFER");
    return ok;
}

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<bool(std::string&)> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"theorem sweep b<=3, d<=min+2", 120.0, criterion_sweep},
        {"reference example tuples", 30.0, criterion_examples},
        {"star and complete closed forms", 60.0, criterion_closed_forms},
        {"3-cycle suspension remark", 60.0, criterion_c3_remark},
        {"oracle equivalence on 500 graphs", 120.0, criterion_oracle_equivalence},
        {"chain and dimension bounds", 120.0, criterion_inequalities},
        {"suspension rules on 200 pairs", 120.0, criterion_suspension},
        {"pendant twin + floor bound", 120.0, criterion_pendant},
        {"component additivity", 120.0, criterion_additivity},
        {"dim = 1 iff complete", 60.0, criterion_dim_one},
        {"verify stream determinism", 120.0, criterion_determinism},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(Clock::now() - start).count();
        if (elapsed > criteria[i].limit_seconds) {
            ok = false;
            detail += " [over the " +
                      std::to_string(static_cast<int>(criteria[i].limit_seconds)) +
                      "s budget]";
        }
        std::printf("%s criterion %2zu: %-34s %s (%.2fs)\n",
                    ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    detail.c_str(), elapsed);
        if (!ok) ++failed;
    }
    if (failed > 0) std::printf("%d criteria FAILED\n", failed);
    return failed == 0 ? 0 : 1;
}
