#include "matchdim/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchdim {

namespace {

// Builders assemble edges against 0-based indices; the traditional 1-based
// names (v_i, x_j, y_k) appear only in the label map. v_i has index i-1, the
// x-block starts at 2b, the y-block follows it.

void add_v_labels(std::map<VertexId, std::string>& labels, int count) {
    for (int i = 1; i <= count; ++i) labels[i - 1] = "v_" + std::to_string(i);
}

void add_block_labels(std::map<VertexId, std::string>& labels, int base,
                      int count, const char* stem) {
    for (int i = 1; i <= count; ++i)
        labels[base + i - 1] = std::string(stem) + "_" + std::to_string(i);
}

void add_clique(std::vector<Edge>& edges, int lo, int hi) {
    for (int u = lo; u <= hi; ++u)
        for (int v = u + 1; v <= hi; ++v) edges.emplace_back(u, v);
}

// Shared skeleton of cases 4-7: the (a-1)-edge matching v_1v_2, ..,
// v_{2a-3}v_{2a-2} followed by the clique on v_{2a-1}..v_{2b}.
void add_matching_and_clique(std::vector<Edge>& edges, int a, int b) {
    for (int i = 1; i <= a - 1; ++i) edges.emplace_back(2 * i - 2, 2 * i - 1);
    add_clique(edges, 2 * a - 2, 2 * b - 1);
}

void require(bool ok, const char* builder, const char* condition) {
    if (!ok)
        throw std::invalid_argument(std::string(builder) +
                                    ": parameter violation, requires " +
                                    condition);
}

}  // namespace

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::C1: return "C1";
        case CaseTag::C2: return "C2";
        case CaseTag::C3: return "C3";
        case CaseTag::C4: return "C4";
        case CaseTag::C5: return "C5";
        case CaseTag::C6: return "C6";
        case CaseTag::C7: return "C7";
    }
    return "?";
}

std::string feasibility_violation(int a, int b, int c, int d) {
    if (a < 1 || b < 1 || c < 1 || d < 1)
        throw std::invalid_argument(
            "feasible: a, b, c, d must be positive integers");
    if (a > b) return "a <= b violated";
    if (b > c) return "b <= c violated";
    if (c > 2 * b) return "c <= 2b violated";
    if (d < std::max(a, 2 * (c - b))) return "d >= max{a, 2(c-b)} violated";
    return {};
}

bool feasible(int a, int b, int c, int d) {
    return feasibility_violation(a, b, c, d).empty();
}

CaseTag dispatch_case(int a, int b, int c, int d) {
    std::string violation = feasibility_violation(a, b, c, d);
    if (!violation.empty())
        throw std::invalid_argument("dispatch_case: infeasible tuple, " +
                                    violation);
    if (a == 1) {
        if (b == c) return CaseTag::C1;
        return d == 2 * (c - b) ? CaseTag::C2 : CaseTag::C3;
    }
    if (b == c) return d == a ? CaseTag::C4 : CaseTag::C5;
    return 2 * (c - b) >= a ? CaseTag::C6 : CaseTag::C7;
}

ConstructionParams ConstructionParams::resolve(int a, int b, int c, int d) {
    return ConstructionParams{a, b, c, d, dispatch_case(a, b, c, d)};
}

Graph build_case1(int b, int d) {
    require(b >= 1, "build_case1", "b >= 1");
    require(d >= 1, "build_case1", "d >= 1");
    const int n = 2 * b + d - 1;
    std::vector<Edge> edges;
    add_clique(edges, 0, 2 * b - 1);
    for (int k = 1; k <= d - 1; ++k) edges.emplace_back(0, 2 * b + k - 1);
    std::map<VertexId, std::string> labels;
    add_v_labels(labels, 2 * b);
    add_block_labels(labels, 2 * b, d - 1, "x");
    return with_edges(n, edges, std::move(labels));
}

Graph build_case2(int b, int c) {
    require(b >= 1 && b < c && c <= 2 * b, "build_case2", "1 <= b < c <= 2b");
    const int cb = c - b;
    const int n = 2 * b + 2 * cb;
    std::vector<Edge> edges;
    add_clique(edges, 0, 2 * b - 1);
    // v_1..v_b join x_1..x_{c-b}; v_{b+1}..v_{2b} join x_{c-b+1}..x_{2(c-b)}.
    for (int k = 1; k <= b; ++k)
        for (int l = 1; l <= cb; ++l) {
            edges.emplace_back(k - 1, 2 * b + l - 1);
            edges.emplace_back(b + k - 1, 2 * b + cb + l - 1);
        }
    std::map<VertexId, std::string> labels;
    add_v_labels(labels, 2 * b);
    add_block_labels(labels, 2 * b, 2 * cb, "x");
    return with_edges(n, edges, std::move(labels));
}

Graph build_case3(int b, int c, int d) {
    require(b >= 1 && b < c && c <= 2 * b, "build_case3", "1 <= b < c <= 2b");
    require(d > 2 * (c - b), "build_case3", "d > 2(c-b)");
    const Graph base = build_case2(b, c);
    const int pendants = d - 2 * (c - b);
    std::vector<Edge> edges = base.edges();
    for (int k = 1; k <= pendants; ++k)
        edges.emplace_back(0, base.order() + k - 1);
    std::map<VertexId, std::string> labels = base.labels();
    add_block_labels(labels, base.order(), pendants, "y");
    return with_edges(base.order() + pendants, edges, std::move(labels));
}

Graph build_case4(int a, int b) {
    require(a > 1 && a <= b, "build_case4", "1 < a <= b");
    const int n = 2 * b + 1;
    const int apex = 2 * b;
    std::vector<Edge> edges;
    add_matching_and_clique(edges, a, b);
    for (int l = 0; l < 2 * b; ++l) edges.emplace_back(l, apex);
    std::map<VertexId, std::string> labels;
    add_v_labels(labels, 2 * b);
    labels[apex] = "x";
    return with_edges(n, edges, std::move(labels));
}

Graph build_case5(int a, int b, int d) {
    require(a > 1 && a <= b, "build_case5", "1 < a <= b");
    require(d > a, "build_case5", "d > a");
    const int apex = 2 * b;
    const int pendants = d - a - 1;
    const int n = 2 * b + 1 + pendants;
    std::vector<Edge> edges;
    add_matching_and_clique(edges, a, b);
    for (int l = 1; l <= a; ++l) edges.emplace_back(2 * l - 2, apex);
    for (int m = 1; m <= pendants; ++m) edges.emplace_back(0, apex + m);
    std::map<VertexId, std::string> labels;
    add_v_labels(labels, 2 * b);
    labels[apex] = "x";
    add_block_labels(labels, apex + 1, pendants, "y");
    return with_edges(n, edges, std::move(labels));
}

namespace {

// Cases 6 and 7 differ only in the size of the pendant block.
Graph build_bipartite_case(int a, int b, int c, int pendants) {
    const int cb = c - b;
    const int x_base = 2 * b;
    const int y_base = 2 * b + 2 * cb;
    const int n = y_base + pendants;
    std::vector<Edge> edges;
    add_matching_and_clique(edges, a, b);
    for (int l = 0; l < 2 * b; ++l)
        for (int m = 0; m < 2 * cb; ++m) edges.emplace_back(l, x_base + m);
    for (int p = 1; p <= pendants; ++p) edges.emplace_back(0, y_base + p - 1);
    std::map<VertexId, std::string> labels;
    add_v_labels(labels, 2 * b);
    add_block_labels(labels, x_base, 2 * cb, "x");
    add_block_labels(labels, y_base, pendants, "y");
    return with_edges(n, edges, std::move(labels));
}

}  // namespace

Graph build_case6(int a, int b, int c, int d) {
    require(a > 1 && a <= b && b < c && c <= 2 * b, "build_case6",
            "1 < a <= b < c <= 2b");
    require(2 * (c - b) >= a, "build_case6", "2(c-b) >= a");
    require(d >= 2 * (c - b), "build_case6", "d >= 2(c-b)");
    return build_bipartite_case(a, b, c, d - 2 * (c - b));
}

Graph build_case7(int a, int b, int c, int d) {
    require(a > 1 && a <= b && b < c && c <= 2 * b, "build_case7",
            "1 < a <= b < c <= 2b");
    require(a > 2 * (c - b), "build_case7", "a > 2(c-b)");
    require(d >= a, "build_case7", "d >= a");
    return build_bipartite_case(a, b, c, d - a);
}

Graph construct(int a, int b, int c, int d) {
    std::string violation = feasibility_violation(a, b, c, d);
    if (!violation.empty())
        throw std::invalid_argument("construct: infeasible tuple, " + violation);
    switch (dispatch_case(a, b, c, d)) {
        case CaseTag::C1: return build_case1(b, d);
        case CaseTag::C2: return build_case2(b, c);
        case CaseTag::C3: return build_case3(b, c, d);
        case CaseTag::C4: return build_case4(a, b);
        case CaseTag::C5: return build_case5(a, b, d);
        case CaseTag::C6: return build_case6(a, b, c, d);
        case CaseTag::C7: return build_case7(a, b, c, d);
    }
    throw std::logic_error("construct: unreachable");
}

std::pair<Matching, Matching> witness_matchings(int a, int b, int c, int d) {
    std::string violation = feasibility_violation(a, b, c, d);
    if (!violation.empty())
        throw std::invalid_argument("witness_matchings: infeasible tuple, " +
                                    violation);
    const CaseTag tag = dispatch_case(a, b, c, d);
    const int cb = c - b;

    Matching maximal;
    Matching maximum;
    if (tag == CaseTag::C2 || tag == CaseTag::C3) {
        // v_i v_{b+i}, then the perfect matching on the 2c-vertex core.
        for (int i = 1; i <= b; ++i) maximal.push_back(make_edge(i - 1, b + i - 1));
        for (int i = 1; i <= cb; ++i) {
            maximum.push_back(make_edge(i - 1, 2 * b + i - 1));
            maximum.push_back(make_edge(b + i - 1, 2 * b + cb + i - 1));
        }
        for (int j = 1; j <= 2 * b - c; ++j)
            maximum.push_back(make_edge(cb + j - 1, c + j - 1));
    } else {
        // v_1v_2, v_3v_4, ...: matching-block pairs, then clique pairs.
        for (int i = 1; i <= b; ++i)
            maximal.push_back(make_edge(2 * i - 2, 2 * i - 1));
        if (tag == CaseTag::C6 || tag == CaseTag::C7) {
            for (int i = 1; i <= 2 * cb; ++i)
                maximum.push_back(make_edge(i - 1, 2 * b + i - 1));
            for (int j = 1; j <= 2 * b - c; ++j)
                maximum.push_back(
                    make_edge(2 * cb + 2 * j - 2, 2 * cb + 2 * j - 1));
        } else {
            maximum = maximal;  // cases 1, 4, 5: b = c
        }
    }

    const Graph g = construct(a, b, c, d);
    if (!is_maximal_matching(g, maximal) ||
        static_cast<int>(maximal.size()) != b)
        throw std::logic_error("witness_matchings: maximal witness invalid");
    if (!is_matching(g, maximum) || static_cast<int>(maximum.size()) != c)
        throw std::logic_error("witness_matchings: maximum witness invalid");
    std::sort(maximal.begin(), maximal.end());
    std::sort(maximum.begin(), maximum.end());
    return {std::move(maximal), std::move(maximum)};
}

}  // namespace matchdim
