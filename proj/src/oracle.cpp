#include "matchdim/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchdim {

namespace {

struct Enumeration {
    const std::vector<Edge>& edges;
    std::vector<char> covered;      // vertex -> covered by current matching
    std::vector<int> chosen;        // indices into edges
    int best_match = 0;
    int best_min_maximal = -1;      // -1 until the first maximal matching
    int best_induced = 0;

    explicit Enumeration(const Graph& g)
        : edges(g.edges()), covered(g.order(), 0) {}

    bool maximal() const {
        for (const auto& [u, v] : edges)
            if (!covered[u] && !covered[v]) return false;
        return true;
    }

    bool induced() const {
        // No edge may meet two distinct chosen edges; since chosen edges are
        // disjoint, such an edge has one endpoint in each.
        for (const auto& [u, v] : edges) {
            if (!covered[u] || !covered[v]) continue;
            int hits = 0;
            for (int idx : chosen) {
                const auto& [p, q] = edges[idx];
                if (u == p || u == q || v == p || v == q) ++hits;
            }
            if (hits >= 2) return false;
        }
        return true;
    }

    void visit() {
        int size = static_cast<int>(chosen.size());
        if (size > best_match) best_match = size;
        if (maximal() && (best_min_maximal < 0 || size < best_min_maximal))
            best_min_maximal = size;
        if (size > best_induced && induced()) best_induced = size;
    }

    void run(size_t next) {
        if (next == edges.size()) {
            visit();
            return;
        }
        run(next + 1);  // exclude edges[next]
        const auto& [u, v] = edges[next];
        if (!covered[u] && !covered[v]) {
            covered[u] = covered[v] = 1;
            chosen.push_back(static_cast<int>(next));
            run(next + 1);
            chosen.pop_back();
            covered[u] = covered[v] = 0;
        }
    }
};

int brute_force_dim(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        int size = 0;
        bool independent = true;
        for (int v = 0; v < n && independent; ++v) {
            if (!(mask >> v & 1)) continue;
            ++size;
            for (int w = v + 1; w < n; ++w)
                if ((mask >> w & 1) && g.has_edge(v, w)) {
                    independent = false;
                    break;
                }
        }
        if (independent && size > best) best = size;
    }
    return best;
}

}  // namespace

InvariantProfile oracle_profile(const Graph& g, int cap) {
    if (g.order() == 0)
        throw std::invalid_argument("oracle_profile: empty graph (n = 0)");
    // 62 is a hard limit of the subset enumeration, applied even when the
    // configured cap is raised above it.
    if (g.order() > cap || g.order() > 62)
        throw std::invalid_argument(
            "oracle_profile: graph too large for oracle (n = " +
            std::to_string(g.order()) + " > cap " +
            std::to_string(std::min(cap, 62)) + ")");

    Enumeration e(g);
    e.run(0);
    return InvariantProfile{
        .ind_match = e.best_induced,
        .min_match = e.best_min_maximal < 0 ? 0 : e.best_min_maximal,
        .match = e.best_match,
        .dim = brute_force_dim(g),
    };
}

}  // namespace matchdim
