#include "matchdim/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace matchdim {

namespace {

void require_nonempty(const Graph& g, const char* what) {
    if (g.order() == 0)
        throw std::invalid_argument(std::string(what) + ": empty graph (n = 0)");
}

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

Matching normalized(const Matching& m) {
    Matching out;
    out.reserve(m.size());
    for (const auto& [u, v] : m) out.push_back(make_edge(u, v));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Maximum matching: classic O(V^3) augmenting-path search with blossom
// contraction. Restricted to the vertices flagged in `active` so the witness
// self-reduction can peel off chosen edges without rebuilding graphs.
// ---------------------------------------------------------------------------

class BlossomMatcher {
public:
    BlossomMatcher(const Graph& g, const std::vector<char>& active)
        : g_(g),
          active_(active),
          mate_(g.order(), -1),
          parent_(g.order()),
          base_(g.order()),
          queued_(g.order()),
          in_blossom_(g.order()) {}

    int run() {
        int matched = 0;
        for (VertexId v = 0; v < g_.order(); ++v) {
            if (!active_[v] || mate_[v] != -1) continue;
            VertexId tail = find_augmenting_path(v);
            if (tail == -1) continue;
            ++matched;
            while (tail != -1) {
                VertexId p = parent_[tail], next = mate_[p];
                mate_[tail] = p;
                mate_[p] = tail;
                tail = next;
            }
        }
        return matched;
    }

private:
    VertexId lowest_common_base(VertexId a, VertexId b) const {
        std::vector<char> on_path(g_.order(), 0);
        for (;;) {
            a = base_[a];
            on_path[a] = 1;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (on_path[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(VertexId v, VertexId stem, VertexId child) {
        while (base_[v] != stem) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    VertexId find_augmenting_path(VertexId root) {
        std::fill(queued_.begin(), queued_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        queued_[root] = 1;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId to : g_.neighbors(v)) {
                if (!active_[to]) continue;
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    // Odd cycle: contract the blossom down to its base.
                    VertexId stem = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (VertexId i = 0; i < g_.order(); ++i)
                        if (active_[i] && in_blossom_[base_[i]]) {
                            base_[i] = stem;
                            if (!queued_[i]) {
                                queued_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;  // augmenting path found
                    queued_[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    const std::vector<char>& active_;
    std::vector<VertexId> mate_, parent_, base_;
    std::vector<char> queued_, in_blossom_;
};

int matching_number_masked(const Graph& g, const std::vector<char>& active) {
    return BlossomMatcher(g, active).run();
}

// ---------------------------------------------------------------------------
// Maximum independent set on a small adjacency-bitset graph. Branch and bound
// with a greedy clique-cover upper bound. Serves dimension() directly and
// induced_matching_number() through the edge-conflict graph.
// ---------------------------------------------------------------------------

struct BitGraph {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> rows;  // n rows of `words` words each

    explicit BitGraph(int n_) : n(n_), words((n_ + 63) / 64), rows(size_t(n_) * words) {}

    void add_edge(int u, int v) {
        rows[size_t(u) * words + v / 64] |= 1ull << (v % 64);
        rows[size_t(v) * words + u / 64] |= 1ull << (u % 64);
    }
    const uint64_t* row(int v) const { return &rows[size_t(v) * words]; }
    bool adjacent(int u, int v) const {
        return rows[size_t(u) * words + v / 64] >> (v % 64) & 1;
    }
};

using Bits = std::vector<uint64_t>;

int popcount(const Bits& b) {
    int c = 0;
    for (uint64_t w : b) c += __builtin_popcountll(w);
    return c;
}

int first_bit(const Bits& b) {
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i]) return static_cast<int>(i * 64 + __builtin_ctzll(b[i]));
    return -1;
}

class IndependentSetSolver {
public:
    explicit IndependentSetSolver(const BitGraph& g) : g_(g) {}

    int solve(const Bits& candidates) {
        best_ = 0;
        recurse(candidates, 0);
        return best_;
    }

private:
    // Partition the candidates into cliques greedily; the number of cliques
    // bounds the independence number from above.
    int clique_cover_bound(const Bits& p) const {
        std::vector<Bits> cliques;
        Bits rest = p;
        for (int v = first_bit(rest); v != -1; v = first_bit(rest)) {
            rest[v / 64] &= ~(1ull << (v % 64));
            bool placed = false;
            for (Bits& q : cliques) {
                bool all_adjacent = true;
                for (int w = 0; w < g_.words && all_adjacent; ++w)
                    if (q[w] & ~g_.row(v)[w]) all_adjacent = false;
                if (all_adjacent) {
                    q[v / 64] |= 1ull << (v % 64);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                Bits q(g_.words, 0);
                q[v / 64] |= 1ull << (v % 64);
                cliques.push_back(std::move(q));
            }
        }
        return static_cast<int>(cliques.size());
    }

    int max_degree_vertex(const Bits& p) const {
        int pick = -1, pick_deg = -1;
        Bits rest = p;
        for (int v = first_bit(rest); v != -1; v = first_bit(rest)) {
            rest[v / 64] &= ~(1ull << (v % 64));
            int deg = 0;
            for (int w = 0; w < g_.words; ++w)
                deg += __builtin_popcountll(p[w] & g_.row(v)[w]);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        return pick;
    }

    void recurse(const Bits& p, int chosen) {
        int remaining = popcount(p);
        if (remaining == 0) {
            best_ = std::max(best_, chosen);
            return;
        }
        if (chosen + remaining <= best_) return;
        if (chosen + clique_cover_bound(p) <= best_) return;

        int v = max_degree_vertex(p);
        Bits include = p;
        for (int w = 0; w < g_.words; ++w) include[w] &= ~g_.row(v)[w];
        include[v / 64] &= ~(1ull << (v % 64));
        recurse(include, chosen + 1);

        Bits exclude = p;
        exclude[v / 64] &= ~(1ull << (v % 64));
        recurse(exclude, chosen);
    }

    const BitGraph& g_;
    int best_ = 0;
};

BitGraph to_bitgraph(const Graph& g) {
    BitGraph bg(g.order());
    for (const auto& [u, v] : g.edges()) bg.add_edge(u, v);
    return bg;
}

Bits all_bits(int n) {
    Bits b((n + 63) / 64, 0);
    for (int v = 0; v < n; ++v) b[v / 64] |= 1ull << (v % 64);
    return b;
}

int max_independent_set_size(const BitGraph& bg, const Bits& candidates) {
    return IndependentSetSolver(bg).solve(candidates);
}

// Edges e, f conflict iff they cannot coexist in an induced matching: they
// share a vertex or some edge of g joins them. Induced matchings of g are
// exactly the independent sets of this conflict graph.
BitGraph edge_conflict_graph(const Graph& g) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    BitGraph bg(m);
    for (int i = 0; i < m; ++i) {
        const auto& [u1, v1] = edges[i];
        for (int j = i + 1; j < m; ++j) {
            const auto& [u2, v2] = edges[j];
            bool conflict = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 ||
                            g.has_edge(u1, u2) || g.has_edge(u1, v2) ||
                            g.has_edge(v1, u2) || g.has_edge(v1, v2);
            if (conflict) bg.add_edge(i, j);
        }
    }
    return bg;
}

// ---------------------------------------------------------------------------
// Minimum maximal matching. For the induced subgraph H on the uncovered
// vertices, every maximal matching of the whole graph decomposes as the
// chosen edges plus a maximal matching of H, so the value depends only on the
// set of uncovered vertices. The recursion picks one active edge {u,v} and
// branches on the edges of H incident to u or v: one of them must be picked,
// or {u,v} would remain addable. Subproblems are memoized on the bitmask of
// active vertices (this is what makes cliques cheap); graphs beyond 64
// vertices fall back to the same search pruned by the chain inequality
// min-match >= match/2, with a greedy maximal matching standing in for match.
// ---------------------------------------------------------------------------

class MinMaximalMatchingSolver {
public:
    explicit MinMaximalMatchingSolver(const Graph& g) : g_(g) {}

    // `forced` must be a matching; the search is restricted to maximal
    // matchings that contain it.
    int solve(const Matching& forced = {}) {
        const int n = g_.order();
        if (n <= 64) {
            adjacency_.assign(n, 0);
            for (const auto& [u, v] : g_.edges()) {
                adjacency_[u] |= 1ull << v;
                adjacency_[v] |= 1ull << u;
            }
            uint64_t active = n == 64 ? ~0ull : (1ull << n) - 1;
            for (const auto& [u, v] : forced)
                active &= ~(1ull << u | 1ull << v);
            return static_cast<int>(forced.size()) + eval(active);
        }
        active_.assign(n, 1);
        for (const auto& [u, v] : forced) active_[u] = active_[v] = 0;
        best_ = n;  // any maximal matching is smaller than n
        recurse_pruned(static_cast<int>(forced.size()));
        return best_;
    }

private:
    // --- memoized path (n <= 64) ---

    int eval(uint64_t active) {
        if (auto it = memo_.find(active); it != memo_.end()) return it->second;

        // Branch at an active vertex of minimum positive active degree.
        VertexId u = -1;
        int u_deg = g_.order() + 1;
        for (uint64_t rest = active; rest;) {
            const VertexId v = __builtin_ctzll(rest);
            rest &= rest - 1;
            const int deg = __builtin_popcountll(adjacency_[v] & active);
            if (deg > 0 && deg < u_deg) {
                u = v;
                u_deg = deg;
            }
        }
        int result = 0;
        if (u != -1) {
            const VertexId v = __builtin_ctzll(adjacency_[u] & active);
            result = g_.order();
            // Any maximal matching of the active subgraph covers u or v.
            for (VertexId x : {u, v})
                for (uint64_t rest = adjacency_[x] & active; rest;) {
                    const VertexId y = __builtin_ctzll(rest);
                    rest &= rest - 1;
                    if (x == v && y == u) continue;  // {u,v} handled once
                    result = std::min(
                        result,
                        1 + eval(active & ~(1ull << x | 1ull << y)));
                }
        }
        memo_.emplace(active, result);
        return result;
    }

    // --- pruned fallback (n > 64) ---

    int greedy_maximal_size() const {
        std::vector<char> covered(g_.order(), 0);
        int size = 0;
        for (const auto& [u, v] : g_.edges())
            if (active_[u] && active_[v] && !covered[u] && !covered[v]) {
                covered[u] = covered[v] = 1;
                ++size;
            }
        return size;
    }

    VertexId pick_branch_vertex() const {
        VertexId pick = -1;
        int pick_deg = -1;
        for (VertexId v = 0; v < g_.order(); ++v) {
            if (!active_[v]) continue;
            int deg = 0;
            for (VertexId w : g_.neighbors(v))
                if (active_[w]) ++deg;
            if (deg > 0 && (pick == -1 || deg < pick_deg)) {
                pick = v;
                pick_deg = deg;
            }
        }
        return pick;
    }

    void recurse_pruned(int chosen) {
        VertexId u = pick_branch_vertex();
        if (u == -1) {  // no active edge left: current selection is maximal
            best_ = std::min(best_, chosen);
            return;
        }
        // min-match(H) >= match(H)/2 >= greedy/2.
        int bound = (greedy_maximal_size() + 1) / 2;
        if (chosen + bound >= best_) return;

        VertexId v = -1;
        for (VertexId w : g_.neighbors(u))
            if (active_[w]) {
                v = w;
                break;
            }
        std::vector<Edge> branches;
        for (VertexId w : g_.neighbors(u))
            if (active_[w]) branches.emplace_back(u, w);
        for (VertexId w : g_.neighbors(v))
            if (active_[w] && w != u) branches.emplace_back(v, w);
        for (const auto& [x, y] : branches) {
            active_[x] = active_[y] = 0;
            recurse_pruned(chosen + 1);
            active_[x] = active_[y] = 1;
        }
    }

    const Graph& g_;
    std::vector<uint64_t> adjacency_;
    std::unordered_map<uint64_t, int> memo_;
    std::vector<char> active_;
    int best_ = 0;
};

int min_maximal_matching_forcing(const Graph& g, const Matching& forced) {
    return MinMaximalMatchingSolver(g).solve(forced);
}

bool pairwise_disjoint(const Matching& m) {
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i].first == m[j].first || m[i].first == m[j].second ||
                m[i].second == m[j].first || m[i].second == m[j].second)
                return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool is_matching(const Graph& g, const Matching& m) {
    for (const auto& e : m)
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("is_matching: pair " + edge_str(e) +
                                        " is not an edge of the graph");
    return pairwise_disjoint(m);
}

bool is_maximal_matching(const Graph& g, const Matching& m) {
    if (!is_matching(g, m))
        throw std::invalid_argument("is_maximal_matching: input is not a matching");
    std::vector<char> covered(g.order(), 0);
    for (const auto& [u, v] : m) covered[u] = covered[v] = 1;
    for (const auto& [u, v] : g.edges())
        if (!covered[u] && !covered[v]) return false;
    return true;
}

bool is_induced_matching(const Graph& g, const Matching& m) {
    if (!is_matching(g, m))
        throw std::invalid_argument("is_induced_matching: input is not a matching");
    // An edge meeting two distinct members has one endpoint in each, so it is
    // enough to test adjacency between endpoints of different members.
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j) {
            const auto& [u1, v1] = m[i];
            const auto& [u2, v2] = m[j];
            if (g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) ||
                g.has_edge(v1, v2))
                return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

int matching_number(const Graph& g) {
    require_nonempty(g, "matching_number");
    std::vector<char> active(g.order(), 1);
    return matching_number_masked(g, active);
}

int min_matching_number(const Graph& g) {
    require_nonempty(g, "min_matching_number");
    return min_maximal_matching_forcing(g, {});
}

int induced_matching_number(const Graph& g) {
    require_nonempty(g, "induced_matching_number");
    if (g.edge_count() == 0) return 0;
    BitGraph conflict = edge_conflict_graph(g);
    return max_independent_set_size(conflict, all_bits(conflict.n));
}

int dimension(const Graph& g) {
    require_nonempty(g, "dimension");
    BitGraph bg = to_bitgraph(g);
    return max_independent_set_size(bg, all_bits(g.order()));
}

InvariantProfile invariant_profile(const Graph& g) {
    require_nonempty(g, "invariant_profile");
    return InvariantProfile{
        .ind_match = induced_matching_number(g),
        .min_match = min_matching_number(g),
        .match = matching_number(g),
        .dim = dimension(g),
    };
}

// ---------------------------------------------------------------------------
// Witnesses via self-reduction: pick the lexicographically smallest element
// whose forced inclusion still allows an optimal completion, then repeat.
// ---------------------------------------------------------------------------

Matching maximum_matching_witness(const Graph& g) {
    require_nonempty(g, "maximum_matching_witness");
    std::vector<char> active(g.order(), 1);
    int remaining = matching_number_masked(g, active);
    Matching chosen;
    while (remaining > 0) {
        for (const auto& [u, v] : g.edges()) {
            if (!active[u] || !active[v]) continue;
            active[u] = active[v] = 0;
            if (matching_number_masked(g, active) == remaining - 1) {
                chosen.emplace_back(u, v);
                --remaining;
                break;
            }
            active[u] = active[v] = 1;
        }
    }
    return normalized(chosen);
}

Matching minimum_maximal_matching_witness(const Graph& g) {
    require_nonempty(g, "minimum_maximal_matching_witness");
    const int target = min_matching_number(g);
    Matching chosen;
    std::vector<char> covered(g.order(), 0);
    while (static_cast<int>(chosen.size()) < target) {
        for (const auto& [u, v] : g.edges()) {
            if (covered[u] || covered[v]) continue;
            chosen.emplace_back(u, v);
            if (min_maximal_matching_forcing(g, chosen) == target) {
                covered[u] = covered[v] = 1;
                break;
            }
            chosen.pop_back();
        }
    }
    return normalized(chosen);
}

Matching maximum_induced_matching_witness(const Graph& g) {
    require_nonempty(g, "maximum_induced_matching_witness");
    const auto& edges = g.edges();
    BitGraph conflict = edge_conflict_graph(g);
    Bits candidates = all_bits(conflict.n);
    int remaining = max_independent_set_size(conflict, candidates);
    Matching chosen;
    for (int e = 0; e < conflict.n && remaining > 0; ++e) {
        if (!(candidates[e / 64] >> (e % 64) & 1)) continue;
        Bits next = candidates;
        for (int w = 0; w < conflict.words; ++w) next[w] &= ~conflict.row(e)[w];
        next[e / 64] &= ~(1ull << (e % 64));
        if (max_independent_set_size(conflict, next) == remaining - 1) {
            chosen.push_back(edges[e]);
            candidates = std::move(next);
            --remaining;
        }
    }
    return normalized(chosen);
}

VertexSet maximum_independent_set_witness(const Graph& g) {
    require_nonempty(g, "maximum_independent_set_witness");
    BitGraph bg = to_bitgraph(g);
    Bits candidates = all_bits(g.order());
    int remaining = max_independent_set_size(bg, candidates);
    VertexSet chosen;
    for (int v = 0; v < g.order() && remaining > 0; ++v) {
        if (!(candidates[v / 64] >> (v % 64) & 1)) continue;
        Bits next = candidates;
        for (int w = 0; w < bg.words; ++w) next[w] &= ~bg.row(v)[w];
        next[v / 64] &= ~(1ull << (v % 64));
        if (max_independent_set_size(bg, next) == remaining - 1) {
            chosen.push_back(v);
            candidates = std::move(next);
            --remaining;
        }
    }
    return chosen;
}

}  // namespace matchdim
