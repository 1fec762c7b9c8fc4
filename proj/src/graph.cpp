#include "matchdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace matchdim {

namespace {

void require_vertex(const Graph& g, VertexId v, const char* what) {
    if (!g.has_vertex(v))
        throw std::invalid_argument(std::string(what) + ": vertex " +
                                    std::to_string(v) + " out of range [0, " +
                                    std::to_string(g.order()) + ")");
}

}  // namespace

Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, std::vector<Edge> sorted_edges,
             std::map<VertexId, std::string> labels)
    : n_(n), edges_(std::move(sorted_edges)), labels_(std::move(labels)) {
    adj_.resize(n_);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    require_vertex(*this, v, "neighbors");
    return adj_[v];
}

int Graph::degree(VertexId v) const {
    require_vertex(*this, v, "degree");
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::string* Graph::label(VertexId v) const {
    auto it = labels_.find(v);
    return it == labels_.end() ? nullptr : &it->second;
}

bool Graph::is_independent_set(const VertexSet& s) const {
    for (VertexId v : s) require_vertex(*this, v, "is_independent_set");
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (has_edge(s[i], s[j])) return false;
    return true;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n_;
}

bool Graph::operator==(const Graph& rhs) const {
    return n_ == rhs.n_ && edges_ == rhs.edges_ && labels_ == rhs.labels_;
}

Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("empty_graph: n must be >= 0");
    return with_edges(n, {});
}

Graph with_edges(int n, const std::vector<Edge>& pairs,
                 std::map<VertexId, std::string> labels) {
    if (n < 0) throw std::invalid_argument("with_edges: n must be >= 0");
    std::set<Edge> dedup;
    for (const auto& [u, v] : pairs) {
        if (u == v)
            throw std::invalid_argument("with_edges: loop edge {" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) + "} rejected");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("with_edges: edge {" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) +
                                        "} out of range [0, " +
                                        std::to_string(n) + ")");
        dedup.insert(make_edge(u, v));
    }
    for (const auto& [v, name] : labels)
        if (v < 0 || v >= n)
            throw std::invalid_argument("with_edges: label for vertex " +
                                        std::to_string(v) + " out of range");
    return Graph(n, std::vector<Edge>(dedup.begin(), dedup.end()),
                 std::move(labels));
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return with_edges(n, edges);
}

Graph star_graph(int s) {
    if (s < 1) throw std::invalid_argument("star_graph: s must be >= 1");
    std::vector<Edge> edges;
    std::map<VertexId, std::string> labels;
    for (VertexId i = 0; i < s; ++i) {
        edges.emplace_back(i, s);
        labels[i] = "x_" + std::to_string(i + 1);
    }
    labels[s] = "x_v";
    return with_edges(s + 1, edges, std::move(labels));
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
    VertexSet keep = w;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (VertexId v : keep) require_vertex(g, v, "induced_subgraph");

    std::vector<int> new_index(g.order(), -1);
    for (size_t i = 0; i < keep.size(); ++i) new_index[keep[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (new_index[u] >= 0 && new_index[v] >= 0)
            edges.emplace_back(new_index[u], new_index[v]);

    std::map<VertexId, std::string> labels;
    for (VertexId v : keep)
        if (const std::string* name = g.label(v)) labels[new_index[v]] = *name;
    return with_edges(static_cast<int>(keep.size()), edges, std::move(labels));
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    if (gs.empty())
        throw std::invalid_argument("disjoint_union: component list is empty");
    int n = 0;
    std::vector<Edge> edges;
    std::map<VertexId, std::string> labels;
    for (size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        for (const auto& [u, v] : g.edges()) edges.emplace_back(n + u, n + v);
        for (const auto& [v, name] : g.labels())
            labels[n + v] = name + "#" + std::to_string(i);
        n += g.order();
    }
    return with_edges(n, edges, std::move(labels));
}

Graph s_suspension(const Graph& g, const VertexSet& s) {
    if (!g.is_independent_set(s)) {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (g.has_edge(s[i], s[j]))
                    throw std::invalid_argument(
                        "s_suspension: S is not independent, edge {" +
                        std::to_string(std::min(s[i], s[j])) + "," +
                        std::to_string(std::max(s[i], s[j])) + "} lies inside S");
        throw std::invalid_argument("s_suspension: S is not independent");
    }
    std::vector<char> in_s(g.order(), 0);
    for (VertexId v : s) in_s[v] = 1;

    const VertexId w = g.order();
    std::vector<Edge> edges = g.edges();
    for (VertexId v = 0; v < g.order(); ++v)
        if (!in_s[v]) edges.emplace_back(v, w);
    std::map<VertexId, std::string> labels = g.labels();
    labels[w] = "susp";
    return with_edges(g.order() + 1, edges, std::move(labels));
}

}  // namespace matchdim
