#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace matchdim {

using VertexId = int;

/// Undirected edge, always normalized so that first < second.
using Edge = std::pair<VertexId, VertexId>;

/// Plain list of vertex indices; callers may pass them unsorted and with
/// duplicates, operations normalize internally.
using VertexSet = std::vector<VertexId>;

Edge make_edge(VertexId u, VertexId v);

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Construction goes through the factory functions below, which enforce the
/// class invariants: no loops, no duplicate edges, all endpoints in range.
/// Adjacency is kept both as a sorted edge list and as per-vertex sorted
/// neighbor lists; instances are safe to share across threads.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically with u < v in each pair.
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    int degree(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }

    /// Optional display names ("v_1", "x_2", ...). Algorithms never consult
    /// these; they only flow into DOT exports.
    const std::map<VertexId, std::string>& labels() const { return labels_; }
    const std::string* label(VertexId v) const;

    bool is_independent_set(const VertexSet& s) const;
    bool connected() const;

    /// Structural + label equality. Vertex identity is positional, so this is
    /// not isomorphism.
    bool operator==(const Graph& rhs) const;

    friend Graph with_edges(int n, const std::vector<Edge>& pairs,
                            std::map<VertexId, std::string> labels);

private:
    Graph(int n, std::vector<Edge> sorted_edges,
          std::map<VertexId, std::string> labels);

    int n_ = 0;
    std::vector<Edge> edges_;                  // sorted, deduplicated, u < v
    std::vector<std::vector<VertexId>> adj_;   // sorted neighbor lists
    std::map<VertexId, std::string> labels_;
};

/// n isolated vertices. n = 0 is a legal value (rejected later by solvers).
Graph empty_graph(int n);

/// Graph with exactly the given unordered pairs (duplicates collapse).
/// Throws std::invalid_argument on loops or out-of-range endpoints.
Graph with_edges(int n, const std::vector<Edge>& pairs,
                 std::map<VertexId, std::string> labels = {});

/// Complete graph K_n, n >= 1.
Graph complete_graph(int n);

/// Star K_{1,s}, s >= 1. Leaves occupy indices 0..s-1 with labels x_1..x_s;
/// the center is the last index s with label x_v.
Graph star_graph(int s);

/// Induced subgraph on w, re-indexed 0..|w|-1 in ascending original order.
/// Labels are carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& w);

/// Index-shifted union; component i occupies a contiguous block and its
/// labels are suffixed with "#i".
Graph disjoint_union(const std::vector<Graph>& gs);

/// S-suspension: one new vertex w (index n, label "susp") adjacent to every
/// vertex outside s. Throws if s is not an independent set.
Graph s_suspension(const Graph& g, const VertexSet& s);

}  // namespace matchdim
