#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace edcslab {

/// Undirected edge, stored normalized with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Normalize an endpoint pair into an Edge. Throws on self-loops.
Edge make_edge(int a, int b);

/// Simple undirected graph over vertices 0..n-1. Immutable once built:
/// construction validates (range, self-loops, duplicates) and canonicalizes
/// the edge list, so instances are safe to share across threads.
class Graph {
public:
    struct IncidentEdge {
        int to = 0;
        int edge_id = 0;  // index into edges()
    };

    Graph() = default;
    explicit Graph(int n) : n_(n) { adj_.resize(n); }
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonical edge list: sorted lexicographically, u < v within each edge.
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const IncidentEdge> incident(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    /// Index of (u, v) in edges(), or -1 when absent. Logarithmic in deg(u).
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<IncidentEdge>> adj_;  // sorted by .to
};

/// deg(u) + deg(v) for an edge of g. Throws if e is not an edge of g.
int edge_degree(const Graph& g, Edge e);

/// Subgraph induced on a vertex subset. Vertex indices are preserved (the
/// result has the same vertex count; vertices outside the set are isolated)
/// and the subset is echoed back sorted.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// True when every edge of h is an edge of g (same vertex count).
bool is_subgraph(const Graph& g, const Graph& h);

// Edge-list text format: header "n m", then m lines "u v". '#' starts a
// comment line. Canonical output sorts edges and writes u < v.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);
std::string to_edge_list(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

}  // namespace edcslab
