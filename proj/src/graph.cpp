#include "edcslab/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "edcslab/errors.hpp"

namespace edcslab {

Edge make_edge(int a, int b) {
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    for (Edge& e : edges) {
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.u < 0 || e.v >= n) {
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ")");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    edges_ = std::move(edges);
    adj_.resize(n_);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        adj_[edges_[id].u].push_back({edges_[id].v, id});
        adj_[edges_[id].v].push_back({edges_[id].u, id});
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end(),
                  [](const IncidentEdge& a, const IncidentEdge& b) { return a.to < b.to; });
    }
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) {
        return -1;
    }
    const auto& list = adj_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const IncidentEdge& a, int b) { return a.to < b; });
    if (it != list.end() && it->to == v) {
        return it->edge_id;
    }
    return -1;
}

int edge_degree(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                    std::to_string(e.v) + ") not in graph");
    }
    return g.degree(e.u) + g.degree(e.v);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<char> keep(g.vertex_count(), 0);
    std::vector<int> sorted;
    sorted.reserve(vertices.size());
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        }
        if (!keep[v]) {
            keep[v] = 1;
            sorted.push_back(v);
        }
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (keep[e.u] && keep[e.v]) {
            edges.push_back(e);
        }
    }
    return {Graph(g.vertex_count(), std::move(edges)), std::move(sorted)};
}

bool is_subgraph(const Graph& g, const Graph& h) {
    if (h.vertex_count() != g.vertex_count()) {
        return false;
    }
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

namespace {

// Reads the next content line, skipping comments and blank lines.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        return true;
    }
    return false;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string tail;
    if (!(ss >> a >> b)) {
        return false;
    }
    if (ss >> tail) {
        return false;
    }
    return true;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) {
        throw ParseError("missing header", line_no == 0 ? 1 : line_no);
    }
    long long n = 0;
    long long m = 0;
    if (!parse_two_ints(line, n, m) || n < 0 || m < 0) {
        throw ParseError("malformed header, expected \"n m\"", line_no);
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, line_no)) {
            throw ParseError("unexpected end of file, expected " +
                                 std::to_string(m) + " edges",
                             line_no + 1);
        }
        long long u = 0;
        long long v = 0;
        if (!parse_two_ints(line, u, v)) {
            throw ParseError("malformed edge line", line_no);
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError("endpoint out of range", line_no);
        }
        if (u == v) {
            throw ParseError("self-loop", line_no);
        }
        const int a = static_cast<int>(std::min(u, v));
        const int b = static_cast<int>(std::max(u, v));
        const std::uint64_t key =
            (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        if (!seen.insert(key).second) {
            throw ParseError("duplicate edge", line_no);
        }
        edges.push_back({a, b});
    }
    if (next_content_line(in, line, line_no)) {
        throw ParseError("trailing data after " + std::to_string(m) + " edges",
                         line_no);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph file: " + path);
    }
    return parse_graph(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write graph file: " + path);
    }
    out << to_edge_list(g);
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace edcslab
