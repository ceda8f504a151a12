#include "edcslab/matching.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "edcslab/errors.hpp"
#include "edcslab/rng.hpp"

namespace edcslab {

std::vector<int> mate_array(const Matching& m, int n) {
    std::vector<int> mate(n, -1);
    for (const Edge& e : m.edges) {
        if (e.u < 0 || e.v >= n) {
            throw std::invalid_argument("matching edge out of range");
        }
        if (mate[e.u] != -1 || mate[e.v] != -1) {
            throw std::invalid_argument("matching edges share endpoint " +
                                        std::to_string(mate[e.u] != -1 ? e.u : e.v));
        }
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return mate;
}

bool matching_is_valid(const Graph& g, const Matching& m) {
    try {
        validate_matching(g, m);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

void validate_matching(const Graph& g, const Matching& m) {
    mate_array(m, g.vertex_count());
    for (const Edge& e : m.edges) {
        if (!g.has_edge(e.u, e.v)) {
            throw std::invalid_argument("matching edge (" + std::to_string(e.u) +
                                        ", " + std::to_string(e.v) +
                                        ") not in host graph");
        }
    }
}

namespace detail {

BlossomSearch::BlossomSearch(const Graph& g) : g_(&g) {
    const int n = g.vertex_count();
    parent_.resize(n);
    base_.resize(n);
    reached_.resize(n);
    in_blossom_.resize(n);
    on_stem_.resize(n);
    queue_.reserve(n);
}

// Walks both alternating paths back toward the root and returns the first
// common base: the stem vertex of the new blossom.
int BlossomSearch::find_stem_intersection(const std::vector<int>& mate, int a, int b) {
    std::fill(on_stem_.begin(), on_stem_.end(), 0);
    int v = a;
    while (true) {
        v = base_[v];
        on_stem_[v] = 1;
        if (mate[v] == -1) {
            break;  // only the phase root is free
        }
        v = parent_[mate[v]];
    }
    v = b;
    while (!on_stem_[base_[v]]) {
        v = parent_[mate[base_[v]]];
    }
    return base_[v];
}

void BlossomSearch::mark_blossom_path(std::vector<int>& mate, int v, int stem, int child) {
    while (base_[v] != stem) {
        in_blossom_[base_[v]] = 1;
        in_blossom_[base_[mate[v]]] = 1;
        parent_[v] = child;
        child = mate[v];
        v = parent_[mate[v]];
    }
}

bool BlossomSearch::try_augment(std::vector<int>& mate, int root, int excluded) {
    const int n = g_->vertex_count();
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(reached_.begin(), reached_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    reached_[root] = 1;
    queue_.push_back(root);

    int exposed = -1;
    for (std::size_t head = 0; head < queue_.size() && exposed < 0; ++head) {
        const int v = queue_[head];
        for (const auto& inc : g_->incident(v)) {
            const int to = inc.to;
            if (to == excluded || base_[v] == base_[to] || mate[v] == to) {
                continue;
            }
            if (to == root || (mate[to] != -1 && parent_[mate[to]] != -1)) {
                // Odd cycle between two even vertices: contract the blossom.
                const int stem = find_stem_intersection(mate, v, to);
                std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                mark_blossom_path(mate, v, stem, to);
                mark_blossom_path(mate, to, stem, v);
                for (int i = 0; i < n; ++i) {
                    if (in_blossom_[base_[i]]) {
                        base_[i] = stem;
                        if (!reached_[i]) {
                            reached_[i] = 1;
                            queue_.push_back(i);
                        }
                    }
                }
            } else if (parent_[to] == -1) {
                parent_[to] = v;
                if (mate[to] == -1) {
                    exposed = to;
                    break;
                }
                reached_[mate[to]] = 1;
                queue_.push_back(mate[to]);
            }
        }
    }
    if (exposed < 0) {
        return false;
    }
    // Flip the alternating path; parent links already route through blossoms.
    int v = exposed;
    while (v != -1) {
        const int pv = parent_[v];
        const int next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
    return true;
}

}  // namespace detail

namespace {

Matching matching_from_mates(const std::vector<int>& mate) {
    Matching m;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
        if (mate[v] > v) {
            m.edges.push_back({v, mate[v]});
        }
    }
    return m;
}

std::vector<int> solve_mates(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> mate(n, -1);
    for (int v = 0; v < n; ++v) {
        if (mate[v] != -1) {
            continue;
        }
        for (const auto& inc : g.incident(v)) {
            if (mate[inc.to] == -1) {
                mate[v] = inc.to;
                mate[inc.to] = v;
                break;
            }
        }
    }
    detail::BlossomSearch search(g);
    for (int v = 0; v < n; ++v) {
        if (mate[v] == -1) {
            search.try_augment(mate, v);
        }
    }
    return mate;
}

}  // namespace

Matching maximum_matching(const Graph& g) {
    return matching_from_mates(solve_mates(g));
}

Matching maximum_matching_seeded(const Graph& g, std::uint64_t seed) {
    const int n = g.vertex_count();
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    Rng rng(seed);
    rng.shuffle(label);
    std::vector<Edge> relabeled;
    relabeled.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        relabeled.push_back(make_edge(label[e.u], label[e.v]));
    }
    const Graph shuffled(n, std::move(relabeled));
    std::vector<int> inverse(n);
    for (int v = 0; v < n; ++v) {
        inverse[label[v]] = v;
    }
    Matching m;
    for (const Edge& e : maximum_matching(shuffled).edges) {
        m.edges.push_back(make_edge(inverse[e.u], inverse[e.v]));
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

namespace {

class ExhaustiveMatcher {
public:
    explicit ExhaustiveMatcher(const Graph& g)
        : g_(g), n_(g.vertex_count()), used_(n_, 0) {}

    Matching solve() {
        recurse(0, 0);
        std::sort(best_.edges.begin(), best_.edges.end());
        return best_;
    }

private:
    void recurse(int v, int size) {
        // Bound: every remaining vertex can contribute at most half an edge.
        int free_tail = 0;
        for (int w = v; w < n_; ++w) {
            free_tail += !used_[w];
        }
        if (size + free_tail / 2 <= best_size_ && best_size_ >= 0) {
            return;
        }
        if (v == n_) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = current_;
            }
            return;
        }
        if (used_[v]) {
            recurse(v + 1, size);
            return;
        }
        // Branch 1: leave v unmatched.
        recurse(v + 1, size);
        // Branch 2: match v with a free later neighbor.
        used_[v] = 1;
        for (const auto& inc : g_.incident(v)) {
            if (inc.to < v || used_[inc.to]) {
                continue;
            }
            used_[inc.to] = 1;
            current_.edges.push_back({v, inc.to});
            recurse(v + 1, size + 1);
            current_.edges.pop_back();
            used_[inc.to] = 0;
        }
        used_[v] = 0;
    }

    const Graph& g_;
    int n_;
    std::vector<char> used_;
    Matching current_;
    Matching best_;
    int best_size_ = -1;
};

}  // namespace

Matching brute_force_maximum_matching(const Graph& g) {
    if (g.vertex_count() > 16) {
        throw std::invalid_argument("graph too large for the exhaustive oracle (n > 16)");
    }
    return ExhaustiveMatcher(g).solve();
}

Matching maximal_matching(const Graph& g, std::span<const Edge> order) {
    std::vector<char> used(g.vertex_count(), 0);
    Matching m;
    auto take = [&](const Edge& e) {
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            m.edges.push_back(e);
        }
    };
    for (const Edge& raw : order) {
        const Edge e = make_edge(raw.u, raw.v);
        if (!g.has_edge(e.u, e.v)) {
            throw std::invalid_argument("ordering contains non-edge (" +
                                        std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ")");
        }
        take(e);
    }
    for (const Edge& e : g.edges()) {
        take(e);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

Matching maximal_matching(const Graph& g) {
    return maximal_matching(g, std::span<const Edge>{});
}

int AlternatingComponent::mstar_surplus() const {
    int surplus = 0;
    for (const TaggedEdge& te : edges) {
        surplus += te.origin == Origin::FromMStar ? 1 : -1;
    }
    return surplus;
}

std::vector<AlternatingComponent> decompose_union(const Matching& m,
                                                  const Matching& mstar,
                                                  int n) {
    const std::vector<int> mate_m = mate_array(m, n);
    const std::vector<int> mate_s = mate_array(mstar, n);
    using Origin = AlternatingComponent::Origin;

    std::vector<AlternatingComponent> components;

    // Edges in both matchings become 2-cycles; their endpoints never touch
    // any other union edge.
    std::vector<char> done(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!done[v] && mate_m[v] == mate_s[v] && mate_m[v] > v) {
            const int w = mate_m[v];
            done[v] = done[w] = 1;
            AlternatingComponent c;
            c.kind = AlternatingComponent::Kind::Cycle;
            c.vertices = {v, w};
            c.edges = {{{v, w}, Origin::FromM}, {{v, w}, Origin::FromMStar}};
            components.push_back(std::move(c));
        }
    }

    auto union_degree = [&](int v) {
        return (mate_m[v] != -1 ? 1 : 0) + (mate_s[v] != -1 ? 1 : 0);
    };

    // Walk from `start` along alternating edges, beginning with the edge of
    // `first` origin, until the walk leaves the union or closes a cycle.
    auto walk = [&](int start, Origin first) {
        AlternatingComponent c;
        c.vertices.push_back(start);
        done[start] = 1;
        int at = start;
        Origin want = first;
        while (true) {
            const int next = want == Origin::FromM ? mate_m[at] : mate_s[at];
            if (next == -1) {
                c.kind = AlternatingComponent::Kind::Path;
                break;
            }
            c.edges.push_back({make_edge(at, next), want});
            if (next == start) {
                c.kind = AlternatingComponent::Kind::Cycle;
                break;
            }
            c.vertices.push_back(next);
            done[next] = 1;
            at = next;
            want = want == Origin::FromM ? Origin::FromMStar : Origin::FromM;
        }
        return c;
    };

    // Open paths first, starting from their smallest endpoint.
    for (int v = 0; v < n; ++v) {
        if (!done[v] && union_degree(v) == 1) {
            const Origin first = mate_m[v] != -1 ? Origin::FromM : Origin::FromMStar;
            AlternatingComponent c = walk(v, first);
            c.is_augmenting = !c.edges.empty() &&
                              c.edges.front().origin == Origin::FromMStar &&
                              c.edges.back().origin == Origin::FromMStar;
            components.push_back(std::move(c));
        }
    }
    // Remaining union vertices lie on proper cycles.
    for (int v = 0; v < n; ++v) {
        if (!done[v] && union_degree(v) == 2) {
            components.push_back(walk(v, Origin::FromM));
        }
    }
    return components;
}

Matching load_matching(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open matching file: " + path);
    }
    std::string line;
    int line_no = 0;
    long long k = -1;
    Matching m;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') {
            continue;
        }
        ss.clear();
        ss.str(line);
        if (k < 0) {
            if (!(ss >> k) || k < 0) {
                throw ParseError("malformed matching header", line_no);
            }
            continue;
        }
        long long u = 0;
        long long v = 0;
        if (!(ss >> u >> v)) {
            throw ParseError("malformed matching edge", line_no);
        }
        if (u == v || u < 0 || v < 0) {
            throw ParseError("invalid matching edge", line_no);
        }
        m.edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    if (k < 0 || static_cast<long long>(m.edges.size()) != k) {
        throw ParseError("matching edge count does not match header", line_no);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

void save_matching(const Matching& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write matching file: " + path);
    }
    Matching sorted = m;
    std::sort(sorted.edges.begin(), sorted.edges.end());
    out << sorted.edges.size() << '\n';
    for (const Edge& e : sorted.edges) {
        out << e.u << ' ' << e.v << '\n';
    }
}

}  // namespace edcslab
