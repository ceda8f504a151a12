#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edcslab/graph.hpp"

namespace edcslab {

/// A set of vertex-disjoint edges of some host graph.
struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
};

/// mate[v] = partner of v, or -1 when unmatched.
std::vector<int> mate_array(const Matching& m, int n);

bool matching_is_valid(const Graph& g, const Matching& m);
void validate_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching in a general graph (blossom contraction).
/// Deterministic for a given graph.
Matching maximum_matching(const Graph& g);

/// Samples among maximum matchings by relabeling the vertices with a seeded
/// permutation before the deterministic solve. Always maximum.
Matching maximum_matching_seeded(const Graph& g, std::uint64_t seed);

/// Exhaustive-search oracle. Guard: at most 16 vertices.
Matching brute_force_maximum_matching(const Graph& g);

/// Greedy maximal matching over the given edge order; edges of g missing
/// from the order are swept afterwards in canonical order, so the result is
/// always maximal.
Matching maximal_matching(const Graph& g, std::span<const Edge> order);
Matching maximal_matching(const Graph& g);

/// One path or cycle of the union of two matchings.
struct AlternatingComponent {
    enum class Kind { Path, Cycle };
    enum class Origin { FromM, FromMStar };
    struct TaggedEdge {
        Edge edge;
        Origin origin;
    };

    Kind kind = Kind::Path;
    std::vector<int> vertices;       // in walk order
    std::vector<TaggedEdge> edges;   // in walk order, origins alternate
    bool is_augmenting = false;      // path whose first and last edges are M*-edges

    /// |component ∩ M*| − |component ∩ M|; +1 exactly for augmenting paths.
    int mstar_surplus() const;
};

/// Decompose the union of two matchings over n vertices into alternating
/// paths and cycles. An edge present in both matchings becomes a 2-cycle, so
/// every matched edge is accounted for.
std::vector<AlternatingComponent> decompose_union(const Matching& m,
                                                  const Matching& mstar,
                                                  int n);

// Matching text format: "k" then k lines "u v".
Matching load_matching(const std::string& path);
void save_matching(const Matching& m, const std::string& path);

namespace detail {

/// Single-phase blossom search, reusable across calls. Exposed so that the
/// Gallai-Edmonds oracle can test vertex deletions by warm-starting from an
/// existing maximum matching instead of re-solving from scratch.
class BlossomSearch {
public:
    explicit BlossomSearch(const Graph& g);

    /// Looks for an augmenting path from the free vertex `root`, flipping it
    /// into `mate` when found. Vertices equal to `excluded` are treated as
    /// deleted. Returns true when the matching grew.
    bool try_augment(std::vector<int>& mate, int root, int excluded = -1);

private:
    int find_stem_intersection(const std::vector<int>& mate, int a, int b);
    void mark_blossom_path(std::vector<int>& mate, int v, int stem, int child);

    const Graph* g_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> reached_;
    std::vector<char> in_blossom_;
    std::vector<char> on_stem_;
    std::vector<int> queue_;
};

}  // namespace detail

}  // namespace edcslab
