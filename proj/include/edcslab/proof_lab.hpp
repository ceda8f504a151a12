#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edcslab/edcs.hpp"
#include "edcslab/gallai_edmonds.hpp"
#include "edcslab/graph.hpp"
#include "edcslab/matching.hpp"
#include "edcslab/rational.hpp"

namespace edcslab {

/// How an augmenting path certifies structure: either one suitable edge
/// bridging two components of H[D] whose specials lie on the path (T1), or
/// two vertex-disjoint suitable edges (T2). A suitable edge is a path edge
/// outside H with neither endpoint in A.
struct PathClassification {
    enum class Kind { T1, T2 };

    AlternatingComponent path;
    Kind kind = Kind::T1;
    Edge witness1;           // T1: the bridging edge. T2: first witness.
    Edge witness2;           // T2 only: second witness, disjoint from the first.
    int component1 = -1;     // T1: H[D] component of witness1.u
    int component2 = -1;     // T1: H[D] component of witness1.v
    int special1 = -1;       // T1: special vertex of component1 (on the path)
    int special2 = -1;       // T1: special vertex of component2 (on the path)
};

/// Suitable edges of an augmenting path, in path order.
std::vector<Edge> suitable_edges(const AlternatingComponent& path, const Graph& h,
                                 const GEDecomposition& ge);

/// Classifies one augmenting path by exhaustive witness search, preferring
/// T1 and breaking ties toward the lexicographically smallest witness.
/// Throws ClassificationError when no witness exists.
PathClassification classify_path(const AlternatingComponent& path, const Graph& h,
                                 const GEDecomposition& ge);

/// Decomposes m ∪ mstar and classifies every augmenting path. ge must carry
/// specials for m. Each classification is re-checked with witness_is_valid;
/// any failure raises ClassificationError with a full instance dump.
std::vector<PathClassification> classify_augmenting_paths(const Graph& g,
                                                          const Graph& h,
                                                          const GEDecomposition& ge,
                                                          const Matching& m,
                                                          const Matching& mstar);

/// Independent witness check. Re-derives suitability, component separation
/// (by its own traversal of H[D]) and specialness (from m and A directly),
/// sharing no logic with the classifier's search.
bool witness_is_valid(const PathClassification& c, const Graph& h,
                      const GEDecomposition& ge, const Matching& m);

/// Bipartite graph (W, Z) used to lower-bound mu(H). Both sides hold
/// original vertex ids and one id may appear on both sides, so W-side and
/// Z-side degrees are tracked separately.
struct AuxiliaryB {
    std::vector<int> w1;  // endpoints of T1 witnesses, sorted
    std::vector<int> w2;  // endpoints of T2 witnesses, sorted
    std::vector<int> z;   // all non-special vertices, sorted
    std::vector<int> z_a; // z ∩ A = A, sorted
    std::vector<std::pair<int, int>> edges;  // (w-side vertex, z-side vertex)

    std::vector<int> w_degree;  // per vertex id, B-degree as a W member
    std::vector<int> z_degree;  // per vertex id, B-degree as a Z member

    int w_size() const { return static_cast<int>(w1.size() + w2.size()); }
    long long total_w_degree(std::span<const int> members) const;
};

/// Builds B from the classifications: W1 vertices keep only their H-edges
/// into A, W2 vertices keep all their H-edges into non-special vertices.
/// Throws std::invalid_argument when a classification disagrees with ge.
AuxiliaryB build_auxiliary_b(const Graph& g, const Graph& h,
                             const GEDecomposition& ge,
                             const std::vector<PathClassification>& classifications);

/// Edge-degree-bounded bipartite instance for the part-size bound.
struct BipartiteGraph {
    int p_size = 0;
    int q_size = 0;
    std::vector<std::pair<int, int>> edges;  // (p index, q index)
};

struct PartSizeCheck {
    Rational d_p;    // average degree of the P side
    Rational bound;  // d_p / (beta - d_p) * |P|
    int q_size = 0;
    bool holds = false;
};

/// Checks |Q| >= d_P / (beta - d_P) * |P| for a bipartite graph whose edge
/// degrees are all <= beta. Throws on precondition violations (empty P, no
/// edges, or an overweight edge).
PartSizeCheck verify_part_size_bound(const BipartiteGraph& b, int beta);

/// Exact sides of (1 - x) / (1 + x) >= 1 - 2x for x >= 0.
std::pair<Rational, Rational> ratio_linearization_sides(const Rational& x);

enum class CheckStatus { Pass, Fail, SkippedEmpty, BelowGuaranteeParams };
const char* check_status_token(CheckStatus status);

struct CheckRecord {
    std::string name;
    Rational lhs;
    Rational rhs;
    enum class Cmp { GreaterEqual, Equal } cmp = Cmp::GreaterEqual;
    CheckStatus status = CheckStatus::Pass;
};

/// One full pipeline run: matchings, decomposition, specials, path
/// classification, graph B, and every recorded inequality.
struct ProofTrace {
    EdcsParams params;
    Rational epsilon;
    Rational lambda;  // epsilon / 10
    Rational alpha;   // |W1| / |W|, 0 when W is empty
    Rational sigma;   // 2|D \ S| / (|W1| beta_minus), 0 when W1 is empty
    bool guarantee_params = false;  // params strong enough for 2/3 - eps

    int mu_g = 0;
    int mu_h = 0;
    int path_count = 0;
    int t1_count = 0;
    int t2_count = 0;
    int w1_size = 0;
    int w2_size = 0;
    int z_size = 0;
    int za_size = 0;
    int d_minus_s = 0;

    std::vector<CheckRecord> checks;

    bool all_pass() const;
    const CheckRecord* find(const std::string& name) const;
};

/// Runs the whole verification pipeline on a (g, h) pair. h must be a
/// verified (params)-EDCS of g and epsilon must lie in (0, 1]. The maximum
/// matchings of h and g are sampled with matching_seed.
ProofTrace verify_trace(const Graph& g, const Graph& h, const EdcsParams& params,
                        const Rational& epsilon, std::uint64_t matching_seed = 0);

/// Text dump of a full instance, used in failure reports.
std::string dump_instance(const std::string& context, const Graph& g,
                          const Graph& h, const Matching& m,
                          const Matching& mstar);

}  // namespace edcslab
