#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "edcslab/graph.hpp"

namespace edcslab {

enum class GraphFamily {
    GnmRandom,
    BipartiteRandom,
    Path,
    Complete,
    Star,
    PlantedTight,
};

const char* family_name(GraphFamily family);
GraphFamily family_from_name(const std::string& name);

/// Instance description. Output is a pure function of the config: the same
/// (family, n, m/p, seed) always yields the same graph.
struct GeneratorConfig {
    GraphFamily family = GraphFamily::GnmRandom;
    int n = 0;
    std::optional<long long> m;  // exact edge budget
    std::optional<double> p;     // independent edge probability
    std::uint64_t seed = 0;
};

/// Build the configured instance.
///  - gnm-random: m distinct edges (or each pair kept with probability p).
///  - bipartite-random: sides [0, n/2) and [n/2, n), edges across only.
///  - path: 0-1-...-(n-1).
///  - complete, star: the obvious fixed graphs (star centered at 0).
///  - planted-tight: disjoint 3-edge paths on consecutive 4-vertex blocks;
///    the middle edges form a maximal matching of half the maximum size.
/// Throws std::invalid_argument on infeasible parameters.
Graph generate(const GeneratorConfig& cfg);

}  // namespace edcslab
