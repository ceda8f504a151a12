#include "edcslab/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "edcslab/rng.hpp"

namespace edcslab {

const char* family_name(GraphFamily family) {
    switch (family) {
        case GraphFamily::GnmRandom: return "gnm-random";
        case GraphFamily::BipartiteRandom: return "bipartite-random";
        case GraphFamily::Path: return "path";
        case GraphFamily::Complete: return "complete";
        case GraphFamily::Star: return "star";
        case GraphFamily::PlantedTight: return "planted-tight";
    }
    return "?";
}

GraphFamily family_from_name(const std::string& name) {
    if (name == "gnm-random" || name == "gnm") return GraphFamily::GnmRandom;
    if (name == "bipartite-random" || name == "bipartite") return GraphFamily::BipartiteRandom;
    if (name == "path") return GraphFamily::Path;
    if (name == "complete") return GraphFamily::Complete;
    if (name == "star") return GraphFamily::Star;
    if (name == "planted-tight" || name == "planted") return GraphFamily::PlantedTight;
    throw std::invalid_argument("unknown graph family: " + name);
}

namespace {

std::uint64_t pair_key(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Samples 'count' distinct pairs from 'candidates' via a seeded partial
// Fisher-Yates.
std::vector<Edge> sample_edges(std::vector<Edge> candidates, long long count, Rng& rng) {
    const auto total = static_cast<long long>(candidates.size());
    for (long long i = 0; i < count; ++i) {
        const auto j = i + static_cast<long long>(rng.bounded(total - i));
        std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(count);
    return candidates;
}

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.push_back({u, v});
        }
    }
    return pairs;
}

std::vector<Edge> cross_pairs(int left, int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(left) * (n - left));
    for (int u = 0; u < left; ++u) {
        for (int v = left; v < n; ++v) {
            pairs.push_back({u, v});
        }
    }
    return pairs;
}

std::vector<Edge> random_subset(const std::vector<Edge>& candidates, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (const Edge& e : candidates) {
        if (rng.unit() < p) {
            edges.push_back(e);
        }
    }
    return edges;
}

// Rejection sampling of m distinct pairs; falls back to shuffling the full
// candidate list when m is a large fraction of it.
std::vector<Edge> sample_m_edges(std::vector<Edge> candidates, long long m, Rng& rng) {
    const auto total = static_cast<long long>(candidates.size());
    if (m > total) {
        throw std::invalid_argument("edge budget " + std::to_string(m) +
                                    " exceeds maximum " + std::to_string(total));
    }
    if (m * 2 >= total) {
        return sample_edges(std::move(candidates), m, rng);
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    while (static_cast<long long>(edges.size()) < m) {
        const Edge& e = candidates[rng.bounded(total)];
        if (seen.insert(pair_key(e.u, e.v)).second) {
            edges.push_back(e);
        }
    }
    return edges;
}

}  // namespace

Graph generate(const GeneratorConfig& cfg) {
    if (cfg.n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    Rng rng(cfg.seed);
    switch (cfg.family) {
        case GraphFamily::GnmRandom: {
            auto candidates = all_pairs(cfg.n);
            if (cfg.p) {
                return Graph(cfg.n, random_subset(candidates, *cfg.p, rng));
            }
            if (!cfg.m) {
                throw std::invalid_argument("gnm-random needs m or p");
            }
            return Graph(cfg.n, sample_m_edges(std::move(candidates), *cfg.m, rng));
        }
        case GraphFamily::BipartiteRandom: {
            auto candidates = cross_pairs(cfg.n / 2, cfg.n);
            if (cfg.p) {
                return Graph(cfg.n, random_subset(candidates, *cfg.p, rng));
            }
            if (!cfg.m) {
                throw std::invalid_argument("bipartite-random needs m or p");
            }
            return Graph(cfg.n, sample_m_edges(std::move(candidates), *cfg.m, rng));
        }
        case GraphFamily::Path: {
            std::vector<Edge> edges;
            for (int v = 0; v + 1 < cfg.n; ++v) {
                edges.push_back({v, v + 1});
            }
            return Graph(cfg.n, std::move(edges));
        }
        case GraphFamily::Complete:
            return Graph(cfg.n, all_pairs(cfg.n));
        case GraphFamily::Star: {
            std::vector<Edge> edges;
            for (int v = 1; v < cfg.n; ++v) {
                edges.push_back({0, v});
            }
            return Graph(cfg.n, std::move(edges));
        }
        case GraphFamily::PlantedTight: {
            std::vector<Edge> edges;
            for (int base = 0; base + 3 < cfg.n; base += 4) {
                edges.push_back({base, base + 1});
                edges.push_back({base + 1, base + 2});
                edges.push_back({base + 2, base + 3});
            }
            return Graph(cfg.n, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown graph family");
}

}  // namespace edcslab
