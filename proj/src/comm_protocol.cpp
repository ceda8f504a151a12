#include "edcslab/comm_protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "edcslab/matching.hpp"
#include "edcslab/rng.hpp"

namespace edcslab {

const char* split_mode_name(SplitMode mode) {
    switch (mode) {
        case SplitMode::Random: return "random";
        case SplitMode::AdversarialBipartition: return "adversarial-bipartition";
    }
    return "unknown";
}

SplitMode split_mode_from_name(const std::string& name) {
    if (name == "random") return SplitMode::Random;
    if (name == "adversarial-bipartition" || name == "adversarial") {
        return SplitMode::AdversarialBipartition;
    }
    throw std::invalid_argument("unknown split mode: " + name);
}

CommInstance split_edges(const Graph& g, SplitMode mode, std::uint64_t seed,
                         const Rational& epsilon, double overlap_probability) {
    CommInstance inst;
    inst.graph = g;
    inst.epsilon = epsilon;
    inst.seed = seed;

    if (mode == SplitMode::Random) {
        Rng rng(seed);
        for (const Edge& e : g.edges()) {
            const bool to_alice = rng.unit() < 0.5;
            (to_alice ? inst.alice_edges : inst.bob_edges).push_back(e);
            if (rng.unit() < overlap_probability) {
                (to_alice ? inst.bob_edges : inst.alice_edges).push_back(e);
            }
        }
        return inst;
    }

    // Alice takes a maximal matching greedy by descending edge degree, the
    // densest edges first; Bob keeps everything else. On the planted-tight
    // family this gives Alice exactly the middle edge of every 3-path and
    // Bob the two end edges.
    std::vector<Edge> order = g.edges();
    std::sort(order.begin(), order.end(), [&g](const Edge& a, const Edge& b) {
        const int da = edge_degree(g, a);
        const int db = edge_degree(g, b);
        if (da != db) return da > db;
        return a < b;
    });
    const Matching core = maximal_matching(g, order);
    inst.alice_edges = core.edges;
    std::sort(inst.alice_edges.begin(), inst.alice_edges.end());
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(inst.alice_edges.begin(), inst.alice_edges.end(), e)) {
            inst.bob_edges.push_back(e);
        }
    }
    return inst;
}

CommResult run_protocol(const CommInstance& inst) {
    const int n = inst.graph.vertex_count();
    const EdcsParams params = params_for_epsilon(inst.epsilon);

    const Graph alice_graph(n, inst.alice_edges);
    const ConstructResult message = construct_edcs(alice_graph, params, inst.seed);

    CommResult out;
    out.beta = params.beta;
    out.message_edge_count = message.h.edge_count();
    if (out.message_edge_count * 2 > static_cast<long long>(n) * params.beta) {
        throw std::logic_error("run_protocol: message exceeds the degree-cap bound");
    }

    std::vector<Edge> union_edges = message.h.edges();
    union_edges.insert(union_edges.end(), inst.bob_edges.begin(),
                       inst.bob_edges.end());
    std::sort(union_edges.begin(), union_edges.end());
    union_edges.erase(std::unique(union_edges.begin(), union_edges.end()),
                      union_edges.end());
    const Graph bob_view(n, std::move(union_edges));

    out.mu_output = maximum_matching(bob_view).size();
    out.mu_g = maximum_matching(inst.graph).size();
    out.ratio = out.mu_g == 0 ? Rational(1) : Rational(out.mu_output, out.mu_g);
    out.threshold = Rational(2, 3) - inst.epsilon;
    out.pass = out.ratio >= out.threshold;
    return out;
}

}  // namespace edcslab
