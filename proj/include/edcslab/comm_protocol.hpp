#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edcslab/edcs.hpp"
#include "edcslab/graph.hpp"
#include "edcslab/rational.hpp"

namespace edcslab {

/// How to divide the edges between the two players.
enum class SplitMode {
    Random,                  // each edge to one side uniformly, small overlap
    AdversarialBipartition,  // Alice: greedy high-degree core; Bob: the rest
};

const char* split_mode_name(SplitMode mode);
SplitMode split_mode_from_name(const std::string& name);

/// One-way protocol instance: Alice holds alice_edges, Bob holds bob_edges,
/// together covering the whole edge set (overlap allowed).
struct CommInstance {
    Graph graph;
    std::vector<Edge> alice_edges;
    std::vector<Edge> bob_edges;
    Rational epsilon;
    std::uint64_t seed = 0;
};

/// Deterministic split of g's edges. Random mode sends each edge to Alice
/// with probability 1/2 and to Bob otherwise, then duplicates it to the
/// other side with the overlap probability. Adversarial mode hands Alice a
/// maximal matching picked greedily by descending edge degree (on the
/// planted-tight family: the middle edge of every 3-path) and Bob the rest.
CommInstance split_edges(const Graph& g, SplitMode mode, std::uint64_t seed,
                         const Rational& epsilon,
                         double overlap_probability = 0.05);

struct CommResult {
    int beta = 0;
    long long message_edge_count = 0;
    int mu_output = 0;
    int mu_g = 0;
    Rational ratio;      // 1 when mu_g == 0
    Rational threshold;  // 2/3 - epsilon
    bool pass = false;   // ratio >= threshold
};

/// Alice builds a degree-constrained subgraph of her edges with the
/// parameters derived from epsilon and sends its edge list; Bob outputs a
/// maximum matching of message ∪ bob_edges. The message size is asserted
/// against the n*beta/2 cap that the degree constraints force.
CommResult run_protocol(const CommInstance& inst);

}  // namespace edcslab
