#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "edcslab/comm_protocol.hpp"
#include "edcslab/generator.hpp"
#include "edcslab/graph.hpp"
#include "edcslab/matching.hpp"
#include "edcslab/rational.hpp"
#include "edcslab/rng.hpp"
#include "test_util.hpp"

using edcslab::CommInstance;
using edcslab::CommResult;
using edcslab::Edge;
using edcslab::Graph;
using edcslab::Rational;
using edcslab::SplitMode;
using edcslab::make_edge;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    edcslab::GeneratorConfig cfg;
    cfg.family = edcslab::GraphFamily::GnmRandom;
    cfg.n = n;
    cfg.p = p;
    cfg.seed = seed;
    return edcslab::generate(cfg);
}

}  // namespace

TEST_CASE("split mode names round-trip") {
    CHECK(edcslab::split_mode_name(SplitMode::Random) == std::string("random"));
    CHECK(edcslab::split_mode_name(SplitMode::AdversarialBipartition) ==
          std::string("adversarial-bipartition"));
    CHECK(edcslab::split_mode_from_name("random") == SplitMode::Random);
    CHECK(edcslab::split_mode_from_name("adversarial-bipartition") ==
          SplitMode::AdversarialBipartition);
    CHECK(edcslab::split_mode_from_name("adversarial") ==
          SplitMode::AdversarialBipartition);
    CHECK_THROWS_AS(edcslab::split_mode_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("random splits are reproducible and cover every edge") {
    const Graph g = random_graph(30, 0.3, 11);
    const CommInstance a = edcslab::split_edges(g, SplitMode::Random, 42, Rational(1, 2));
    const CommInstance b = edcslab::split_edges(g, SplitMode::Random, 42, Rational(1, 2));
    CHECK(a.alice_edges == b.alice_edges);
    CHECK(a.bob_edges == b.bob_edges);
    CHECK(a.seed == 42);
    CHECK(a.epsilon == Rational(1, 2));

    std::set<Edge> covered(a.alice_edges.begin(), a.alice_edges.end());
    covered.insert(a.bob_edges.begin(), a.bob_edges.end());
    CHECK(covered == std::set<Edge>(g.edges().begin(), g.edges().end()));
    CHECK(std::is_sorted(a.alice_edges.begin(), a.alice_edges.end()));
    CHECK(std::is_sorted(a.bob_edges.begin(), a.bob_edges.end()));

    // Different seeds land on different splits for a graph this size.
    const CommInstance c = edcslab::split_edges(g, SplitMode::Random, 43, Rational(1, 2));
    CHECK(a.alice_edges != c.alice_edges);
}

TEST_CASE("adversarial split gives Alice the high-degree middle edges") {
    const Graph planted = test_util::disjoint_paths4(8);
    const CommInstance inst =
        edcslab::split_edges(planted, SplitMode::AdversarialBipartition, 0, Rational(1, 2));
    CHECK(inst.alice_edges == std::vector<Edge>{make_edge(1, 2), make_edge(5, 6)});
    CHECK(inst.bob_edges == std::vector<Edge>{make_edge(0, 1), make_edge(2, 3),
                                              make_edge(4, 5), make_edge(6, 7)});
}

TEST_CASE("adversarial split always hands Alice a maximal matching") {
    edcslab::Rng rng(2024);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_graph(6 + static_cast<int>(rng.bounded(25)), 0.3, rng.next());
        const CommInstance inst = edcslab::split_edges(
            g, SplitMode::AdversarialBipartition, rng.next(), Rational(1, 2));

        edcslab::Matching alice;
        alice.edges = inst.alice_edges;
        CHECK(edcslab::matching_is_valid(g, alice));
        const std::vector<int> mate = edcslab::mate_array(alice, g.vertex_count());
        for (const Edge& e : g.edges()) {
            CHECK((mate[e.u] != -1 || mate[e.v] != -1));
        }

        // Bob holds exactly the complement.
        std::vector<Edge> expect_bob;
        for (const Edge& e : g.edges()) {
            if (!std::binary_search(inst.alice_edges.begin(), inst.alice_edges.end(), e)) {
                expect_bob.push_back(e);
            }
        }
        CHECK(inst.bob_edges == expect_bob);
    }
}

TEST_CASE("protocol with everything on Bob's side is lossless") {
    const Graph g = random_graph(20, 0.3, 5);
    CommInstance inst;
    inst.graph = g;
    inst.bob_edges = g.edges();
    inst.epsilon = Rational(1, 2);
    inst.seed = 1;

    const CommResult r = edcslab::run_protocol(inst);
    CHECK(r.beta == 100);
    CHECK(r.message_edge_count == 0);
    CHECK(r.mu_g == edcslab::maximum_matching(g).size());
    CHECK(r.mu_output == r.mu_g);
    CHECK(r.ratio == Rational(1));
    CHECK(r.threshold == Rational(1, 6));
    CHECK(r.pass);
}

TEST_CASE("protocol with everything on Alice's side stays within the message cap") {
    const Graph g = random_graph(24, 0.25, 9);
    CommInstance inst;
    inst.graph = g;
    inst.alice_edges = g.edges();
    inst.epsilon = Rational(1);
    inst.seed = 2;

    const CommResult r = edcslab::run_protocol(inst);
    CHECK(r.beta == 50);
    CHECK(2 * r.message_edge_count <= static_cast<long long>(g.vertex_count()) * r.beta);
    // At this size the degree caps are loose, so nothing is dropped.
    CHECK(r.message_edge_count == g.edge_count());
    CHECK(r.mu_output == r.mu_g);
    CHECK(r.pass);
}

TEST_CASE("protocol recovers the full matching on the planted adversarial split") {
    const Graph planted = test_util::disjoint_paths4(8);
    const CommInstance inst =
        edcslab::split_edges(planted, SplitMode::AdversarialBipartition, 7, Rational(1, 2));
    const CommResult r = edcslab::run_protocol(inst);

    // Alice's subgraph is her whole 2-edge holding; together with Bob's end
    // edges the output matching is maximum.
    CHECK(r.message_edge_count == 2);
    CHECK(r.mu_output == 4);
    CHECK(r.mu_g == 4);
    CHECK(r.ratio == Rational(1));
    CHECK(r.threshold == Rational(1, 6));
    CHECK(r.pass);
}

TEST_CASE("protocol is deterministic for a fixed instance") {
    const Graph g = random_graph(26, 0.35, 77);
    const CommInstance inst = edcslab::split_edges(g, SplitMode::Random, 13, Rational(1, 2));
    const CommResult a = edcslab::run_protocol(inst);
    const CommResult b = edcslab::run_protocol(inst);
    CHECK(a.message_edge_count == b.message_edge_count);
    CHECK(a.mu_output == b.mu_output);
    CHECK(a.mu_g == b.mu_g);
    CHECK(a.ratio == b.ratio);
    CHECK(a.pass == b.pass);
}

TEST_CASE("random splits meet the approximation threshold on small graphs") {
    edcslab::Rng rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(20 + static_cast<int>(rng.bounded(20)), 0.3, rng.next());
        const CommInstance inst =
            edcslab::split_edges(g, SplitMode::Random, rng.next(), Rational(1, 2));
        const CommResult r = edcslab::run_protocol(inst);
        CHECK(2 * r.message_edge_count <=
              static_cast<long long>(g.vertex_count()) * r.beta);
        CHECK_MESSAGE(r.pass, "protocol fell below threshold on:\n" << edcslab::to_edge_list(g));
    }
}

TEST_CASE("empty graphs pass trivially") {
    CommInstance inst;
    inst.graph = Graph(5);
    inst.epsilon = Rational(1);
    const CommResult r = edcslab::run_protocol(inst);
    CHECK(r.mu_g == 0);
    CHECK(r.mu_output == 0);
    CHECK(r.ratio == Rational(1));
    CHECK(r.pass);
}
