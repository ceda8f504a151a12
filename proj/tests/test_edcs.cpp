#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "edcslab/edcs.hpp"
#include "edcslab/generator.hpp"
#include "edcslab/graph.hpp"
#include "edcslab/matching.hpp"
#include "edcslab/rational.hpp"
#include "edcslab/rng.hpp"
#include "test_util.hpp"

using edcslab::EdcsParams;
using edcslab::Edge;
using edcslab::Graph;
using edcslab::Rational;
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

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(edcslab::validate_params({2, 1}));
    CHECK_NOTHROW(edcslab::validate_params({50, 45}));
    CHECK_THROWS_AS(edcslab::validate_params({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(edcslab::validate_params({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(edcslab::validate_params({5, 5}), std::invalid_argument);
    CHECK_THROWS_AS(edcslab::validate_params({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(edcslab::validate_params({1, 2}), std::invalid_argument);
}

TEST_CASE("parameters derived from the accuracy target") {
    const EdcsParams p1 = edcslab::params_for_epsilon(Rational(1));
    CHECK(p1.beta == 50);
    CHECK(p1.beta_minus == 45);

    const EdcsParams p05 = edcslab::params_for_epsilon(Rational(1, 2));
    CHECK(p05.beta == 100);
    CHECK(p05.beta_minus == 95);

    const EdcsParams p01 = edcslab::params_for_epsilon(Rational(1, 10));
    CHECK(p01.beta == 500);
    CHECK(p01.beta_minus == 495);

    // 50 / 0.3 rounds up to 167 and 167 * 97/100 rounds up to 162.
    const EdcsParams p03 = edcslab::params_for_epsilon(Rational(3, 10));
    CHECK(p03.beta == 167);
    CHECK(p03.beta_minus == 162);

    CHECK_THROWS_AS(edcslab::params_for_epsilon(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(edcslab::params_for_epsilon(Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(edcslab::params_for_epsilon(Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("guarantee predicate matches the derived parameters") {
    for (const auto& eps : {Rational(1), Rational(1, 2), Rational(1, 5), Rational(3, 10)}) {
        const EdcsParams p = edcslab::params_for_epsilon(eps);
        CHECK(edcslab::params_meet_guarantee(p, eps));
        CHECK_FALSE(edcslab::params_meet_guarantee({p.beta, p.beta_minus - p.beta / 10 - 1}, eps));
    }
    CHECK_FALSE(edcslab::params_meet_guarantee({2, 1}, Rational(1)));
    CHECK_FALSE(edcslab::params_meet_guarantee({49, 45}, Rational(1)));
    CHECK_FALSE(edcslab::params_meet_guarantee({50, 44}, Rational(1)));
    CHECK(edcslab::params_meet_guarantee({51, 46}, Rational(1)));
    CHECK_FALSE(edcslab::params_meet_guarantee({50, 45}, Rational(0)));
    CHECK_FALSE(edcslab::params_meet_guarantee({50, 45}, Rational(2)));
}

TEST_CASE("degree-constraint verification lists violations exactly") {
    const Graph k3 = test_util::complete_graph(3);

    // The triangle against itself: every edge has edge degree 4 > 2.
    const edcslab::EdcsCheck bad = edcslab::verify_edcs(k3, k3, {2, 1});
    CHECK_FALSE(bad.ok());
    CHECK(bad.p1_violations.size() == 3);
    CHECK(bad.p2_violations.empty());
    for (const auto& v : bad.p1_violations) CHECK(v.degree == 4);

    const Graph p4 = test_util::path_graph(4);
    const Graph middle = test_util::from_edges(4, {{1, 2}});
    CHECK(edcslab::verify_edcs(p4, middle, {2, 1}).ok());

    // Empty subgraph: every host edge is absent with edge degree 0.
    const Graph empty(4);
    const edcslab::EdcsCheck under = edcslab::verify_edcs(p4, empty, {2, 1});
    CHECK(under.p1_violations.empty());
    CHECK(under.p2_violations.size() == 3);
    for (const auto& v : under.p2_violations) CHECK(v.degree == 0);

    // A perfect matching of the 4-cycle satisfies both constraints.
    const Graph c4 = test_util::cycle_graph(4);
    const Graph pm = test_util::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(edcslab::verify_edcs(c4, pm, {2, 1}).ok());

    CHECK_THROWS_AS(edcslab::verify_edcs(p4, test_util::from_edges(4, {{0, 2}}), {2, 1}),
                    std::invalid_argument);
}

TEST_CASE("the (2,1) parameter pair characterizes maximal matchings") {
    edcslab::Rng rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(4 + static_cast<int>(rng.bounded(16)), 0.3, rng.next());

        // Forward: any maximal matching, viewed as a subgraph, verifies.
        const edcslab::Matching mm = edcslab::maximal_matching(g);
        const Graph as_graph(g.vertex_count(), mm.edges);
        CHECK(edcslab::verify_edcs(g, as_graph, {2, 1}).ok());

        // Backward: any (2,1) construction is a maximal matching.
        const auto result = edcslab::construct_edcs(g, {2, 1}, rng.next());
        CHECK(edcslab::verify_edcs(g, result.h, {2, 1}).ok());
        edcslab::Matching built;
        built.edges = result.h.edges();
        CHECK(edcslab::matching_is_valid(g, built));
        const std::vector<int> mate = edcslab::mate_array(built, g.vertex_count());
        for (const Edge& e : g.edges()) {
            CHECK((mate[e.u] != -1 || mate[e.v] != -1));
        }
    }
}

TEST_CASE("construction yields a valid subgraph within the step budget") {
    edcslab::Rng rng(808);
    const std::vector<EdcsParams> grid = {{3, 2}, {5, 4}, {10, 9}};
    for (int trial = 0; trial < 18; ++trial) {
        const EdcsParams p = grid[trial % grid.size()];
        const int n = 8 + static_cast<int>(rng.bounded(32));
        const Graph g = random_graph(n, 0.3, rng.next());
        const auto result = edcslab::construct_edcs(g, p, rng.next());

        CHECK(edcslab::is_subgraph(g, result.h));
        CHECK(edcslab::verify_edcs(g, result.h, p).ok());
        CHECK(result.fix_steps <= static_cast<long long>(2 * p.beta - 1) * n * p.beta / 2);
        // Every H-vertex has degree < beta, so the edge count is bounded too.
        for (int v = 0; v < n; ++v) CHECK(result.h.degree(v) < p.beta);
        CHECK(2 * result.h.edge_count() <= n * p.beta);
    }
}

TEST_CASE("construction is deterministic for a fixed seed") {
    const Graph g = random_graph(24, 0.4, 17);
    const auto a = edcslab::construct_edcs(g, {4, 3}, 99);
    const auto b = edcslab::construct_edcs(g, {4, 3}, 99);
    CHECK(a.h == b.h);
    CHECK(a.fix_steps == b.fix_steps);
}

TEST_CASE("observer replay shows every fix is a genuine local improvement") {
    const Graph g = random_graph(16, 0.45, 5);
    const EdcsParams p{4, 3};

    std::vector<edcslab::FixStep> steps;
    const auto result =
        edcslab::construct_edcs(g, p, 123, [&](const edcslab::FixStep& s) { steps.push_back(s); });
    CHECK(static_cast<long long>(steps.size()) == result.fix_steps);

    // Replay the construction and recompute the potential from scratch at
    // every step: (2*beta - 1) * sum(deg) - 2 * sum(edge degrees over H).
    std::map<Edge, bool> in_h;
    std::vector<int> deg(g.vertex_count(), 0);
    auto potential = [&]() {
        long long s1 = 0;
        long long s2 = 0;
        for (const auto& [e, present] : in_h) {
            if (!present) continue;
            s1 += 1;
            s2 += deg[e.u] + deg[e.v];
        }
        return (2LL * p.beta - 1) * 2 * s1 - 2 * s2;
    };

    long long before = potential();
    for (const auto& s : steps) {
        REQUIRE(g.has_edge(s.edge.u, s.edge.v));
        if (s.added) {
            CHECK_FALSE(in_h[s.edge]);
            in_h[s.edge] = true;
            ++deg[s.edge.u];
            ++deg[s.edge.v];
        } else {
            CHECK(in_h[s.edge]);
            in_h[s.edge] = false;
            --deg[s.edge.u];
            --deg[s.edge.v];
        }
        const long long after = potential();
        CHECK(after - before >= 2);
        before = after;
    }

    // The replayed end state is exactly the returned subgraph.
    std::vector<Edge> final_edges;
    for (const auto& [e, present] : in_h) {
        if (present) final_edges.push_back(e);
    }
    CHECK(final_edges == result.h.edges());
}

TEST_CASE("construction edge cases") {
    const auto empty = edcslab::construct_edcs(Graph(6), {3, 2}, 0);
    CHECK(empty.h.edge_count() == 0);
    CHECK(empty.fix_steps == 0);

    // On a complete graph with (2,1) the result is a maximal matching of K5,
    // which always has 2 edges.
    const auto k5 = edcslab::construct_edcs(test_util::complete_graph(5), {2, 1}, 3);
    CHECK(k5.h.edge_count() == 2);
    CHECK(edcslab::verify_edcs(test_util::complete_graph(5), k5.h, {2, 1}).ok());

    // With a generous beta the whole host is the unique stable outcome.
    const Graph p4 = test_util::path_graph(4);
    const auto all = edcslab::construct_edcs(p4, {50, 45}, 11);
    CHECK(all.h == p4);
}

TEST_CASE("quality report compares matching sizes against the threshold") {
    const Graph k4 = test_util::complete_graph(4);
    const auto self = edcslab::edcs_quality(k4, k4, Rational(1));
    CHECK(self.mu_h == 2);
    CHECK(self.mu_g == 2);
    CHECK(self.ratio == Rational(1));
    CHECK(self.threshold == Rational(2, 3) - Rational(1));
    CHECK(self.pass);

    // The disjoint 4-path family with only middle edges kept is the tight
    // half-ratio example.
    const Graph planted = test_util::disjoint_paths4(8);
    const Graph middles = test_util::from_edges(8, {{1, 2}, {5, 6}});
    const auto tight = edcslab::edcs_quality(planted, middles, Rational(1, 6));
    CHECK(tight.mu_h == 2);
    CHECK(tight.mu_g == 4);
    CHECK(tight.ratio == Rational(1, 2));
    CHECK(tight.threshold == Rational(1, 2));
    CHECK(tight.pass);  // equality counts

    const auto strict = edcslab::edcs_quality(planted, middles, Rational(1, 10));
    CHECK(strict.threshold == Rational(17, 30));
    CHECK_FALSE(strict.pass);

    // Empty host: ratio defaults to 1.
    const auto trivial = edcslab::edcs_quality(Graph(3), Graph(3), Rational(1, 2));
    CHECK(trivial.ratio == Rational(1));
    CHECK(trivial.pass);
}
