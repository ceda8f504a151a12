#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "edcslab/gallai_edmonds.hpp"
#include "edcslab/generator.hpp"
#include "edcslab/graph.hpp"
#include "edcslab/matching.hpp"
#include "edcslab/rng.hpp"
#include "test_util.hpp"

using edcslab::GEDecomposition;
using edcslab::Graph;
using edcslab::Matching;
using edcslab::make_edge;

namespace {

Matching from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
    Matching m;
    for (const auto& [u, v] : pairs) m.edges.push_back(make_edge(u, v));
    return m;
}

// Independent deletion oracle: v is essential iff removing it lowers the
// maximum matching size. Only for graphs small enough for exhaustive search.
std::vector<int> deletion_oracle_d_set(const Graph& g) {
    const int mu = edcslab::brute_force_maximum_matching(g).size();
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> keep;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (u != v) keep.push_back(u);
        }
        const auto [sub, echoed] = edcslab::induced_subgraph(g, keep);
        if (edcslab::brute_force_maximum_matching(sub).size() == mu) {
            d.push_back(v);
        }
    }
    return d;
}

}  // namespace

TEST_CASE("decomposition of a triangle") {
    const Graph k3 = test_util::complete_graph(3);
    const GEDecomposition ge = edcslab::decompose(k3);
    CHECK(ge.d_set == std::vector<int>{0, 1, 2});
    CHECK(ge.a_set.empty());
    CHECK(ge.c_set.empty());
    REQUIRE(ge.d_components.size() == 1);
    CHECK(ge.d_components[0] == std::vector<int>{0, 1, 2});
    CHECK(ge.specials.empty());
    CHECK_FALSE(ge.specials_marked());
    CHECK(ge.component_of(1) == 0);

    const Matching m = from_pairs({{0, 1}});
    CHECK(edcslab::special_candidate_counts(ge, m) == std::vector<int>{1});
    const GEDecomposition marked = edcslab::mark_specials(ge, k3, m);
    CHECK(marked.specials == std::vector<int>{2});
    CHECK(marked.specials_marked());
    CHECK(edcslab::verify_ge_properties(marked, k3, m).all_pass());
}

TEST_CASE("decomposition of a star") {
    edcslab::GeneratorConfig cfg;
    cfg.family = edcslab::GraphFamily::Star;
    cfg.n = 5;
    cfg.seed = 0;
    const Graph star = edcslab::generate(cfg);

    const GEDecomposition ge = edcslab::decompose(star);
    CHECK(ge.d_set == std::vector<int>{1, 2, 3, 4});
    CHECK(ge.a_set == std::vector<int>{0});
    CHECK(ge.c_set.empty());
    REQUIRE(ge.d_components.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(ge.d_components[i] == std::vector<int>{i + 1});

    const Matching m = from_pairs({{0, 1}});
    CHECK(edcslab::special_candidate_counts(ge, m) == std::vector<int>{1, 1, 1, 1});
    const GEDecomposition marked = edcslab::mark_specials(ge, star, m);
    CHECK(marked.specials == std::vector<int>{1, 2, 3, 4});
    CHECK(edcslab::verify_ge_properties(marked, star, m).all_pass());
}

TEST_CASE("decomposition of a 5-path") {
    const Graph p5 = test_util::path_graph(5);
    const GEDecomposition ge = edcslab::decompose(p5);
    CHECK(ge.d_set == std::vector<int>{0, 2, 4});
    CHECK(ge.a_set == std::vector<int>{1, 3});
    CHECK(ge.c_set.empty());
    REQUIRE(ge.d_components.size() == 3);

    const Matching m = from_pairs({{0, 1}, {2, 3}});
    const GEDecomposition marked = edcslab::mark_specials(ge, p5, m);
    CHECK(marked.specials == std::vector<int>{0, 2, 4});
    CHECK(edcslab::verify_ge_properties(marked, p5, m).all_pass());
}

TEST_CASE("perfectly matchable graphs have an empty essential-free part") {
    const Graph p4 = test_util::path_graph(4);
    const GEDecomposition ge = edcslab::decompose(p4);
    CHECK(ge.d_set.empty());
    CHECK(ge.a_set.empty());
    CHECK(ge.c_set == std::vector<int>{0, 1, 2, 3});
    CHECK(ge.d_components.empty());
    CHECK(ge.specials_marked());  // vacuously
    CHECK(ge.component_of(2) == -1);

    const Matching m = from_pairs({{0, 1}, {2, 3}});
    const GEDecomposition marked = edcslab::mark_specials(ge, p4, m);
    CHECK(marked.specials.empty());
    CHECK(edcslab::verify_ge_properties(marked, p4, m).all_pass());
}

TEST_CASE("single middle edge inside a 4-vertex host") {
    const Graph h = test_util::from_edges(4, {{1, 2}});
    const GEDecomposition ge = edcslab::decompose(h);
    CHECK(ge.d_set == std::vector<int>{0, 3});
    CHECK(ge.a_set.empty());
    CHECK(ge.c_set == std::vector<int>{1, 2});
    REQUIRE(ge.d_components.size() == 2);
    CHECK(ge.d_components[0] == std::vector<int>{0});
    CHECK(ge.d_components[1] == std::vector<int>{3});

    const Matching m = from_pairs({{1, 2}});
    const GEDecomposition marked = edcslab::mark_specials(ge, h, m);
    CHECK(marked.specials == std::vector<int>{0, 3});
    CHECK(edcslab::verify_ge_properties(marked, h, m).all_pass());
}

TEST_CASE("essential-free set matches the deletion oracle on random graphs") {
    edcslab::Rng rng(31415);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.bounded(11));
        edcslab::GeneratorConfig cfg;
        cfg.family = edcslab::GraphFamily::GnmRandom;
        cfg.n = n;
        cfg.p = 0.15 + 0.1 * static_cast<double>(trial % 6);
        cfg.seed = rng.next();
        const Graph g = edcslab::generate(cfg);

        const GEDecomposition ge = edcslab::decompose(g);
        CHECK_MESSAGE(ge.d_set == deletion_oracle_d_set(g),
                      "deletion-oracle mismatch on:\n" << edcslab::to_edge_list(g));

        // A = neighbors of D outside D; C = the rest; components partition D
        // into odd-size pieces.
        std::vector<char> in_d(n, 0);
        for (int v : ge.d_set) in_d[v] = 1;
        std::set<int> expect_a;
        for (int v : ge.d_set) {
            for (const auto& half : g.incident(v)) {
                if (!in_d[half.to]) expect_a.insert(half.to);
            }
        }
        CHECK(ge.a_set == std::vector<int>(expect_a.begin(), expect_a.end()));
        CHECK(static_cast<int>(ge.d_set.size() + ge.a_set.size() + ge.c_set.size()) == n);

        std::size_t covered = 0;
        for (const auto& comp : ge.d_components) {
            CHECK(comp.size() % 2 == 1);
            CHECK(std::is_sorted(comp.begin(), comp.end()));
            covered += comp.size();
        }
        CHECK(covered == ge.d_set.size());
    }
}

TEST_CASE("every maximum matching yields exactly one special per component") {
    edcslab::Rng rng(27182);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng.bounded(17));
        edcslab::GeneratorConfig cfg;
        cfg.family = edcslab::GraphFamily::GnmRandom;
        cfg.n = n;
        cfg.p = 0.25;
        cfg.seed = rng.next();
        const Graph g = edcslab::generate(cfg);
        const GEDecomposition ge = edcslab::decompose(g);

        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Matching m = edcslab::maximum_matching_seeded(g, seed);
            const std::vector<int> counts = edcslab::special_candidate_counts(ge, m);
            CHECK(std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; }));
            const GEDecomposition marked = edcslab::mark_specials(ge, g, m);
            CHECK(marked.specials.size() == ge.d_components.size());
            CHECK(edcslab::verify_ge_properties(marked, g, m).all_pass());
            for (std::size_t i = 0; i < marked.specials.size(); ++i) {
                const auto& comp = marked.d_components[i];
                CHECK(std::binary_search(comp.begin(), comp.end(), marked.specials[i]));
            }
        }
    }
}

TEST_CASE("non-maximum matchings are rejected and reported") {
    const Graph k3 = test_util::complete_graph(3);
    const GEDecomposition ge = edcslab::decompose(k3);
    const Matching empty;

    CHECK(edcslab::special_candidate_counts(ge, empty) == std::vector<int>{3});
    CHECK_THROWS_AS(edcslab::mark_specials(ge, k3, empty), std::runtime_error);

    const edcslab::GeReport report = edcslab::verify_ge_properties(ge, k3, empty);
    CHECK_FALSE(report.all_pass());
    CHECK_FALSE(report.component_structure.pass);
    CHECK(report.component_structure.offenders == std::vector<int>{0});
    CHECK(report.c_matched_within_c.pass);
    CHECK(report.a_matched_to_d.pass);
}

TEST_CASE("unmatched attachment vertices fail only the attachment clause") {
    edcslab::GeneratorConfig cfg;
    cfg.family = edcslab::GraphFamily::Star;
    cfg.n = 5;
    cfg.seed = 0;
    const Graph star = edcslab::generate(cfg);
    const GEDecomposition ge = edcslab::decompose(star);

    const Matching empty;
    const edcslab::GeReport report = edcslab::verify_ge_properties(ge, star, empty);
    CHECK_FALSE(report.all_pass());
    CHECK_FALSE(report.a_matched_to_d.pass);
    CHECK(report.a_matched_to_d.offenders == std::vector<int>{0});
    // Each leaf is its own singleton component and unmatched, so the
    // component clause still holds.
    CHECK(report.component_structure.pass);
    CHECK(report.c_matched_within_c.pass);
}
