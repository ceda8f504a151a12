#include "edcslab/gallai_edmonds.hpp"

#include <algorithm>
#include <stdexcept>

#include "edcslab/parallel.hpp"

namespace edcslab {

int GEDecomposition::component_of(int v) const {
    for (int i = 0; i < static_cast<int>(d_components.size()); ++i) {
        if (std::binary_search(d_components[i].begin(), d_components[i].end(), v)) {
            return i;
        }
    }
    return -1;
}

GEDecomposition decompose(const Graph& h) {
    const int n = h.vertex_count();
    const std::vector<int> mate = mate_array(maximum_matching(h), n);

    // v is deletable (in D) iff either the fixed maximum matching already
    // misses it, or removing it leaves an augmenting path from its partner.
    std::vector<char> in_d(n, 0);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t idx) {
        const int v = static_cast<int>(idx);
        if (mate[v] == -1) {
            in_d[v] = 1;
            return;
        }
        thread_local std::vector<int> scratch;
        scratch = mate;
        const int partner = scratch[v];
        scratch[v] = -1;
        scratch[partner] = -1;
        detail::BlossomSearch search(h);
        if (search.try_augment(scratch, partner, v)) {
            in_d[v] = 1;
        }
    });

    GEDecomposition ge;
    std::vector<char> in_a(n, 0);
    for (int v = 0; v < n; ++v) {
        if (in_d[v]) {
            ge.d_set.push_back(v);
            for (const auto& inc : h.incident(v)) {
                if (!in_d[inc.to]) {
                    in_a[inc.to] = 1;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (in_d[v]) {
            continue;
        }
        (in_a[v] ? ge.a_set : ge.c_set).push_back(v);
    }

    // Connected components of H[D].
    std::vector<int> comp(n, -1);
    for (int root : ge.d_set) {
        if (comp[root] != -1) {
            continue;
        }
        std::vector<int> members;
        std::vector<int> stack = {root};
        comp[root] = static_cast<int>(ge.d_components.size());
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (const auto& inc : h.incident(v)) {
                if (in_d[inc.to] && comp[inc.to] == -1) {
                    comp[inc.to] = comp[root];
                    stack.push_back(inc.to);
                }
            }
        }
        std::sort(members.begin(), members.end());
        ge.d_components.push_back(std::move(members));
    }
    return ge;
}

std::vector<int> special_candidate_counts(const GEDecomposition& ge,
                                          const Matching& m) {
    int n = 0;
    for (const auto& set : {ge.d_set, ge.a_set, ge.c_set}) {
        for (int v : set) {
            n = std::max(n, v + 1);
        }
    }
    for (const Edge& e : m.edges) {
        n = std::max(n, e.v + 1);
    }
    const std::vector<int> mate = mate_array(m, n);
    std::vector<char> in_a(n, 0);
    for (int v : ge.a_set) {
        in_a[v] = 1;
    }
    std::vector<int> counts(ge.d_components.size(), 0);
    for (std::size_t i = 0; i < ge.d_components.size(); ++i) {
        for (int v : ge.d_components[i]) {
            if (mate[v] == -1 || in_a[mate[v]]) {
                ++counts[i];
            }
        }
    }
    return counts;
}

GEDecomposition mark_specials(const GEDecomposition& ge, const Graph& h,
                              const Matching& m) {
    validate_matching(h, m);
    const std::vector<int> mate = mate_array(m, h.vertex_count());
    std::vector<char> in_a(h.vertex_count(), 0);
    for (int v : ge.a_set) {
        in_a[v] = 1;
    }
    GEDecomposition marked = ge;
    marked.specials.clear();
    for (std::size_t i = 0; i < ge.d_components.size(); ++i) {
        int special = -1;
        int count = 0;
        for (int v : ge.d_components[i]) {
            if (mate[v] == -1 || in_a[mate[v]]) {
                ++count;
                special = v;
            }
        }
        if (count != 1) {
            throw std::runtime_error(
                "component " + std::to_string(i) + " has " + std::to_string(count) +
                " special candidates; matching not maximum or decomposition stale");
        }
        marked.specials.push_back(special);
    }
    return marked;
}

GeReport verify_ge_properties(const GEDecomposition& ge, const Graph& h,
                              const Matching& m) {
    const int n = h.vertex_count();
    const std::vector<int> mate = mate_array(m, n);
    std::vector<char> in_d(n, 0);
    std::vector<char> in_a(n, 0);
    std::vector<char> in_c(n, 0);
    for (int v : ge.d_set) in_d[v] = 1;
    for (int v : ge.a_set) in_a[v] = 1;
    for (int v : ge.c_set) in_c[v] = 1;

    GeReport report;
    for (int v : ge.c_set) {
        if (mate[v] == -1 || !in_c[mate[v]]) {
            report.c_matched_within_c.pass = false;
            report.c_matched_within_c.offenders.push_back(v);
        }
    }
    for (int v : ge.a_set) {
        if (mate[v] == -1 || !in_d[mate[v]]) {
            report.a_matched_to_d.pass = false;
            report.a_matched_to_d.offenders.push_back(v);
        }
    }
    for (std::size_t i = 0; i < ge.d_components.size(); ++i) {
        const auto& comp = ge.d_components[i];
        int near_unmatched = 0;  // unmatched or matched into A
        int matched_inside = 0;
        for (int v : comp) {
            if (mate[v] == -1 || in_a[mate[v]]) {
                ++near_unmatched;
            } else if (std::binary_search(comp.begin(), comp.end(), mate[v])) {
                ++matched_inside;
            }
        }
        if (near_unmatched != 1 ||
            matched_inside != static_cast<int>(comp.size()) - 1) {
            report.component_structure.pass = false;
            report.component_structure.offenders.push_back(comp.front());
        }
    }
    return report;
}

}  // namespace edcslab
