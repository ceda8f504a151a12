#include "edcslab/edcs.hpp"

#include <stdexcept>

#include "edcslab/matching.hpp"
#include "edcslab/rng.hpp"

namespace edcslab {

void validate_params(const EdcsParams& p) {
    if (!(p.beta > p.beta_minus && p.beta_minus >= 1)) {
        throw std::invalid_argument(
            "invalid parameters: need beta > beta_minus >= 1, got (" +
            std::to_string(p.beta) + ", " + std::to_string(p.beta_minus) + ")");
    }
}

EdcsParams params_for_epsilon(const Rational& epsilon) {
    if (!(epsilon > 0 && epsilon <= 1)) {
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    }
    const BigInt beta = rational_ceil(Rational(50) / epsilon);
    const BigInt beta_minus = rational_ceil((1 - epsilon / 10) * Rational(beta));
    EdcsParams p{static_cast<int>(beta), static_cast<int>(beta_minus)};
    validate_params(p);
    return p;
}

bool params_meet_guarantee(const EdcsParams& p, const Rational& epsilon) {
    if (!(epsilon > 0 && epsilon <= 1)) {
        return false;
    }
    return Rational(p.beta) >= Rational(50) / epsilon &&
           Rational(p.beta_minus) >= (1 - epsilon / 10) * Rational(p.beta);
}

EdcsCheck verify_edcs(const Graph& g, const Graph& h, const EdcsParams& p) {
    validate_params(p);
    if (!is_subgraph(g, h)) {
        throw std::invalid_argument("h is not a subgraph of g");
    }
    EdcsCheck check;
    for (const Edge& e : h.edges()) {
        const int d = h.degree(e.u) + h.degree(e.v);
        if (d > p.beta) {
            check.p1_violations.push_back({e, d});
        }
    }
    for (const Edge& e : g.edges()) {
        if (h.has_edge(e.u, e.v)) {
            continue;
        }
        const int d = h.degree(e.u) + h.degree(e.v);
        if (d < p.beta_minus) {
            check.p2_violations.push_back({e, d});
        }
    }
    return check;
}

ConstructResult construct_edcs(const Graph& g, const EdcsParams& p,
                               std::uint64_t seed,
                               const std::function<void(const FixStep&)>& observer) {
    validate_params(p);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const long long max_steps =
        (2LL * p.beta - 1) * static_cast<long long>(n) * p.beta / 2;

    std::vector<char> in_h(m, 0);
    std::vector<int> deg(n, 0);

    auto violates = [&](int id) {
        const Edge& e = g.edges()[id];
        const int d = deg[e.u] + deg[e.v];
        return in_h[id] ? d > p.beta : d < p.beta_minus;
    };

    // Exact violation set with O(1) uniform pick via swap-with-last.
    std::vector<int> pool;
    std::vector<int> pos(m, -1);
    auto sync = [&](int id) {
        const bool bad = violates(id);
        if (bad && pos[id] < 0) {
            pos[id] = static_cast<int>(pool.size());
            pool.push_back(id);
        } else if (!bad && pos[id] >= 0) {
            const int last = pool.back();
            pool[pos[id]] = last;
            pos[last] = pos[id];
            pool.pop_back();
            pos[id] = -1;
        }
    };
    for (int id = 0; id < m; ++id) {
        sync(id);
    }

    // Potential (2b-1)*sum(deg) - 2*sum(deg^2); each fix must gain >= 2.
    auto potential = [&] {
        long long s1 = 0;
        long long s2 = 0;
        for (int v = 0; v < n; ++v) {
            s1 += deg[v];
            s2 += static_cast<long long>(deg[v]) * deg[v];
        }
        return (2LL * p.beta - 1) * s1 - 2 * s2;
    };

    Rng rng(seed);
    long long steps = 0;
    long long phi = potential();
    while (!pool.empty()) {
        const int id = static_cast<int>(pool[rng.bounded(pool.size())]);
        const Edge e = g.edges()[id];
        const bool add = !in_h[id];
        // Local potential delta from the two endpoint degrees.
        const int d = deg[e.u] + deg[e.v];
        const long long delta = add ? (4LL * p.beta - 6 - 4 * d)
                                    : (-4LL * p.beta - 2 + 4 * d);
        in_h[id] = add;
        deg[e.u] += add ? 1 : -1;
        deg[e.v] += add ? 1 : -1;
        phi += delta;
        ++steps;
        if (delta < 2) {
            throw std::logic_error("potential gain below 2 in a fixing step");
        }
        if (steps > max_steps) {
            throw std::logic_error("fixing exceeded the potential step bound");
        }
        if (observer) {
            observer({e, add});
        }
        for (int endpoint : {e.u, e.v}) {
            for (const auto& inc : g.incident(endpoint)) {
                sync(inc.edge_id);
            }
        }
    }
    if (phi != potential()) {
        throw std::logic_error("incremental potential drifted from its definition");
    }

    std::vector<Edge> edges;
    for (int id = 0; id < m; ++id) {
        if (in_h[id]) {
            edges.push_back(g.edges()[id]);
        }
    }
    return {Graph(n, std::move(edges)), steps};
}

QualityReport edcs_quality(const Graph& g, const Graph& h, const Rational& epsilon) {
    if (!is_subgraph(g, h)) {
        throw std::invalid_argument("h is not a subgraph of g");
    }
    QualityReport report;
    report.mu_h = maximum_matching(h).size();
    report.mu_g = maximum_matching(g).size();
    report.ratio = report.mu_g == 0 ? Rational(1)
                                    : Rational(report.mu_h, report.mu_g);
    report.threshold = Rational(2, 3) - epsilon;
    report.pass = report.ratio >= report.threshold;
    return report;
}

}  // namespace edcslab
