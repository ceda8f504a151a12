#include "edcslab/proof_lab.hpp"

#include <algorithm>
#include <cstddef>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "edcslab/errors.hpp"
#include "edcslab/rng.hpp"

namespace edcslab {

namespace {

std::vector<char> membership(int n, const std::vector<int>& vertices) {
    std::vector<char> in(n, 0);
    for (int v : vertices) in[v] = 1;
    return in;
}

std::vector<int> component_index(int n, const GEDecomposition& ge) {
    std::vector<int> comp(n, -1);
    for (std::size_t c = 0; c < ge.d_components.size(); ++c) {
        for (int v : ge.d_components[c]) comp[v] = static_cast<int>(c);
    }
    return comp;
}

std::string describe_path(const AlternatingComponent& path) {
    std::ostringstream out;
    out << "path vertices:";
    for (int v : path.vertices) out << ' ' << v;
    out << "\npath edges:";
    for (const auto& te : path.edges) {
        out << ' ' << (te.origin == AlternatingComponent::Origin::FromMStar ? '*' : 'm')
            << '(' << te.edge.u << ',' << te.edge.v << ')';
    }
    return out.str();
}

}  // namespace

std::vector<Edge> suitable_edges(const AlternatingComponent& path, const Graph& h,
                                 const GEDecomposition& ge) {
    const std::vector<char> in_a = membership(h.vertex_count(), ge.a_set);
    std::vector<Edge> out;
    for (const auto& te : path.edges) {
        const Edge e = te.edge;
        if (h.has_edge(e.u, e.v)) continue;
        if (in_a[e.u] || in_a[e.v]) continue;
        out.push_back(e);
    }
    return out;
}

PathClassification classify_path(const AlternatingComponent& path, const Graph& h,
                                 const GEDecomposition& ge) {
    if (path.kind != AlternatingComponent::Kind::Path || !path.is_augmenting) {
        throw std::invalid_argument("classify_path: component is not an augmenting path");
    }
    if (!ge.specials_marked()) {
        throw std::invalid_argument("classify_path: decomposition has unmarked specials");
    }
    const int n = h.vertex_count();
    const std::vector<char> on_path = membership(n, path.vertices);
    const std::vector<int> comp = component_index(n, ge);

    std::vector<Edge> pool = suitable_edges(path, h, ge);
    std::sort(pool.begin(), pool.end());

    PathClassification out;
    out.path = path;

    // A single bridging edge between two components whose specials sit on
    // the path takes precedence; the pool is sorted, so the first hit is the
    // lexicographically smallest witness.
    for (const Edge& e : pool) {
        const int cu = comp[e.u];
        const int cv = comp[e.v];
        if (cu < 0 || cv < 0 || cu == cv) continue;
        const int su = ge.specials[cu];
        const int sv = ge.specials[cv];
        if (!on_path[su] || !on_path[sv]) continue;
        out.kind = PathClassification::Kind::T1;
        out.witness1 = e;
        out.component1 = cu;
        out.component2 = cv;
        out.special1 = su;
        out.special2 = sv;
        return out;
    }

    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            const Edge a = pool[i];
            const Edge b = pool[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
            out.kind = PathClassification::Kind::T2;
            out.witness1 = a;
            out.witness2 = b;
            return out;
        }
    }

    std::ostringstream dump;
    dump << "unclassifiable augmenting path\n" << describe_path(path);
    dump << "\nsuitable edges:";
    for (const Edge& e : pool) dump << " (" << e.u << ',' << e.v << ')';
    throw ClassificationError(dump.str());
}

std::vector<PathClassification> classify_augmenting_paths(const Graph& g,
                                                          const Graph& h,
                                                          const GEDecomposition& ge,
                                                          const Matching& m,
                                                          const Matching& mstar) {
    if (!ge.specials_marked()) {
        throw std::invalid_argument(
            "classify_augmenting_paths: decomposition has unmarked specials");
    }
    std::vector<PathClassification> out;
    for (const auto& comp : decompose_union(m, mstar, g.vertex_count())) {
        if (!comp.is_augmenting) continue;
        try {
            PathClassification c = classify_path(comp, h, ge);
            if (!witness_is_valid(c, h, ge, m)) {
                throw ClassificationError("witness rejected by the independent check\n" +
                                          describe_path(comp));
            }
            out.push_back(std::move(c));
        } catch (const ClassificationError& err) {
            throw ClassificationError(
                dump_instance(err.what(), g, h, m, mstar));
        }
    }
    return out;
}

bool witness_is_valid(const PathClassification& c, const Graph& h,
                      const GEDecomposition& ge, const Matching& m) {
    const int n = h.vertex_count();
    const std::vector<char> in_a = membership(n, ge.a_set);
    const std::vector<char> in_d = membership(n, ge.d_set);
    const std::vector<char> on_path = membership(n, c.path.vertices);

    auto is_path_edge = [&](Edge e) {
        for (const auto& te : c.path.edges) {
            if (te.edge == e) return true;
        }
        return false;
    };
    auto is_suitable = [&](Edge e) {
        return !h.has_edge(e.u, e.v) && !in_a[e.u] && !in_a[e.v];
    };
    // Closure of `start` inside H[D], by a plain traversal over H edges with
    // both endpoints in D.
    auto d_closure = [&](int start) {
        std::vector<char> seen(n, 0);
        std::vector<int> order;
        seen[start] = 1;
        order.push_back(start);
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (const auto& inc : h.incident(order[head])) {
                if (in_d[inc.to] && !seen[inc.to]) {
                    seen[inc.to] = 1;
                    order.push_back(inc.to);
                }
            }
        }
        return order;
    };

    if (c.kind == PathClassification::Kind::T1) {
        const Edge e = c.witness1;
        if (!is_path_edge(e) || !is_suitable(e)) return false;
        if (!in_d[e.u] || !in_d[e.v]) return false;

        const std::vector<int> side_u = d_closure(e.u);
        if (std::find(side_u.begin(), side_u.end(), e.v) != side_u.end()) {
            return false;  // same component of H[D]
        }
        const std::vector<int> side_v = d_closure(e.v);

        // The special of a component, straight from the definition: the
        // unique vertex unmatched by m or matched into A.
        const std::vector<int> mate = mate_array(m, n);
        auto component_special = [&](const std::vector<int>& closure) {
            int special = -1;
            for (int v : closure) {
                if (mate[v] == -1 || in_a[mate[v]]) {
                    if (special != -1) return -1;  // not unique
                    special = v;
                }
            }
            return special;
        };
        const int su = component_special(side_u);
        const int sv = component_special(side_v);
        if (su < 0 || sv < 0) return false;
        if (su != c.special1 || sv != c.special2) return false;
        return on_path[su] && on_path[sv];
    }

    const Edge a = c.witness1;
    const Edge b = c.witness2;
    if (!is_path_edge(a) || !is_path_edge(b)) return false;
    if (!is_suitable(a) || !is_suitable(b)) return false;
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

long long AuxiliaryB::total_w_degree(std::span<const int> members) const {
    long long total = 0;
    for (int v : members) total += w_degree[v];
    return total;
}

AuxiliaryB build_auxiliary_b(const Graph& g, const Graph& h,
                             const GEDecomposition& ge,
                             const std::vector<PathClassification>& classifications) {
    if (!ge.specials_marked()) {
        throw std::invalid_argument("build_auxiliary_b: decomposition has unmarked specials");
    }
    const int n = h.vertex_count();
    if (g.vertex_count() != n) {
        throw std::invalid_argument("build_auxiliary_b: vertex count mismatch");
    }
    const std::vector<char> in_a = membership(n, ge.a_set);
    const std::vector<char> in_s = membership(n, ge.special_set());
    const std::vector<int> comp = component_index(n, ge);

    AuxiliaryB b;
    b.w_degree.assign(n, 0);
    b.z_degree.assign(n, 0);

    std::vector<char> taken(n, 0);
    auto claim = [&](int v, std::vector<int>& side) {
        if (taken[v]) {
            throw std::logic_error("build_auxiliary_b: vertex on two witnesses");
        }
        taken[v] = 1;
        side.push_back(v);
    };
    auto check_witness_edge = [&](Edge e) {
        if (!g.has_edge(e.u, e.v) || h.has_edge(e.u, e.v) || in_a[e.u] || in_a[e.v]) {
            throw std::invalid_argument(
                "build_auxiliary_b: witness edge inconsistent with the decomposition");
        }
    };

    for (const auto& c : classifications) {
        check_witness_edge(c.witness1);
        if (c.kind == PathClassification::Kind::T1) {
            if (comp[c.witness1.u] != c.component1 || comp[c.witness1.v] != c.component2 ||
                c.component1 == c.component2 || c.component1 < 0 || c.component2 < 0 ||
                ge.specials[c.component1] != c.special1 ||
                ge.specials[c.component2] != c.special2) {
                throw std::invalid_argument(
                    "build_auxiliary_b: witness components inconsistent with the decomposition");
            }
            claim(c.witness1.u, b.w1);
            claim(c.witness1.v, b.w1);
        } else {
            check_witness_edge(c.witness2);
            claim(c.witness1.u, b.w2);
            claim(c.witness1.v, b.w2);
            claim(c.witness2.u, b.w2);
            claim(c.witness2.v, b.w2);
        }
    }
    std::sort(b.w1.begin(), b.w1.end());
    std::sort(b.w2.begin(), b.w2.end());

    for (int v = 0; v < n; ++v) {
        if (!in_s[v]) b.z.push_back(v);
    }
    b.z_a = ge.a_set;

    auto link = [&](int w, int zv) {
        b.edges.emplace_back(w, zv);
        ++b.w_degree[w];
        ++b.z_degree[zv];
    };
    for (int w : b.w2) {
        for (const auto& inc : h.incident(w)) {
            if (!in_s[inc.to]) link(w, inc.to);
        }
    }
    for (int w : b.w1) {
        for (const auto& inc : h.incident(w)) {
            if (in_a[inc.to]) link(w, inc.to);
        }
    }
    std::sort(b.edges.begin(), b.edges.end());
    return b;
}

PartSizeCheck verify_part_size_bound(const BipartiteGraph& b, int beta) {
    if (b.p_size <= 0) {
        throw std::invalid_argument("verify_part_size_bound: empty P side");
    }
    if (b.edges.empty()) {
        throw std::invalid_argument("verify_part_size_bound: no edges");
    }
    std::vector<int> deg_p(b.p_size, 0), deg_q(b.q_size, 0);
    for (const auto& [p, q] : b.edges) {
        if (p < 0 || p >= b.p_size || q < 0 || q >= b.q_size) {
            throw std::invalid_argument("verify_part_size_bound: endpoint out of range");
        }
        ++deg_p[p];
        ++deg_q[q];
    }
    for (const auto& [p, q] : b.edges) {
        if (deg_p[p] + deg_q[q] > beta) {
            throw std::invalid_argument(
                "verify_part_size_bound: edge degree above the cap");
        }
    }

    PartSizeCheck out;
    out.d_p = Rational(static_cast<long long>(b.edges.size()), b.p_size);
    out.bound = out.d_p / (Rational(beta) - out.d_p) * b.p_size;
    out.q_size = b.q_size;
    out.holds = Rational(b.q_size) >= out.bound;
    return out;
}

std::pair<Rational, Rational> ratio_linearization_sides(const Rational& x) {
    if (x < 0) {
        throw std::invalid_argument("ratio_linearization_sides: negative input");
    }
    return {(Rational(1) - x) / (Rational(1) + x), Rational(1) - 2 * x};
}

const char* check_status_token(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::SkippedEmpty: return "SKIPPED-EMPTY";
        case CheckStatus::BelowGuaranteeParams: return "BELOW-GUARANTEE-PARAMS";
    }
    return "UNKNOWN";
}

bool ProofTrace::all_pass() const {
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) return false;
    }
    return true;
}

const CheckRecord* ProofTrace::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

void push_check(ProofTrace& t, std::string name, Rational lhs, Rational rhs,
                CheckRecord::Cmp cmp = CheckRecord::Cmp::GreaterEqual) {
    const bool ok = cmp == CheckRecord::Cmp::GreaterEqual ? lhs >= rhs : lhs == rhs;
    t.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), cmp,
                        ok ? CheckStatus::Pass : CheckStatus::Fail});
}

void push_skipped(ProofTrace& t, std::string name) {
    t.checks.push_back({std::move(name), Rational(0), Rational(0),
                        CheckRecord::Cmp::GreaterEqual, CheckStatus::SkippedEmpty});
}

void push_flagged(ProofTrace& t, std::string name, Rational lhs, Rational rhs) {
    t.checks.push_back({std::move(name), std::move(lhs), std::move(rhs),
                        CheckRecord::Cmp::GreaterEqual,
                        CheckStatus::BelowGuaranteeParams});
}

}  // namespace

ProofTrace verify_trace(const Graph& g, const Graph& h, const EdcsParams& params,
                        const Rational& epsilon, std::uint64_t matching_seed) {
    validate_params(params);
    if (epsilon <= 0 || epsilon > 1) {
        throw std::invalid_argument("verify_trace: epsilon must lie in (0, 1]");
    }
    if (!verify_edcs(g, h, params).ok()) {
        throw std::invalid_argument(
            "verify_trace: h violates the degree constraints for these params");
    }

    const int n = g.vertex_count();
    ProofTrace t;
    t.params = params;
    t.epsilon = epsilon;
    t.lambda = epsilon / 10;
    t.guarantee_params = params_meet_guarantee(params, epsilon);

    Rng rng(matching_seed);
    const Matching m = maximum_matching_seeded(h, rng.next());
    const Matching mstar = maximum_matching_seeded(g, rng.next());
    t.mu_h = m.size();
    t.mu_g = mstar.size();

    GEDecomposition ge = decompose(h);
    const std::vector<int> counts = special_candidate_counts(ge, m);
    const long long comps_total = static_cast<long long>(counts.size());
    const long long comps_ok =
        std::count(counts.begin(), counts.end(), 1);
    push_check(t, "one_special_per_component", Rational(comps_ok),
               Rational(comps_total), CheckRecord::Cmp::Equal);
    if (comps_ok != comps_total) {
        throw std::runtime_error(dump_instance(
            "pipeline precondition failed: a component of H[D] does not have "
            "exactly one special candidate",
            g, h, m, mstar));
    }
    ge = mark_specials(ge, h, m);

    const std::vector<PathClassification> classifications =
        classify_augmenting_paths(g, h, ge, m, mstar);
    t.path_count = static_cast<int>(classifications.size());
    for (const auto& c : classifications) {
        (c.kind == PathClassification::Kind::T1 ? t.t1_count : t.t2_count) += 1;
    }
    push_check(t, "augmenting_path_count", Rational(t.path_count),
               Rational(t.mu_g - t.mu_h));

    const AuxiliaryB b = build_auxiliary_b(g, h, ge, classifications);
    t.w1_size = static_cast<int>(b.w1.size());
    t.w2_size = static_cast<int>(b.w2.size());
    t.z_size = static_cast<int>(b.z.size());
    t.za_size = static_cast<int>(b.z_a.size());

    const std::vector<int> specials = ge.special_set();
    t.d_minus_s = static_cast<int>(ge.d_set.size() - specials.size());

    const int w_size = t.w1_size + t.w2_size;
    t.alpha = w_size == 0 ? Rational(0) : Rational(t.w1_size, w_size);
    t.sigma = t.w1_size == 0
                  ? Rational(0)
                  : Rational(2LL * t.d_minus_s,
                             static_cast<long long>(t.w1_size) * params.beta_minus);

    const Rational half(1, 2);
    const Rational beta(params.beta);

    push_check(t, "mu_h_from_z",
               Rational(t.mu_h),
               (half - t.lambda) * t.z_size + half * t.za_size +
                   t.lambda * t.d_minus_s);
    push_check(t, "half_weight_certificate",
               Rational(ge.a_set.size()) +
                   Rational(n - static_cast<int>(ge.a_set.size()) -
                                static_cast<int>(specials.size()),
                            2),
               Rational(t.mu_h), CheckRecord::Cmp::Equal);

    int max_b_edge_degree = 0;
    for (const auto& [w, zv] : b.edges) {
        max_b_edge_degree =
            std::max(max_b_edge_degree, b.w_degree[w] + b.z_degree[zv]);
    }
    push_check(t, "b_edge_degree_cap", beta, Rational(max_b_edge_degree));

    if (t.w2_size == 0) {
        push_skipped(t, "w2_average_degree");
        push_skipped(t, "w2_degree_accounting");
    } else {
        const long long w2_total = b.total_w_degree(b.w2);
        push_check(t, "w2_average_degree", Rational(w2_total, t.w2_size),
                   (Rational(1) - t.lambda) * beta / 2);
        push_check(t, "w2_degree_accounting", Rational(w2_total),
                   Rational(static_cast<long long>(params.beta_minus) * t.w2_size, 2));
    }

    if (t.w1_size == 0) {
        push_skipped(t, "w1_average_degree");
        push_skipped(t, "w1_unique_per_component");
        push_skipped(t, "w1_degree_accounting");
    } else {
        const long long w1_total = b.total_w_degree(b.w1);
        push_check(t, "w1_average_degree", Rational(w1_total, t.w1_size),
                   (Rational(1) - t.sigma - t.lambda) * beta / 2);

        std::vector<int> members_per_component(ge.d_components.size(), 0);
        const std::vector<int> comp = component_index(n, ge);
        bool w1_unique = true;
        for (int w : b.w1) {
            if (comp[w] < 0 || ++members_per_component[comp[w]] > 1) {
                w1_unique = false;
            }
        }
        push_check(t, "w1_unique_per_component", Rational(w1_unique ? 1 : 0),
                   Rational(1), CheckRecord::Cmp::Equal);

        long long w1_h_total = 0;
        for (int w : b.w1) w1_h_total += h.degree(w);
        push_check(t, "w1_degree_accounting", Rational(w1_total),
                   Rational(w1_h_total - t.d_minus_s));
    }

    if (w_size == 0) {
        push_skipped(t, "z_size_lower_bound");
    } else {
        push_check(t, "z_size_lower_bound", Rational(t.z_size),
                   (Rational(1) - 2 * t.alpha * t.sigma - 2 * t.lambda) * w_size);
    }
    if (t.w1_size == 0) {
        push_skipped(t, "za_size_lower_bound");
    } else {
        push_check(t, "za_size_lower_bound", Rational(t.za_size),
                   (Rational(1) - 2 * t.sigma - 2 * t.lambda) * t.w1_size);
    }

    const Rational chain_lhs = (Rational(3) - 2 * epsilon) * t.mu_h;
    const Rational chain_rhs = (Rational(2) - 2 * epsilon) * t.mu_g;
    const Rational bound_lhs(t.mu_h);
    const Rational bound_rhs = (Rational(2, 3) - epsilon) * t.mu_g;
    if (t.guarantee_params) {
        push_check(t, "scaled_mu_chain", chain_lhs, chain_rhs);
        push_check(t, "approx_guarantee", bound_lhs, bound_rhs);
    } else {
        push_flagged(t, "scaled_mu_chain", chain_lhs, chain_rhs);
        push_flagged(t, "approx_guarantee", bound_lhs, bound_rhs);
    }
    return t;
}

std::string dump_instance(const std::string& context, const Graph& g,
                          const Graph& h, const Matching& m,
                          const Matching& mstar) {
    std::ostringstream out;
    out << context << "\n--- graph g ---\n" << to_edge_list(g);
    out << "--- subgraph h ---\n" << to_edge_list(h);
    auto emit = [&out](const char* label, const Matching& mm) {
        out << "--- " << label << " ---\n" << mm.size() << '\n';
        for (const Edge& e : mm.edges) out << e.u << ' ' << e.v << '\n';
    };
    emit("matching m", m);
    emit("matching mstar", mstar);
    return out.str();
}

}  // namespace edcslab
