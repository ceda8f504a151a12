// Command-line front end: graph generation, subgraph construction and
// verification, decomposition reports, proof traces, protocol simulation,
// and CSV benchmark sweeps.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "edcslab/comm_protocol.hpp"
#include "edcslab/edcs.hpp"
#include "edcslab/errors.hpp"
#include "edcslab/gallai_edmonds.hpp"
#include "edcslab/generator.hpp"
#include "edcslab/graph.hpp"
#include "edcslab/matching.hpp"
#include "edcslab/parallel.hpp"
#include "edcslab/proof_lab.hpp"
#include "edcslab/rational.hpp"
#include "edcslab/rng.hpp"

namespace {

using namespace edcslab;

/// Resolve (beta, beta_minus) from an explicit pair or from epsilon.
EdcsParams resolve_params(const std::optional<int>& beta,
                          const std::optional<int>& beta_minus,
                          const std::string& epsilon_text) {
    if (beta.has_value() != beta_minus.has_value()) {
        throw CLI::ValidationError("--beta and --beta-minus must be given together");
    }
    if (beta.has_value()) {
        EdcsParams p{*beta, *beta_minus};
        validate_params(p);
        return p;
    }
    if (epsilon_text.empty()) {
        throw CLI::ValidationError("either --epsilon or --beta/--beta-minus is required");
    }
    return params_for_epsilon(rational_from_decimal(epsilon_text));
}

void print_vertex_line(const char* label, const std::vector<int>& vs) {
    std::cout << label << ':';
    for (int v : vs) std::cout << ' ' << v;
    std::cout << '\n';
}

struct GraphSpec {
    std::string text;
    GeneratorConfig config;
};

/// "family:key=value,..." with keys n (required), m, p.
GraphSpec parse_graph_spec(const std::string& text) {
    GraphSpec spec;
    spec.text = text;
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("graph spec needs 'family:n=...': " + text);
    }
    spec.config.family = family_from_name(text.substr(0, colon));

    bool have_n = false;
    std::istringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("malformed graph spec item: " + item);
        }
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "n") {
            spec.config.n = std::stoi(value);
            have_n = true;
        } else if (key == "m") {
            spec.config.m = std::stoll(value);
        } else if (key == "p") {
            spec.config.p = std::stod(value);
        } else {
            throw std::invalid_argument("unknown graph spec key: " + key);
        }
    }
    if (!have_n) {
        throw std::invalid_argument("graph spec is missing n: " + text);
    }
    return spec;
}

/// "7" or "3..9" (inclusive).
std::vector<std::uint64_t> parse_seed_tokens(const std::vector<std::string>& tokens) {
    std::vector<std::uint64_t> seeds;
    for (const std::string& tok : tokens) {
        const auto dots = tok.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(std::stoull(tok));
            continue;
        }
        const std::uint64_t lo = std::stoull(tok.substr(0, dots));
        const std::uint64_t hi = std::stoull(tok.substr(dots + 2));
        if (hi < lo) {
            throw std::invalid_argument("empty seed range: " + tok);
        }
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    }
    return seeds;
}

int cmd_generate(const std::string& family, int n, std::optional<long long> m,
                 std::optional<double> p, std::uint64_t seed,
                 const std::string& out_path) {
    GeneratorConfig cfg;
    cfg.family = family_from_name(family);
    cfg.n = n;
    cfg.m = m;
    cfg.p = p;
    cfg.seed = seed;
    save_graph(generate(cfg), out_path);
    return 0;
}

int cmd_construct(const std::optional<int>& beta, const std::optional<int>& beta_minus,
                  const std::string& epsilon_text, std::uint64_t seed,
                  const std::string& in_path, const std::string& out_path) {
    const EdcsParams params = resolve_params(beta, beta_minus, epsilon_text);
    const Graph g = load_graph(in_path);
    const ConstructResult result = construct_edcs(g, params, seed);
    save_graph(result.h, out_path);
    std::cout << "edges=" << result.h.edge_count()
              << " fix_steps=" << result.fix_steps << '\n';
    return 0;
}

int cmd_verify(const std::optional<int>& beta, const std::optional<int>& beta_minus,
               const std::string& epsilon_text, const std::string& g_path,
               const std::string& h_path) {
    const EdcsParams params = resolve_params(beta, beta_minus, epsilon_text);
    const Graph g = load_graph(g_path);
    const Graph h = load_graph(h_path);
    const EdcsCheck check = verify_edcs(g, h, params);
    if (check.ok()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& v : check.p1_violations) {
        std::cout << "P1 violation: edge (" << v.edge.u << ',' << v.edge.v
                  << ") degree " << v.degree << " > " << params.beta << '\n';
    }
    for (const auto& v : check.p2_violations) {
        std::cout << "P2 violation: edge (" << v.edge.u << ',' << v.edge.v
                  << ") degree " << v.degree << " < " << params.beta_minus << '\n';
    }
    return 1;
}

int cmd_decompose(const std::string& h_path, const std::string& matching_path,
                  const std::string& emit_matching_path, std::uint64_t seed) {
    const Graph h = load_graph(h_path);
    Matching m;
    if (!matching_path.empty()) {
        m = load_matching(matching_path);
        validate_matching(h, m);
    } else {
        m = maximum_matching_seeded(h, seed);
    }
    GEDecomposition ge = decompose(h);
    ge = mark_specials(ge, h, m);  // rejects non-maximum matchings

    print_vertex_line("D", ge.d_set);
    print_vertex_line("A", ge.a_set);
    print_vertex_line("C", ge.c_set);
    for (std::size_t c = 0; c < ge.d_components.size(); ++c) {
        std::cout << "component " << c << ':';
        for (int v : ge.d_components[c]) std::cout << ' ' << v;
        std::cout << " special=" << ge.specials[c] << '\n';
    }
    if (!emit_matching_path.empty()) {
        save_matching(m, emit_matching_path);
    }
    return 0;
}

const char* cmp_token(CheckRecord::Cmp cmp) {
    return cmp == CheckRecord::Cmp::Equal ? "==" : ">=";
}

int cmd_trace(const std::string& epsilon_text, const std::optional<int>& beta,
              const std::optional<int>& beta_minus, std::uint64_t seed,
              bool as_json, const std::string& g_path) {
    const Rational epsilon = rational_from_decimal(epsilon_text);
    const EdcsParams params = resolve_params(beta, beta_minus, epsilon_text);
    const Graph g = load_graph(g_path);

    Rng rng(seed);
    const std::uint64_t construct_seed = rng.next();
    const std::uint64_t matching_seed = rng.next();
    const ConstructResult built = construct_edcs(g, params, construct_seed);
    const ProofTrace trace = verify_trace(g, built.h, params, epsilon, matching_seed);

    if (as_json) {
        nlohmann::json j;
        j["epsilon"] = to_string(trace.epsilon);
        j["beta"] = trace.params.beta;
        j["beta_minus"] = trace.params.beta_minus;
        j["lambda"] = to_string(trace.lambda);
        j["alpha"] = to_string(trace.alpha);
        j["sigma"] = to_string(trace.sigma);
        j["guarantee_params"] = trace.guarantee_params;
        j["mu_g"] = trace.mu_g;
        j["mu_h"] = trace.mu_h;
        j["path_count"] = trace.path_count;
        j["t1_count"] = trace.t1_count;
        j["t2_count"] = trace.t2_count;
        j["w1_size"] = trace.w1_size;
        j["w2_size"] = trace.w2_size;
        j["z_size"] = trace.z_size;
        j["za_size"] = trace.za_size;
        j["d_minus_s"] = trace.d_minus_s;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : trace.checks) {
            j["checks"].push_back({{"name", c.name},
                                   {"lhs", to_string(c.lhs)},
                                   {"rhs", to_string(c.rhs)},
                                   {"cmp", cmp_token(c.cmp)},
                                   {"status", check_status_token(c.status)}});
        }
        j["all_pass"] = trace.all_pass();
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& c : trace.checks) {
            std::cout << c.name << " lhs=" << to_string(c.lhs)
                      << " rhs=" << to_string(c.rhs) << ' '
                      << check_status_token(c.status) << '\n';
        }
        std::cout << "all_pass=" << (trace.all_pass() ? "true" : "false") << '\n';
    }
    return trace.all_pass() ? 0 : 1;
}

int cmd_simulate(const std::string& epsilon_text, const std::string& mode_text,
                 std::uint64_t seed, const std::string& g_path) {
    const Rational epsilon = rational_from_decimal(epsilon_text);
    const SplitMode mode = split_mode_from_name(mode_text);
    const Graph g = load_graph(g_path);
    const CommInstance inst = split_edges(g, mode, seed, epsilon);
    const CommResult result = run_protocol(inst);
    std::cout << "message_edges=" << result.message_edge_count
              << " mu_out=" << result.mu_output << " mu_g=" << result.mu_g
              << " ratio=" << to_string(result.ratio)
              << " threshold=" << to_string(result.threshold) << ' '
              << (result.pass ? "PASS" : "FAIL") << '\n';
    return result.pass ? 0 : 1;
}

int cmd_bench(const std::vector<std::string>& graph_texts,
              const std::vector<std::string>& epsilon_texts,
              const std::vector<std::string>& seed_tokens,
              const std::string& out_path) {
    if (graph_texts.empty() || epsilon_texts.empty() || seed_tokens.empty()) {
        throw CLI::ValidationError("bench needs --graphs, --epsilons and --seeds");
    }
    std::vector<GraphSpec> specs;
    for (const auto& text : graph_texts) specs.push_back(parse_graph_spec(text));
    std::vector<Rational> epsilons;
    for (const auto& text : epsilon_texts) {
        epsilons.push_back(rational_from_decimal(text));
    }
    const std::vector<std::uint64_t> seeds = parse_seed_tokens(seed_tokens);

    struct Row {
        GeneratorConfig config;
        Rational epsilon;
        std::uint64_t seed = 0;
        std::string csv;
        std::string error;
    };
    std::vector<Row> rows;
    for (const auto& spec : specs) {
        for (const auto& eps : epsilons) {
            for (const std::uint64_t seed : seeds) {
                rows.push_back({spec.config, eps, seed, {}, {}});
            }
        }
    }

    parallel_for(rows.size(), [&rows](std::size_t i) {
        Row& row = rows[i];
        try {
            Rng rng(row.seed);
            GeneratorConfig cfg = row.config;
            cfg.seed = rng.next();
            const std::uint64_t construct_seed = rng.next();
            const std::uint64_t matching_seed = rng.next();

            const Graph g = generate(cfg);
            const EdcsParams params = params_for_epsilon(row.epsilon);
            const ConstructResult built = construct_edcs(g, params, construct_seed);
            const ProofTrace trace =
                verify_trace(g, built.h, params, row.epsilon, matching_seed);

            const Rational ratio = trace.mu_g == 0
                                       ? Rational(1)
                                       : Rational(trace.mu_h, trace.mu_g);
            std::ostringstream line;
            line << g.vertex_count() << ',' << g.edge_count() << ','
                 << params.beta << ',' << params.beta_minus << ',' << trace.mu_g
                 << ',' << trace.mu_h << ',' << to_string(ratio) << ','
                 << to_string(Rational(2, 3) - row.epsilon) << ','
                 << built.h.edge_count() << ','
                 << (trace.all_pass() ? "true" : "false");
            row.csv = line.str();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });

    for (const Row& row : rows) {
        if (!row.error.empty()) {
            throw std::runtime_error("bench row failed (seed " +
                                     std::to_string(row.seed) + "): " + row.error);
        }
    }

    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << "n,m,beta,beta_minus,mu_g,mu_h,ratio,threshold,edcs_edges,trace_all_pass\n";
    for (const Row& row : rows) out << row.csv << '\n';
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-degree constrained subgraph laboratory"};
    app.require_subcommand(1);
    int rc = 0;

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "write a graph instance");
    std::string gen_family;
    int gen_n = 0;
    std::optional<long long> gen_m;
    std::optional<double> gen_p;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    generate_cmd->add_option("--family", gen_family, "graph family")->required();
    generate_cmd->add_option("--n", gen_n, "vertex count")->required();
    generate_cmd->add_option("--m", gen_m, "edge budget");
    generate_cmd->add_option("--p", gen_p, "edge probability");
    generate_cmd->add_option("--seed", gen_seed, "random seed");
    generate_cmd->add_option("out", gen_out, "output path")->required();
    generate_cmd->callback([&] {
        rc = cmd_generate(gen_family, gen_n, gen_m, gen_p, gen_seed, gen_out);
    });

    // construct-edcs
    auto* construct_cmd =
        app.add_subcommand("construct-edcs", "build a degree-constrained subgraph");
    std::optional<int> con_beta, con_beta_minus;
    std::string con_epsilon;
    std::uint64_t con_seed = 0;
    std::string con_in, con_out;
    construct_cmd->add_option("--beta", con_beta, "upper degree cap");
    construct_cmd->add_option("--beta-minus", con_beta_minus, "lower degree floor");
    construct_cmd->add_option("--epsilon", con_epsilon, "accuracy parameter");
    construct_cmd->add_option("--seed", con_seed, "random seed");
    construct_cmd->add_option("in", con_in, "input graph")->required();
    construct_cmd->add_option("out", con_out, "output subgraph")->required();
    construct_cmd->callback([&] {
        rc = cmd_construct(con_beta, con_beta_minus, con_epsilon, con_seed, con_in,
                           con_out);
    });

    // verify-edcs
    auto* verify_cmd =
        app.add_subcommand("verify-edcs", "check the two degree constraints");
    std::optional<int> ver_beta, ver_beta_minus;
    std::string ver_epsilon;
    std::string ver_g, ver_h;
    verify_cmd->add_option("--beta", ver_beta, "upper degree cap");
    verify_cmd->add_option("--beta-minus", ver_beta_minus, "lower degree floor");
    verify_cmd->add_option("--epsilon", ver_epsilon, "accuracy parameter");
    verify_cmd->add_option("graph", ver_g, "host graph")->required();
    verify_cmd->add_option("subgraph", ver_h, "candidate subgraph")->required();
    verify_cmd->callback([&] {
        rc = cmd_verify(ver_beta, ver_beta_minus, ver_epsilon, ver_g, ver_h);
    });

    // decompose
    auto* decompose_cmd =
        app.add_subcommand("decompose", "report the matching structure partition");
    std::string dec_in, dec_matching, dec_emit;
    std::uint64_t dec_seed = 0;
    decompose_cmd->add_option("graph", dec_in, "input graph")->required();
    decompose_cmd->add_option("--matching", dec_matching,
                              "use this maximum matching for specials");
    decompose_cmd->add_option("--emit-matching", dec_emit,
                              "write the matching that was used");
    decompose_cmd->add_option("--seed", dec_seed, "matching sampling seed");
    decompose_cmd->callback(
        [&] { rc = cmd_decompose(dec_in, dec_matching, dec_emit, dec_seed); });

    // trace-proof
    auto* trace_cmd = app.add_subcommand(
        "trace-proof", "construct a subgraph and verify the full bound chain");
    std::string tr_epsilon;
    std::optional<int> tr_beta, tr_beta_minus;
    std::uint64_t tr_seed = 0;
    bool tr_json = false;
    std::string tr_in;
    trace_cmd->add_option("--epsilon", tr_epsilon, "accuracy parameter")->required();
    trace_cmd->add_option("--beta", tr_beta, "override upper degree cap");
    trace_cmd->add_option("--beta-minus", tr_beta_minus, "override lower floor");
    trace_cmd->add_option("--seed", tr_seed, "random seed");
    trace_cmd->add_flag("--json", tr_json, "machine-readable output");
    trace_cmd->add_option("graph", tr_in, "input graph")->required();
    trace_cmd->callback([&] {
        rc = cmd_trace(tr_epsilon, tr_beta, tr_beta_minus, tr_seed, tr_json, tr_in);
    });

    // simulate-comm
    auto* sim_cmd =
        app.add_subcommand("simulate-comm", "run the one-way protocol once");
    std::string sim_epsilon, sim_mode = "random";
    std::uint64_t sim_seed = 0;
    std::string sim_in;
    sim_cmd->add_option("--epsilon", sim_epsilon, "accuracy parameter")->required();
    sim_cmd->add_option("--mode", sim_mode, "random | adversarial-bipartition");
    sim_cmd->add_option("--seed", sim_seed, "split seed");
    sim_cmd->add_option("graph", sim_in, "input graph")->required();
    sim_cmd->callback(
        [&] { rc = cmd_simulate(sim_epsilon, sim_mode, sim_seed, sim_in); });

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "sweep a grid and write CSV");
    std::vector<std::string> bench_graphs, bench_epsilons, bench_seeds;
    std::string bench_out;
    bench_cmd->add_option("--graphs", bench_graphs,
                          "graph specs like gnm:n=50,m=200 or planted:n=40");
    bench_cmd->add_option("--epsilons", bench_epsilons, "accuracy grid")
        ->delimiter(',');
    bench_cmd->add_option("--seeds", bench_seeds, "seeds (token or a..b range)")
        ->delimiter(',');
    bench_cmd->add_option("--out", bench_out, "CSV output path")->required();
    bench_cmd->callback(
        [&] { rc = cmd_bench(bench_graphs, bench_epsilons, bench_seeds, bench_out); });

    if (argc <= 1) {
        std::cerr << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
