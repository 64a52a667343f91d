// cliquehom CLI: Betti numbers, testers, experiments, generators, distances
// and incremental traces over a shared generator mini-language.
//
// Exit codes: 0 success (or tester accept), 1 tester reject (test command
// only; stdout JSON always parses), 2 invalid parameters or parse errors,
// 3 memory-budget abort.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cliquehom/cliquehom.hpp"

using namespace cliquehom;

namespace {

struct GraphSource {
    std::string gen;
    std::string input;
};

void add_source_options(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--gen", src.gen, "generator spec, e.g. multipartite:3,3 | gnp:60,0.9");
    cmd->add_option("--input", src.input, "edge-list file (\"n m\" header, then \"u v\" lines)");
}

Graph load_graph(const GraphSource& src, std::optional<std::uint64_t> seed) {
    if (src.gen.empty() == src.input.empty())
        fail(errc::invalid_params, "exactly one of --gen / --input is required");
    if (!src.gen.empty()) return make_graph(parse_generator_spec(src.gen), seed);
    std::ifstream in(src.input);
    if (!in) fail(errc::parse_error, "cannot open " + src.input);
    return read_edge_list(in);
}

int run_betti(const GraphSource& src, std::optional<std::uint64_t> seed, int k, bool verify,
              const std::string& format) {
    Graph g = load_graph(src, seed);
    Complex c = build_clique_complex(g, k + 1);
    RankProfile p = rank_profile(c, k);
    std::optional<long long> direct;
    if (verify) direct = betti_direct(c, k);
    if (format == "json") {
        nlohmann::json j = to_json(p);
        if (direct) j["beta_k_direct"] = *direct;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "k " << p.k << "\nd_k " << p.d_k << "\nr_k " << p.r_k << "\nr_k1 " << p.r_k_plus_1
                  << "\nbeta_k " << p.beta_k << '\n';
        if (direct) std::cout << "beta_k_direct " << *direct << '\n';
    }
    if (direct && *direct != p.beta_k) {
        std::cerr << "verification failed: betti=" << p.beta_k << " direct=" << *direct << '\n';
        return 1;
    }
    return 0;
}

int run_test(const GraphSource& src, std::uint64_t seed, int k, double eps, double delta,
             TesterParams params) {
    params.seed = seed;
    Graph g = load_graph(src, seed);
    TestReport r = betti_test(g, k, eps, delta, params);
    std::cout << to_json(r).dump(2) << '\n';
    return r.accept ? 0 : 1;
}

int run_experiment_cmd(const std::string& spec_path, const std::string& out_path) {
    std::ifstream in(spec_path);
    if (!in) fail(errc::parse_error, "cannot open " + spec_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("bad JSON: ") + e.what());
    }
    ExperimentSpec spec = parse_experiment_spec(j);
    auto rows = run_experiment(spec);
    std::ofstream out(out_path);
    if (!out) fail(errc::parse_error, "cannot open " + out_path);
    write_experiment_csv(out, rows);
    return 0;
}

int run_generate(const std::string& gen, std::optional<std::uint64_t> seed, const std::string& out_path) {
    Graph g = make_graph(parse_generator_spec(gen), seed);
    std::ofstream out(out_path);
    if (!out) fail(errc::parse_error, "cannot open " + out_path);
    write_edge_list(out, g);
    return 0;
}

int run_distance(const std::string& a_path, const std::string& b_path, bool exact) {
    std::ifstream a(a_path), b(b_path);
    if (!a) fail(errc::parse_error, "cannot open " + a_path);
    if (!b) fail(errc::parse_error, "cannot open " + b_path);
    Graph ga = read_edge_list(a), gb = read_edge_list(b);
    Ratio d = exact ? permutation_distance(ga, gb) : labeled_distance(ga, gb);
    std::cout << d.str() << '\n';
    return 0;
}

int run_trace(const GraphSource& src, std::optional<std::uint64_t> gen_seed, int k,
              std::uint64_t order_seed) {
    Graph g = load_graph(src, gen_seed);
    Complex c = build_clique_complex(g, k + 1);
    for (const TraceStep& s : incremental_trace(c, k, order_seed)) {
        std::cout << (s.delta_beta >= 0 ? "+" : "") << s.delta_beta << " dim=" << s.dim << " face=";
        for (std::size_t i = 0; i < s.face.size(); ++i) std::cout << (i ? "," : "") << s.face[i];
        std::cout << " beta=" << s.beta_after << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique-complex homology over GF(2) and sampling property testers"};
    app.require_subcommand(1);

    int jobs = 1;
    app.add_option("--jobs", jobs, "worker cap for tester trials")->check(CLI::PositiveNumber);
    std::uint64_t budget_mib = 0;
    app.add_option("--budget-mib", budget_mib, "boundary-matrix memory budget in MiB (default 2048)");

    GraphSource betti_src;
    int betti_k = 0;
    bool betti_verify = false;
    std::string betti_format = "text";
    std::optional<std::uint64_t> betti_seed;
    auto* cmd_betti = app.add_subcommand("betti", "compute d_k, r_k, r_{k+1}, beta_k");
    add_source_options(cmd_betti, betti_src);
    cmd_betti->add_option("--k", betti_k, "homology dimension")->required();
    cmd_betti->add_flag("--verify", betti_verify, "cross-check with the direct kernel/image computation");
    cmd_betti->add_option("--format", betti_format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cmd_betti->add_option("--seed", betti_seed, "seed (needed for gnp sources)");

    GraphSource test_src;
    int test_k = 0;
    double test_eps = 0, test_delta = 0;
    std::uint64_t test_seed = 0;
    TesterParams test_params;
    double test_threshold = -1;
    auto* cmd_test = app.add_subcommand("test", "test beta_k >= (1-delta) d_k by sampling");
    add_source_options(cmd_test, test_src);
    cmd_test->add_option("--k", test_k, "homology dimension")->required();
    cmd_test->add_option("--eps", test_eps, "proximity parameter")->required();
    cmd_test->add_option("--delta", test_delta, "Betti deficiency parameter")->required();
    cmd_test->add_option("--seed", test_seed, "RNG seed")->required();
    cmd_test->add_option("--q", test_params.sample_size, "vertices per sample");
    cmd_test->add_option("--trials", test_params.trials, "independent samples");
    cmd_test->add_option("--threshold", test_threshold, "density threshold (default (eps1+eps2)/2)");
    cmd_test->add_option("--split", test_params.split_fraction, "eps_2 = split * eps (default 0.5)");

    std::string exp_spec, exp_out;
    auto* cmd_exp = app.add_subcommand("experiment", "run a JSON experiment spec, write CSV");
    cmd_exp->add_option("--spec", exp_spec, "experiment spec JSON file")->required();
    cmd_exp->add_option("-o,--output", exp_out, "CSV output path")->required();

    std::string gen_spec, gen_out;
    std::optional<std::uint64_t> gen_seed;
    auto* cmd_gen = app.add_subcommand("generate", "write a generated graph as an edge list");
    cmd_gen->add_option("--gen", gen_spec, "generator spec")->required();
    cmd_gen->add_option("--seed", gen_seed, "seed (needed for gnp)");
    cmd_gen->add_option("-o,--output", gen_out, "output path")->required();

    std::string dist_a, dist_b;
    bool dist_exact = false;
    auto* cmd_dist = app.add_subcommand("distance", "edit distance between two edge-list graphs");
    cmd_dist->add_option("--a", dist_a, "first graph")->required();
    cmd_dist->add_option("--b", dist_b, "second graph")->required();
    cmd_dist->add_flag("--exact", dist_exact, "minimize over all relabelings (n <= 9)");

    GraphSource trace_src;
    int trace_k = 0;
    std::uint64_t trace_seed = 0;
    std::optional<std::uint64_t> trace_gen_seed;
    auto* cmd_trace = app.add_subcommand("trace", "incremental face-insertion trace of beta_k");
    add_source_options(cmd_trace, trace_src);
    cmd_trace->add_option("--k", trace_k, "homology dimension")->required();
    cmd_trace->add_option("--seed", trace_seed, "insertion-order seed (default 0)");
    cmd_trace->add_option("--gen-seed", trace_gen_seed, "seed for gnp sources");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (budget_mib > 0) set_matrix_memory_budget(budget_mib * (1ull << 20));
        test_params.jobs = jobs;
        if (test_threshold >= 0) test_params.density_threshold = test_threshold;

        if (app.got_subcommand(cmd_betti))
            return run_betti(betti_src, betti_seed, betti_k, betti_verify, betti_format);
        if (app.got_subcommand(cmd_test))
            return run_test(test_src, test_seed, test_k, test_eps, test_delta, test_params);
        if (app.got_subcommand(cmd_exp)) return run_experiment_cmd(exp_spec, exp_out);
        if (app.got_subcommand(cmd_gen)) return run_generate(gen_spec, gen_seed, gen_out);
        if (app.got_subcommand(cmd_dist)) return run_distance(dist_a, dist_b, dist_exact);
        if (app.got_subcommand(cmd_trace))
            return run_trace(trace_src, trace_gen_seed, trace_k, trace_seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == errc::memory_budget ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
