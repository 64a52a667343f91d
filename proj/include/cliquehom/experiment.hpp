// Experiment harness: a JSON spec describing a generator, a tester and a
// parameter grid expands into one deterministic CSV row per (grid point,
// repetition).
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cliquehom/errors.hpp"
#include "cliquehom/generator_spec.hpp"
#include "cliquehom/graph.hpp"
#include "cliquehom/rng.hpp"
#include "cliquehom/testers.hpp"

namespace cliquehom {

struct ExperimentSpec {
    GeneratorSpec generator;
    std::string tester;  // "betti_test" or "tolerant_clique_free_test"
    nlohmann::json tester_params;
    // Grid axes sorted by name; the cartesian product is walked row-major in
    // that order, which fixes point_id numbering.
    std::vector<std::pair<std::string, std::vector<double>>> grid;
    int repetitions = 1;
    std::uint64_t master_seed = 0;
};

struct ExperimentRow {
    int point_id = 0;
    int repetition = 0;
    bool accept = false;
    double observed_density = 0.0;
    std::uint64_t queries_used = 0;
    std::uint64_t seed = 0;
};

namespace detail {

inline const std::vector<std::string>& known_tester_keys() {
    // per-row seeds derive from master_seed, so "seed" is deliberately absent
    static const std::vector<std::string> keys = {
        "k", "epsilon", "delta", "m", "q", "trials", "epsilon1", "density_threshold",
        "split_fraction", "jobs"};
    return keys;
}

inline void check_tester_key(const std::string& key) {
    const auto& keys = known_tester_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
        fail(errc::invalid_spec, "unknown tester parameter '" + key + "'");
}

inline double require_number(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        fail(errc::invalid_spec, "tester_params." + key + " must be a number");
    return j[key].get<double>();
}

inline int require_int(const nlohmann::json& j, const std::string& key) {
    double v = require_number(j, key);
    int n = static_cast<int>(v);
    if (static_cast<double>(n) != v) fail(errc::invalid_spec, "tester_params." + key + " must be an integer");
    return n;
}

}  // namespace detail

inline ExperimentSpec parse_experiment_spec(const nlohmann::json& j) {
    if (!j.is_object()) fail(errc::invalid_spec, "experiment spec must be a JSON object");
    ExperimentSpec spec;

    if (!j.contains("generator") || !j["generator"].is_string())
        fail(errc::invalid_spec, "missing generator name");
    std::string gen = j["generator"].get<std::string>();
    if (j.contains("generator_params")) {
        if (!j["generator_params"].is_array()) fail(errc::invalid_spec, "generator_params must be an array");
        gen += ":";
        bool first = true;
        for (const auto& a : j["generator_params"]) {
            if (!a.is_number()) fail(errc::invalid_spec, "generator_params entries must be numbers");
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", a.get<double>());
            gen += (first ? "" : ",") + std::string(buf);
            first = false;
        }
    }
    spec.generator = parse_generator_spec(gen);

    if (!j.contains("tester") || !j["tester"].is_string()) fail(errc::invalid_spec, "missing tester name");
    spec.tester = j["tester"].get<std::string>();
    if (spec.tester != "betti_test" && spec.tester != "tolerant_clique_free_test")
        fail(errc::invalid_spec, "unknown tester '" + spec.tester + "'");

    spec.tester_params = j.value("tester_params", nlohmann::json::object());
    if (!spec.tester_params.is_object()) fail(errc::invalid_spec, "tester_params must be an object");
    for (const auto& [key, value] : spec.tester_params.items()) {
        detail::check_tester_key(key);
        if (!value.is_number()) fail(errc::invalid_spec, "tester_params." + key + " must be a number");
    }

    nlohmann::json grid = j.value("grid", nlohmann::json::object());
    if (!grid.is_object()) fail(errc::invalid_spec, "grid must be an object");
    for (const auto& [key, values] : grid.items()) {
        detail::check_tester_key(key);
        if (!values.is_array() || values.empty())
            fail(errc::invalid_spec, "grid." + key + " must be a nonempty array");
        std::vector<double> axis;
        for (const auto& v : values) {
            if (!v.is_number()) fail(errc::invalid_spec, "grid." + key + " entries must be numbers");
            axis.push_back(v.get<double>());
        }
        spec.grid.emplace_back(key, std::move(axis));
    }
    std::sort(spec.grid.begin(), spec.grid.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    if (!j.contains("repetitions") || !j["repetitions"].is_number_integer())
        fail(errc::invalid_spec, "missing repetitions");
    spec.repetitions = j["repetitions"].get<int>();
    if (spec.repetitions < 0) fail(errc::invalid_spec, "repetitions must be nonnegative");

    if (!j.contains("master_seed") || !j["master_seed"].is_number_integer())
        fail(errc::invalid_spec, "missing master_seed");
    if (!j["master_seed"].is_number_unsigned() && j["master_seed"].get<long long>() < 0)
        fail(errc::invalid_spec, "master_seed must be nonnegative");
    spec.master_seed = j["master_seed"].get<std::uint64_t>();
    return spec;
}

namespace detail {

inline TestReport run_point(const ExperimentSpec& spec, const nlohmann::json& point_params,
                            std::uint64_t row_seed) {
    TesterParams params;
    if (point_params.contains("q")) params.sample_size = require_int(point_params, "q");
    if (point_params.contains("trials")) params.trials = require_int(point_params, "trials");
    if (point_params.contains("density_threshold"))
        params.density_threshold = require_number(point_params, "density_threshold");
    if (point_params.contains("split_fraction"))
        params.split_fraction = require_number(point_params, "split_fraction");
    if (point_params.contains("jobs")) params.jobs = require_int(point_params, "jobs");
    params.seed = mix_seed(row_seed, 0x7465737465ull);  // tester stream

    std::optional<std::uint64_t> graph_seed;
    if (spec.generator.randomized()) graph_seed = mix_seed(row_seed, 0x67656eull);  // generator stream
    Graph g = make_graph(spec.generator, graph_seed);

    if (spec.tester == "betti_test") {
        int k = require_int(point_params, "k");
        double epsilon = require_number(point_params, "epsilon");
        double delta = require_number(point_params, "delta");
        return betti_test(g, k, epsilon, delta, params);
    }
    int m = require_int(point_params, "m");
    params.epsilon = require_number(point_params, "epsilon");
    params.epsilon1 = require_number(point_params, "epsilon1");
    return tolerant_clique_free_test(g, m, params);
}

}  // namespace detail

/// Runs the full grid. An empty grid yields zero rows. Row seeds derive from
/// (master_seed, point_id, repetition), so output is a pure function of the
/// spec.
inline std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
    std::vector<ExperimentRow> rows;
    if (spec.grid.empty()) return rows;

    long long points = 1;
    for (const auto& [_, axis] : spec.grid) points *= static_cast<long long>(axis.size());

    for (long long p = 0; p < points; ++p) {
        nlohmann::json point_params = spec.tester_params;
        long long rem = p;
        for (auto it = spec.grid.rbegin(); it != spec.grid.rend(); ++it) {
            const auto& [key, axis] = *it;
            point_params[key] = axis[static_cast<std::size_t>(rem % static_cast<long long>(axis.size()))];
            rem /= static_cast<long long>(axis.size());
        }
        for (int rep = 0; rep < spec.repetitions; ++rep) {
            std::uint64_t row_seed = mix_seed(mix_seed(spec.master_seed, static_cast<std::uint64_t>(p)),
                                              static_cast<std::uint64_t>(rep));
            TestReport r = detail::run_point(spec, point_params, row_seed);
            rows.push_back({static_cast<int>(p), rep, r.accept, r.observed_density, r.queries_used, row_seed});
        }
    }
    return rows;
}

inline void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
    out << "point_id,repetition,verdict,observed_density,queries_used,seed\n";
    char buf[64];
    for (const ExperimentRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g", r.observed_density);
        out << r.point_id << ',' << r.repetition << ',' << (r.accept ? "accept" : "reject") << ',' << buf
            << ',' << r.queries_used << ',' << r.seed << '\n';
    }
}

}  // namespace cliquehom
