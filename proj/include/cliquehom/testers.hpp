// Sampling-based tolerant K_m-freeness tester and the large-Betti-number
// tester that reduces to it, plus the delta(epsilon, k) bound calculator and
// the K_{k+2}-copy budget.
//
// The freeness tester is the canonical dense-model sampler: draw q vertices,
// count induced K_m copies, threshold the mean copy density over independent
// trials. The removal-lemma constants behind the theory are tower-sized, so
// (q, trials, density_threshold) ship as empirically calibrated defaults;
// the experiment specs under experiments/ reproduce the calibration.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cliquehom/complex.hpp"
#include "cliquehom/errors.hpp"
#include "cliquehom/graph.hpp"
#include "cliquehom/rational.hpp"
#include "cliquehom/rng.hpp"
#include "cliquehom/util.hpp"

namespace cliquehom {

struct TesterParams {
    double epsilon = 0.1;    // farness threshold (the tolerant pair's eps_2)
    double epsilon1 = 0.05;  // closeness threshold (eps_1 < epsilon)
    int sample_size = 24;    // q, vertices per sample
    int trials = 30;
    std::optional<double> density_threshold;  // derived as (eps_1 + eps_2)/2 when unset
    std::uint64_t seed = 0;
    double split_fraction = 0.5;  // betti_test only: eps_2 = split_fraction * epsilon
    int jobs = 1;                 // worker cap for trials; does not affect results
};

struct TestReport {
    bool accept = false;
    Ratio observed_density_ratio;   // exact: total copies / (trials * C(q, m))
    double observed_density = 0.0;
    double resolved_threshold = 0.0;
    std::uint64_t queries_used = 0;
    std::uint64_t seed = 0;
    int clique_size = 0;  // m
    TesterParams params;  // echo, with derived fields filled in

    // Filled by betti_test.
    bool is_betti_test = false;
    int k = -1;
    double epsilon = 0.0;
    double delta = 0.0;
    std::string guarantee_regime;  // "theorem" or "heuristic"
};

struct DeltaBound {
    int k = 0;
    double epsilon = 0.0;
    bool tower_suppressed = false;
    double value = 0.0;               // valid when !tower_suppressed
    std::uint64_t tower_height = 0;   // recorded for k > 1
};

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// q distinct vertices of [0, n), sorted. Partial Fisher-Yates.
inline std::vector<int> sample_vertices(int n, int q, Rng& rng) {
    if (q > n) fail(errc::sample_too_large, "sample of " + std::to_string(q) + " from " + std::to_string(n));
    if (q < 0) fail(errc::invalid_params, "negative sample size");
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < q; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
    ids.resize(static_cast<std::size_t>(q));
    std::sort(ids.begin(), ids.end());
    return ids;
}

/// Builds the induced subgraph on `verts` through an edge oracle; consumes
/// exactly C(|verts|, 2) queries and touches no other pair.
template <class EdgeFn>
Graph induced_subgraph(EdgeFn&& query, std::span<const int> verts) {
    Graph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (query(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

/// Induced subgraph on q uniformly chosen distinct vertices.
inline Graph sample_induced(const Graph& g, int q, Rng& rng) {
    auto verts = sample_vertices(g.vertex_count(), q, rng);
    return induced_subgraph([&g](int u, int v) { return g.has_edge(u, v); }, verts);
}

// ---------------------------------------------------------------------------
// Tolerant K_m-freeness tester
// ---------------------------------------------------------------------------

namespace detail {

inline void validate_tester_params(const TesterParams& p, int m) {
    if (m < 2) fail(errc::invalid_params, "clique size must be >= 2");
    if (!(p.epsilon > 0.0 && p.epsilon <= 1.0)) fail(errc::invalid_params, "epsilon must be in (0,1]");
    if (!(p.epsilon1 > 0.0 && p.epsilon1 < p.epsilon))
        fail(errc::invalid_params, "need 0 < epsilon1 < epsilon");
    if (p.trials < 1) fail(errc::invalid_params, "trials must be >= 1");
    if (p.sample_size < m) fail(errc::invalid_params, "sample size must be >= clique size");
    if (p.density_threshold && !(*p.density_threshold >= 0.0 && *p.density_threshold <= 1.0))
        fail(errc::invalid_params, "density threshold must be in [0,1]");
    if (p.jobs < 1) fail(errc::invalid_params, "jobs must be >= 1");
}

/// Runs fn(t) for t in [0, count) on up to `jobs` threads. Results must be
/// written into per-index slots; aggregation order stays by index.
template <class Fn>
void for_each_trial(int count, int jobs, Fn&& fn) {
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (int t = 0; t < count; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&fn, w, jobs, count] {
            for (int t = w; t < count; t += jobs) fn(t);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Core tester over an arbitrary edge oracle. Each trial derives its RNG
/// stream from (seed, trial index), samples q vertices, reads exactly
/// C(q, 2) adjacency entries, and counts induced K_m copies. Accepts iff the
/// mean copy density (copies / C(q, m), averaged over trials) is <= the
/// density threshold; a tie accepts, which keeps K_m-free inputs accepted
/// with probability 1. EdgeFn must be safe for concurrent calls when
/// params.jobs > 1.
template <class EdgeFn>
TestReport tolerant_clique_free_test_with(EdgeFn&& query, int n, int m, const TesterParams& params) {
    detail::validate_tester_params(params, m);
    if (params.sample_size > n) fail(errc::sample_too_large, "sample size exceeds vertex count");

    const int q = params.sample_size;
    const long long per_sample = static_cast<long long>(binom(q, m));
    std::vector<long long> copies(static_cast<std::size_t>(params.trials), 0);
    std::vector<std::uint64_t> queries(static_cast<std::size_t>(params.trials), 0);

    detail::for_each_trial(params.trials, params.jobs, [&](int t) {
        Rng rng = Rng::child(params.seed, static_cast<std::uint64_t>(t));
        auto verts = sample_vertices(n, q, rng);
        std::uint64_t local = 0;
        Graph sample = induced_subgraph(
            [&](int u, int v) {
                ++local;
                return query(u, v);
            },
            verts);
        copies[static_cast<std::size_t>(t)] = count_clique_copies(sample, m);
        queries[static_cast<std::size_t>(t)] = local;
    });

    long long total_copies = 0;
    std::uint64_t total_queries = 0;
    for (int t = 0; t < params.trials; ++t) {
        total_copies += copies[static_cast<std::size_t>(t)];
        total_queries += queries[static_cast<std::size_t>(t)];
    }

    TestReport r;
    r.params = params;
    r.seed = params.seed;
    r.clique_size = m;
    r.queries_used = total_queries;
    r.observed_density_ratio = Ratio(total_copies, static_cast<long long>(params.trials) * per_sample);
    r.observed_density = r.observed_density_ratio.value();
    r.resolved_threshold = params.density_threshold.value_or((params.epsilon1 + params.epsilon) / 2.0);
    r.params.density_threshold = r.resolved_threshold;
    r.accept = r.observed_density <= r.resolved_threshold;
    return r;
}

inline TestReport tolerant_clique_free_test(const Graph& g, int m, const TesterParams& params) {
    return tolerant_clique_free_test_with([&g](int u, int v) { return g.has_edge(u, v); }, g.vertex_count(),
                                          m, params);
}

// ---------------------------------------------------------------------------
// delta(epsilon, k) and the copy budget
// ---------------------------------------------------------------------------

/// Largest delta for which the reduction's guarantee regime applies:
/// sqrt(2 eps) at k = 0, eps/3 at k = 1, and 1/tower(ceil(5 (k+2)^4
/// log2(1/eps))) above that. Towers of height > 4 are far below any positive
/// double and come back marked tower_suppressed with the height recorded.
inline DeltaBound delta_bound(double epsilon, int k) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) fail(errc::invalid_params, "epsilon must be in (0,1)");
    if (k < 0) fail(errc::invalid_params, "negative dimension");
    DeltaBound b;
    b.k = k;
    b.epsilon = epsilon;
    if (k == 0) {
        b.value = std::sqrt(2.0 * epsilon);
        return b;
    }
    if (k == 1) {
        b.value = epsilon / 3.0;
        return b;
    }
    long double exact = 5.0L * static_cast<long double>(k + 2) * (k + 2) * (k + 2) * (k + 2) *
                        std::log2(1.0L / static_cast<long double>(epsilon));
    b.tower_height = static_cast<std::uint64_t>(std::ceil(exact));
    if (b.tower_height < 1) b.tower_height = 1;
    if (b.tower_height <= 4) {
        // heights 1..4 give towers 2, 4, 16, 65536 — all exactly representable
        double tower = 2.0;
        for (std::uint64_t i = 1; i < b.tower_height; ++i) tower = std::ldexp(1.0, static_cast<int>(tower));
        b.value = 1.0 / tower;
    } else {
        b.tower_suppressed = true;
    }
    return b;
}

struct FaceBudget {
    unsigned long long value = 0;
    bool saturated = false;
};

/// floor(delta * n^{k+2} / (k+2)!) — the K_{k+2}-copy budget implied by
/// r_{k+1} <= delta * d_k. Saturates with a flag past 64 bits.
inline FaceBudget k_face_bound_chain(int n, int k, double delta) {
    if (n <= 0 || k < 0) fail(errc::invalid_params, "bad n or k");
    if (!(delta >= 0.0 && delta < 1.0)) fail(errc::invalid_params, "delta must be in [0,1)");
    long double x = static_cast<long double>(delta);
    for (int i = 0; i < k + 2; ++i) x *= static_cast<long double>(n);
    for (int i = 2; i <= k + 2; ++i) x /= static_cast<long double>(i);
    FaceBudget out;
    if (x >= static_cast<long double>(std::numeric_limits<unsigned long long>::max())) {
        out.value = std::numeric_limits<unsigned long long>::max();
        out.saturated = true;
    } else {
        out.value = static_cast<unsigned long long>(std::floor(x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Large-Betti-number tester
// ---------------------------------------------------------------------------

/// Tests "beta_k >= (1 - delta) d_k" by tolerantly testing K_{k+2}-freeness:
/// accept means the property is plausible, reject means the graph is
/// epsilon-far from it. The closeness side eps_1 follows the explicit
/// constants where known (1.1 delta^2 / 2 at k = 0, 3 delta at k = 1) and
/// falls back to eps_2 / 2 above that; the farness side is
/// eps_2 = split_fraction * epsilon. When delta exceeds delta_bound, the
/// bound is tower-suppressed, or the derived eps_1 has to be clamped below
/// eps_2, the report is stamped guarantee_regime = "heuristic" and the run
/// proceeds anyway.
inline TestReport betti_test(const Graph& g, int k, double epsilon, double delta, TesterParams params) {
    if (k < 0) fail(errc::invalid_params, "negative dimension");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) fail(errc::invalid_params, "epsilon must be in (0,1]");
    if (!(delta > 0.0 && delta < 1.0)) fail(errc::invalid_params, "delta must be in (0,1)");
    if (!(params.split_fraction > 0.0 && params.split_fraction < 1.0))
        fail(errc::invalid_params, "split_fraction must be in (0,1)");

    const int m = k + 2;
    const double eps2 = epsilon * params.split_fraction;
    double eps1 = 0.0;
    if (k == 0)
        eps1 = 1.1 * delta * delta / 2.0;
    else if (k == 1)
        eps1 = 3.0 * delta;
    else
        eps1 = eps2 / 2.0;

    bool theorem = true;
    if (epsilon >= 1.0) {
        theorem = false;  // delta_bound needs epsilon in (0,1)
    } else {
        DeltaBound bound = delta_bound(epsilon, k);
        if (bound.tower_suppressed || delta > bound.value) theorem = false;
    }
    if (!(eps1 < eps2)) {
        eps1 = eps2 / 2.0;  // keep the tolerant pair ordered; outside the guarantee
        theorem = false;
    }

    params.epsilon = eps2;
    params.epsilon1 = eps1;
    TestReport r = tolerant_clique_free_test(g, m, params);
    r.is_betti_test = true;
    r.k = k;
    r.epsilon = epsilon;
    r.delta = delta;
    r.guarantee_regime = theorem ? "theorem" : "heuristic";
    return r;
}

}  // namespace cliquehom
