// Witness families and the planting surgery that pushes beta_k/d_k up while
// modifying few edges.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cliquehom/complex.hpp"
#include "cliquehom/errors.hpp"
#include "cliquehom/graph.hpp"
#include "cliquehom/homology.hpp"
#include "cliquehom/rational.hpp"
#include "cliquehom/rng.hpp"

namespace cliquehom {

struct Witness {
    Graph graph;
    long long d_k = 0;
    long long beta_k = 0;
};

/// Complete (k+1)-partite graph with equal parts of size s, together with its
/// closed-form face and Betti counts: d_k = s^{k+1} and beta_k = (s-1)^{k+1}
/// for k >= 1. k = 0 degenerates to the edgeless graph on s vertices, where
/// beta_0 = d_0 = s (one hole per isolated vertex, not (s-1)).
inline Witness multipartite_witness(int k, int part_size) {
    if (k < 0) fail(errc::invalid_params, "negative dimension");
    if (part_size < 2) fail(errc::invalid_params, "part size must be >= 2");
    std::vector<int> sizes(static_cast<std::size_t>(k) + 1, part_size);
    Graph g = complete_multipartite(sizes);
    long long d = 1, b = 1;
    for (int i = 0; i <= k; ++i) {
        d *= part_size;
        b *= part_size - 1;
    }
    if (k == 0) b = part_size;
    return Witness{std::move(g), d, b};
}

/// Closed-form Betti number of a complete multipartite graph with the given
/// part sizes: product of (s_i - 1), except that a single part (edgeless
/// graph) has beta_0 = s_1.
inline long long multipartite_beta(std::span<const int> part_sizes, int k) {
    if (k == 0 && part_sizes.size() == 1) return part_sizes[0];
    long long b = 1;
    for (int s : part_sizes) b *= s - 1;
    return b;
}

struct PlantReport {
    double alpha = 0.0;
    int k = 0;
    long long edges_modified = 0;  // |E(h) symdiff E(h')|, always <= alpha * n^2
    VertexSubset subset;           // the chosen S
    std::vector<int> part_sizes;   // split of S into k+1 parts

    // Closed-form counts for the planted part alone (the subgraph induced on
    // S, which is disconnected from the rest).
    long long planted_d_k = 0;
    long long planted_beta_k = 0;

    // Whole-graph ratios beta_k/d_k. Exact when the elimination fit the desk
    // budget; otherwise `exact` is false, beta_ratio_before is absent and
    // beta_ratio_after falls back to the planted part's closed-form ratio,
    // which lower-bounds the planted component's contribution.
    bool exact = false;
    std::optional<Ratio> beta_ratio_before;
    std::optional<Ratio> beta_ratio_after;
};

/// Picks a uniformly random S of size floor(alpha n), deletes the S cut and
/// rebuilds S's interior as a complete (k+1)-partite graph. Returns the
/// modified graph plus a report with exact edit counts and Betti ratios
/// (exact ratios only while n <= exact_vertex_cap and the boundary matrices
/// fit the memory budget).
inline std::pair<Graph, PlantReport> plant_large_betti(const Graph& h, int k, double alpha,
                                                       std::uint64_t seed, int exact_vertex_cap = 64) {
    if (k < 0) fail(errc::invalid_params, "negative dimension");
    if (!(alpha > 0.0 && alpha <= 1.0)) fail(errc::invalid_params, "alpha must be in (0,1]");
    int n = h.vertex_count();
    int size = static_cast<int>(alpha * n);
    if (size < k + 1) fail(errc::subset_too_small, "floor(alpha n) must be at least k+1");

    Rng rng(seed);
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    VertexSubset s(ids.begin(), ids.begin() + size);
    std::sort(s.begin(), s.end());

    Graph planted = detail::surgery_core(h, s, k + 1);

    PlantReport rep;
    rep.alpha = alpha;
    rep.k = k;
    rep.subset = s;
    rep.part_sizes = detail::balanced_split(size, k + 1);
    rep.planted_d_k = 1;
    for (int sz : rep.part_sizes) rep.planted_d_k *= sz;
    rep.planted_beta_k = multipartite_beta(rep.part_sizes, k);

    // labeled_distance(h, planted) * n^2, counted directly
    long long diff = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (h.has_edge(u, v) != planted.has_edge(u, v)) ++diff;
    rep.edges_modified = diff;

    if (n <= exact_vertex_cap) {
        try {
            Complex before = build_clique_complex(h, k + 1);
            Complex after = build_clique_complex(planted, k + 1);
            long long d_before = before.face_count(k);
            long long d_after = after.face_count(k);
            if (d_before > 0) rep.beta_ratio_before = Ratio(betti(before, k), d_before);
            if (d_after > 0) rep.beta_ratio_after = Ratio(betti(after, k), d_after);
            rep.exact = true;
        } catch (const Error& e) {
            if (e.code() != errc::memory_budget) throw;
        }
    }
    if (!rep.exact && rep.planted_d_k > 0)
        rep.beta_ratio_after = Ratio(rep.planted_beta_k, rep.planted_d_k);
    return {std::move(planted), std::move(rep)};
}

}  // namespace cliquehom
