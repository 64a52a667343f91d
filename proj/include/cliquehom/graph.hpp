// Dense undirected graphs as symmetric bit-matrices, generators, the two
// edit-distance notions, and the multipartite surgery.
#pragma once

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cliquehom/errors.hpp"
#include "cliquehom/gf2.hpp"
#include "cliquehom/rational.hpp"
#include "cliquehom/rng.hpp"

namespace cliquehom {

/// Simple undirected graph on vertices 0..n-1. Edges are stored in both
/// directions so adjacency tests and neighbourhood intersections are O(1)
/// and O(n/64). Immutable by convention once built; builders below return
/// fully constructed values.
class Graph {
  public:
    explicit Graph(int n) : n_(n), words_(words_for_bits(n)), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n <= 0) fail(errc::invalid_params, "vertex count must be positive");
    }

    int vertex_count() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row(u)[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        set_bit(u, v);
        set_bit(v, u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        clear_bit(u, v);
        clear_bit(v, u);
    }

    /// Unordered edge count.
    long long edge_count() const {
        long long twice = 0;
        for (int u = 0; u < n_; ++u)
            for (word_t w : row_words(u)) twice += std::popcount(w);
        return twice / 2;
    }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (word_t w : row_words(u)) d += std::popcount(w);
        return d;
    }

    std::span<const word_t> row_words(int u) const {
        return {bits_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) fail(errc::index_out_of_range, "vertex " + std::to_string(v) + " out of range");
    }
    std::span<const word_t> row(int u) const { return row_words(u); }
    void set_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / kWordBits] |=
            word_t{1} << (v % kWordBits);
    }
    void clear_bit(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / kWordBits] &=
            ~(word_t{1} << (v % kWordBits));
    }

    int n_;
    int words_;
    std::vector<word_t> bits_;
};

/// Strictly increasing vertex indices.
using VertexSubset = std::vector<int>;

inline void validate_vertex_subset(const VertexSubset& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) fail(errc::index_out_of_range, "subset member out of range");
        if (i > 0 && s[i] <= s[i - 1]) fail(errc::invalid_params, "subset not strictly increasing");
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);  // duplicates collapse in the bit-matrix
    return g;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_multipartite(std::span<const int> part_sizes) {
    if (part_sizes.empty()) fail(errc::empty_parts, "no parts given");
    long long n = 0;
    for (int s : part_sizes) {
        if (s <= 0) fail(errc::invalid_params, "part sizes must be positive");
        n += s;
    }
    Graph g(static_cast<int>(n));
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int v = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of[static_cast<std::size_t>(v++)] = static_cast<int>(p);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)]) g.add_edge(a, b);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) fail(errc::too_small, "cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) fail(errc::invalid_params, "edge probability must be in [0,1]");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

/// |E(g) symdiff E(h)| / n^2 under the identity labeling. Upper-bounds the
/// permutation-minimized distance; the exact version below is brute force.
inline Ratio labeled_distance(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) fail(errc::size_mismatch, "graphs differ in vertex count");
    int n = g.vertex_count();
    long long diff = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v) != h.has_edge(u, v)) ++diff;
    return Ratio(diff, static_cast<long long>(n) * n);
}

/// min over all vertex permutations of the labeled symmetric difference,
/// divided by n^2. Factorial brute force, so n <= 9.
inline Ratio permutation_distance(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) fail(errc::size_mismatch, "graphs differ in vertex count");
    int n = g.vertex_count();
    if (n > 9) fail(errc::too_large, "permutation_distance is brute force, n must be <= 9");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long long best = static_cast<long long>(n) * n;
    do {
        long long diff = 0;
        for (int u = 0; u < n && diff < best; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v) != h.has_edge(perm[static_cast<std::size_t>(u)],
                                                   perm[static_cast<std::size_t>(v)]))
                    ++diff;
        best = std::min(best, diff);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Ratio(best, static_cast<long long>(n) * n);
}

// ---------------------------------------------------------------------------
// Surgery
// ---------------------------------------------------------------------------

namespace detail {

/// Splits |s| elements into `parts` contiguous blocks (sizes differ by <= 1,
/// larger blocks first) and returns the block sizes.
inline std::vector<int> balanced_split(int count, int parts) {
    std::vector<int> sizes(static_cast<std::size_t>(parts));
    int q = count / parts, r = count % parts;
    for (int i = 0; i < parts; ++i) sizes[static_cast<std::size_t>(i)] = q + (i < r ? 1 : 0);
    return sizes;
}

/// Core surgery: isolate S from the rest and rebuild S's interior as a
/// complete `parts`-partite graph (parts = 1 leaves S edgeless).
inline Graph surgery_core(const Graph& g, const VertexSubset& s, int parts) {
    int n = g.vertex_count();
    validate_vertex_subset(s, n);
    if (static_cast<int>(s.size()) < parts) fail(errc::subset_too_small, "subset smaller than part count");
    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (int v : s) in_s[static_cast<std::size_t>(v)] = 1;

    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!in_s[static_cast<std::size_t>(u)] && !in_s[static_cast<std::size_t>(v)] && g.has_edge(u, v))
                out.add_edge(u, v);

    std::vector<int> sizes = balanced_split(static_cast<int>(s.size()), parts);
    std::vector<int> part_of(s.size());
    std::size_t pos = 0;
    for (int p = 0; p < parts; ++p)
        for (int i = 0; i < sizes[static_cast<std::size_t>(p)]; ++i) part_of[pos++] = p;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (part_of[a] != part_of[b]) out.add_edge(s[a], s[b]);
    return out;
}

}  // namespace detail

/// Deletes every edge crossing the S / V-minus-S cut and replaces S's interior
/// by a complete `parts`-partite graph with sizes as equal as possible,
/// parts assigned in vertex order. The rest of the graph is untouched.
inline Graph apply_surgery(const Graph& g, const VertexSubset& s, int parts) {
    if (parts < 2) fail(errc::invalid_params, "surgery needs at least 2 parts");
    return detail::surgery_core(g, s, parts);
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" header, then m lines "u v" (0-based, u < v on
// output), '#' lines are comments.
// ---------------------------------------------------------------------------

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out_line) {
        while (std::getline(in, out_line)) {
            std::size_t i = out_line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;  // blank
            if (out_line[i] == '#') continue;      // comment
            return true;
        }
        return false;
    };
    if (!next_data_line(line)) fail(errc::parse_error, "missing edge-list header");
    long long n = 0, m = 0;
    {
        std::istringstream h(line);
        if (!(h >> n >> m)) fail(errc::parse_error, "bad edge-list header: " + line);
    }
    if (n <= 0 || m < 0) fail(errc::parse_error, "bad edge-list header counts");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line)) fail(errc::parse_error, "expected " + std::to_string(m) + " edges");
        std::istringstream e(line);
        long long u = 0, v = 0;
        if (!(e >> u >> v)) fail(errc::parse_error, "bad edge line: " + line);
        if (u < 0 || u >= n || v < 0 || v >= n) fail(errc::index_out_of_range, "edge endpoint out of range");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace cliquehom
