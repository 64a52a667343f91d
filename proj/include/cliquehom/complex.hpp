// Clique (flag) complexes: enumeration of all cliques of a graph up to a
// dimension cap, with faces indexed per dimension in sorted order.
#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "cliquehom/errors.hpp"
#include "cliquehom/graph.hpp"

namespace cliquehom {

/// A k-face: strictly increasing tuple of k+1 vertex indices.
using Face = std::vector<int>;

/// Faces grouped by dimension. A Complex built by build_clique_complex is a
/// genuine flag complex; from_faces also accepts arbitrary face lists so the
/// homology routines can run on hand-built complexes in tests and traces.
class Complex {
  public:
    static Complex from_faces(int n, std::vector<std::vector<Face>> faces_by_dim) {
        return Complex(n, std::move(faces_by_dim));
    }

    int vertex_count() const { return n_; }
    int max_dim() const { return static_cast<int>(faces_.size()) - 1; }

    const std::vector<Face>& faces(int dim) const {
        check_dim(dim);
        return faces_[static_cast<std::size_t>(dim)];
    }

    long long face_count(int k) const {
        check_dim(k);
        return static_cast<long long>(faces_[static_cast<std::size_t>(k)].size());
    }

    /// Position of f in the sorted dim-face list, or -1 if absent.
    int face_index(int dim, const Face& f) const {
        check_dim(dim);
        const auto& list = faces_[static_cast<std::size_t>(dim)];
        auto it = std::lower_bound(list.begin(), list.end(), f);
        if (it == list.end() || *it != f) return -1;
        return static_cast<int>(it - list.begin());
    }

  private:
    friend Complex build_clique_complex(const Graph&, int);

    Complex(int n, std::vector<std::vector<Face>> faces_by_dim) : n_(n), faces_(std::move(faces_by_dim)) {
        if (n <= 0) fail(errc::invalid_params, "vertex count must be positive");
        if (faces_.empty()) fail(errc::invalid_params, "need at least the dimension-0 face list");
        for (std::size_t d = 0; d < faces_.size(); ++d) {
            const auto& list = faces_[d];
            for (std::size_t i = 0; i < list.size(); ++i) {
                const Face& f = list[i];
                if (f.size() != d + 1) fail(errc::invalid_params, "face has wrong cardinality for its dimension");
                for (std::size_t j = 0; j < f.size(); ++j) {
                    if (f[j] < 0 || f[j] >= n_) fail(errc::index_out_of_range, "face vertex out of range");
                    if (j > 0 && f[j] <= f[j - 1]) fail(errc::invalid_params, "face not strictly increasing");
                }
                if (i > 0 && !(list[i - 1] < f)) fail(errc::invalid_params, "face list not sorted/unique");
            }
        }
    }

    void check_dim(int dim) const {
        if (dim < 0 || dim > max_dim()) fail(errc::dim_out_of_range, "dimension " + std::to_string(dim));
    }

    int n_;
    std::vector<std::vector<Face>> faces_;
};

namespace detail {

/// True iff v is adjacent to every vertex of f.
inline bool adjacent_to_all(const Graph& g, const Face& f, int v) {
    for (int u : f)
        if (!g.has_edge(u, v)) return false;
    return true;
}

}  // namespace detail

/// Enumerates the cliques of g as faces up to dimension max_dim. Each
/// (k+1)-clique is produced exactly once by extending a k-clique with a
/// vertex above its maximum, so lists come out sorted.
inline Complex build_clique_complex(const Graph& g, int max_dim) {
    if (max_dim < 0) fail(errc::invalid_params, "max_dim must be nonnegative");
    int n = g.vertex_count();
    std::vector<std::vector<Face>> faces(static_cast<std::size_t>(max_dim) + 1);
    faces[0].reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) faces[0].push_back({v});
    for (int d = 1; d <= max_dim; ++d) {
        const auto& prev = faces[static_cast<std::size_t>(d - 1)];
        auto& cur = faces[static_cast<std::size_t>(d)];
        for (const Face& f : prev) {
            for (int v = f.back() + 1; v < n; ++v) {
                if (!g.has_edge(f.back(), v)) continue;
                if (!detail::adjacent_to_all(g, f, v)) continue;
                Face nf = f;
                nf.push_back(v);
                cur.push_back(std::move(nf));
            }
        }
        if (cur.empty()) {
            // No faces at this dimension implies none above either.
            for (int dd = d + 1; dd <= max_dim; ++dd) faces[static_cast<std::size_t>(dd)].clear();
            break;
        }
    }
    return Complex(n, std::move(faces));
}

namespace detail {

/// Masks away bits <= v so candidate sets only keep vertices above v.
inline void mask_above(std::vector<word_t>& bits, int v) {
    int cut_word = v / kWordBits;
    for (int i = 0; i < cut_word; ++i) bits[static_cast<std::size_t>(i)] = 0;
    bits[static_cast<std::size_t>(cut_word)] &= ~((word_t{2} << (v % kWordBits)) - 1);
}

inline void count_extensions(const Graph& g, const std::vector<word_t>& cand, int depth, int target,
                             long long& acc) {
    for (int wi = 0; wi < static_cast<int>(cand.size()); ++wi) {
        word_t w = cand[static_cast<std::size_t>(wi)];
        while (w != 0) {
            int bit = std::countr_zero(w);
            w &= w - 1;
            int v = wi * kWordBits + bit;
            if (depth + 1 == target) {
                ++acc;
                continue;
            }
            std::vector<word_t> next(cand.size(), 0);
            auto row = g.row_words(v);
            for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & row[i];
            mask_above(next, v);
            count_extensions(g, next, depth + 1, target, acc);
        }
    }
}

}  // namespace detail

/// Number of unlabeled K_m subgraphs of g (= d_{m-1} of the clique complex).
inline long long count_clique_copies(const Graph& g, int m) {
    if (m < 1) fail(errc::invalid_params, "clique size must be >= 1");
    int n = g.vertex_count();
    if (m == 1) return n;
    long long acc = 0;
    int words = words_for_bits(n);
    for (int v = 0; v < n; ++v) {
        // candidates: neighbours of v strictly above v
        auto row = g.row_words(v);
        std::vector<word_t> cand(row.begin(), row.end());
        cand.resize(static_cast<std::size_t>(words));
        detail::mask_above(cand, v);
        detail::count_extensions(g, cand, 1, m, acc);
    }
    return acc;
}

/// One face per line, vertices space-separated, dimensions introduced by a
/// "dim j" line.
inline void write_face_dump(std::ostream& out, const Complex& c) {
    for (int d = 0; d <= c.max_dim(); ++d) {
        out << "dim " << d << '\n';
        for (const Face& f : c.faces(d)) {
            for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
            out << '\n';
        }
    }
}

}  // namespace cliquehom
