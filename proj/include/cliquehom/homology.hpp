// GF(2) boundary matrices, simplicial-matroid ranks, Betti numbers, and the
// incremental face-insertion trace.
//
// Conventions: coefficients are Z_2 throughout (no orientations), and r_0 is
// 0, which makes beta_k = d_k - r_k - r_{k+1} hold at k = 0 as well.
#pragma once

#include <atomic>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cliquehom/complex.hpp"
#include "cliquehom/errors.hpp"
#include "cliquehom/gf2.hpp"
#include "cliquehom/rng.hpp"

namespace cliquehom {

namespace detail {
inline std::atomic<std::uint64_t>& budget_ref() {
    static std::atomic<std::uint64_t> budget{2ull * (1ull << 30)};  // 2 GiB
    return budget;
}
}  // namespace detail

/// Boundary matrices larger than this many bytes abort with errc::memory_budget
/// instead of thrashing; d_k grows like C(n, k+1), so fail fast.
inline std::uint64_t matrix_memory_budget() { return detail::budget_ref().load(); }
inline void set_matrix_memory_budget(std::uint64_t bytes) { detail::budget_ref().store(bytes); }

/// Boundary vector of a k-face: one bit per (k-1)-face it contains.
/// For k = 0 there are no (-1)-faces and the vector is empty (the zero map).
inline Gf2Vector boundary_vector(const Complex& c, int k, const Face& face) {
    if (k == 0) return Gf2Vector(0);
    Gf2Vector v(static_cast<int>(c.face_count(k - 1)));
    Face sub(face.size() - 1);
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < face.size(); ++i)
            if (i != drop) sub[w++] = face[i];
        int idx = c.face_index(k - 1, sub);
        if (idx < 0) fail(errc::unknown_face, "facet missing from complex (not downward closed)");
        v.set(idx);
    }
    return v;
}

/// d_k x d_{k-1} matrix whose row for face S has ones exactly at S's facets.
inline Gf2Matrix boundary_matrix(const Complex& c, int k) {
    if (k < 1 || k > c.max_dim()) fail(errc::dim_out_of_range, "boundary matrix needs 1 <= k <= max_dim");
    long long rows = c.face_count(k);
    long long cols = c.face_count(k - 1);
    std::uint64_t bytes =
        static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(words_for_bits(cols)) * sizeof(word_t);
    if (bytes > matrix_memory_budget())
        fail(errc::memory_budget, "boundary matrix would take " + std::to_string(bytes) + " bytes (budget " +
                                      std::to_string(matrix_memory_budget()) + ")");
    Gf2Matrix m(static_cast<int>(rows), static_cast<int>(cols));
    const auto& faces = c.faces(k);
    Face sub;
    for (long long r = 0; r < rows; ++r) {
        const Face& face = faces[static_cast<std::size_t>(r)];
        sub.assign(face.size() - 1, 0);
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < face.size(); ++i)
                if (i != drop) sub[w++] = face[i];
            int idx = c.face_index(k - 1, sub);
            if (idx < 0) fail(errc::unknown_face, "facet missing from complex (not downward closed)");
            m.set(static_cast<int>(r), idx);
        }
    }
    return m;
}

/// Rank r_k of the k-simplicial matroid. r_0 = 0 by convention; one past the
/// top dimension there are no faces and the rank is 0.
inline long long simplicial_rank(const Complex& c, int k) {
    if (k < 0 || k > c.max_dim() + 1) fail(errc::dim_out_of_range, "rank index out of range");
    if (k == 0) return 0;
    if (k == c.max_dim() + 1) return 0;
    if (c.face_count(k) == 0) return 0;
    return rank_gf2(boundary_matrix(c, k));
}

/// beta_k = d_k - r_k - r_{k+1}. Needs the complex built to max_dim >= k+1 so
/// that r_{k+1} sees every (k+1)-face.
inline long long betti(const Complex& c, int k) {
    if (k < 0) fail(errc::dim_out_of_range, "negative dimension");
    if (c.max_dim() < k + 1)
        fail(errc::insufficient_dim, "betti(k=" + std::to_string(k) + ") needs max_dim >= " + std::to_string(k + 1));
    return c.face_count(k) - simplicial_rank(c, k) - simplicial_rank(c, k + 1);
}

/// Same number by the homology definition: dim ker(delta_k) - dim im(delta_{k+1}),
/// with both terms obtained from the companion-style nullspace elimination.
/// Independent of the incremental-eliminator path used by betti().
inline long long betti_direct(const Complex& c, int k) {
    if (k < 0) fail(errc::dim_out_of_range, "negative dimension");
    if (c.max_dim() < k + 1)
        fail(errc::insufficient_dim, "betti_direct(k=" + std::to_string(k) + ") needs max_dim >= " + std::to_string(k + 1));
    long long d_k = c.face_count(k);
    long long kernel_dim = (k == 0 || d_k == 0) ? d_k : left_nullspace_gf2(boundary_matrix(c, k)).nullity;
    long long d_k1 = c.face_count(k + 1);
    long long image_dim = (d_k1 == 0) ? 0 : d_k1 - left_nullspace_gf2(boundary_matrix(c, k + 1)).nullity;
    return kernel_dim - image_dim;
}

/// True iff the boundary vectors of the given k-faces are linearly
/// independent over GF(2) (duplicates count as dependent).
inline bool is_independent(const Complex& c, std::span<const Face> faces, int k) {
    if (k < 0 || k > c.max_dim()) fail(errc::dim_out_of_range, "dimension out of range");
    for (const Face& f : faces)
        if (c.face_index(k, f) < 0) fail(errc::unknown_face, "face not in the complex");
    Gf2Eliminator elim(k == 0 ? 0 : static_cast<int>(c.face_count(k - 1)));
    for (const Face& f : faces)
        if (!elim.insert(boundary_vector(c, k, f))) return false;
    return true;
}

struct RankProfile {
    int k = 0;
    long long d_k = 0;
    long long r_k = 0;
    long long r_k_plus_1 = 0;
    long long beta_k = 0;
};

inline RankProfile rank_profile(const Complex& c, int k) {
    if (k < 0) fail(errc::dim_out_of_range, "negative dimension");
    if (c.max_dim() < k + 1)
        fail(errc::insufficient_dim, "rank_profile(k=" + std::to_string(k) + ") needs max_dim >= " + std::to_string(k + 1));
    RankProfile p;
    p.k = k;
    p.d_k = c.face_count(k);
    p.r_k = simplicial_rank(c, k);
    p.r_k_plus_1 = simplicial_rank(c, k + 1);
    p.beta_k = p.d_k - p.r_k - p.r_k_plus_1;
    return p;
}

/// One step of the incremental trace: a face was added, beta_k moved by
/// delta_beta, and rank_grew says whether the face's boundary vector was
/// independent of those added before it.
struct TraceStep {
    int dim = 0;
    Face face;
    int delta_beta = 0;
    bool rank_grew = false;
    long long beta_after = 0;
};

/// Rebuilds beta_k one face at a time. Starting point is a greedy basis of
/// k-faces (all lower faces present, no higher ones), where beta_k = 0. The
/// remaining k-faces are then inserted one by one — each is dependent on the
/// basis, so each step opens exactly one new hole — followed by the
/// (k+1)-faces, each closing a hole iff its boundary vector is independent
/// of the previously added ones. Every delta is recomputed from an actual
/// single-row rank update, never assumed. The endpoint equals betti(c, k)
/// for every insertion order.
inline std::vector<TraceStep> incremental_trace(const Complex& c, int k, std::uint64_t order_seed) {
    if (k < 0) fail(errc::dim_out_of_range, "negative dimension");
    if (c.max_dim() < k + 1)
        fail(errc::insufficient_dim, "trace(k=" + std::to_string(k) + ") needs max_dim >= " + std::to_string(k + 1));

    const auto& k_faces = c.faces(k);
    const auto& k1_faces = c.faces(k + 1);

    std::vector<int> order_k(k_faces.size());
    std::iota(order_k.begin(), order_k.end(), 0);
    Rng rng_k = Rng::child(order_seed, 0);
    rng_k.shuffle(order_k);

    std::vector<int> order_k1(k1_faces.size());
    std::iota(order_k1.begin(), order_k1.end(), 0);
    Rng rng_k1 = Rng::child(order_seed, 1);
    rng_k1.shuffle(order_k1);

    std::vector<TraceStep> steps;
    steps.reserve(k_faces.size() + k1_faces.size());

    Gf2Eliminator elim_k(k == 0 ? 0 : static_cast<int>(c.face_count(k - 1)));
    std::vector<int> deferred;
    for (int i : order_k)
        if (!elim_k.insert(boundary_vector(c, k, k_faces[static_cast<std::size_t>(i)]))) deferred.push_back(i);

    long long beta = 0;  // the greedy basis has d_k = r_k and no (k+1)-faces
    for (int i : deferred) {
        bool grew = elim_k.insert(boundary_vector(c, k, k_faces[static_cast<std::size_t>(i)]));
        int delta = 1 - (grew ? 1 : 0);
        beta += delta;
        steps.push_back({k, k_faces[static_cast<std::size_t>(i)], delta, grew, beta});
    }

    Gf2Eliminator elim_k1(static_cast<int>(c.face_count(k)));
    for (int i : order_k1) {
        bool grew = elim_k1.insert(boundary_vector(c, k + 1, k1_faces[static_cast<std::size_t>(i)]));
        int delta = grew ? -1 : 0;
        beta += delta;
        steps.push_back({k + 1, k1_faces[static_cast<std::size_t>(i)], delta, grew, beta});
    }
    return steps;
}

}  // namespace cliquehom
