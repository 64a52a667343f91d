#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "cliquehom/complex.hpp"
#include "cliquehom/graph.hpp"
#include "cliquehom/homology.hpp"
#include "cliquehom/rng.hpp"
#include "cliquehom/testers.hpp"
#include "cliquehom/util.hpp"

using namespace cliquehom;

namespace {

Graph k33() {
    std::vector<int> parts{3, 3};
    return complete_multipartite(parts);
}

TesterParams quick_params(std::uint64_t seed) {
    TesterParams p;
    p.epsilon = 0.1;
    p.epsilon1 = 0.03;
    p.sample_size = 12;
    p.trials = 10;
    p.seed = seed;
    return p;
}

}  // namespace

TEST(SampleInduced, CompleteRestrictsToComplete) {
    Rng rng(1);
    Graph s = sample_induced(complete(10), 4, rng);
    EXPECT_EQ(s, complete(4));
}

TEST(SampleInduced, EmptyRestrictsToEmpty) {
    Rng rng(2);
    EXPECT_EQ(sample_induced(Graph(10), 5, rng).edge_count(), 0);
}

TEST(SampleInduced, FullSampleIsTheGraph) {
    Rng rng(3);
    EXPECT_EQ(sample_induced(k33(), 6, rng), k33());
}

TEST(SampleInduced, TooLargeThrows) {
    Rng rng(4);
    try {
        sample_induced(Graph(5), 6, rng);
        FAIL() << "expected sample_too_large";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::sample_too_large);
    }
}

TEST(SampleVertices, SortedDistinctInRange) {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto v = sample_vertices(20, 7, rng);
        EXPECT_EQ(v.size(), 7u);
        std::set<int> uniq(v.begin(), v.end());
        EXPECT_EQ(uniq.size(), 7u);
        EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
        EXPECT_GE(v.front(), 0);
        EXPECT_LT(v.back(), 20);
    }
}

TEST(CliqueFreeTester, QueryAccountingExact) {
    Graph g = erdos_renyi(30, 0.5, 6);
    TesterParams p = quick_params(17);
    TestReport r = tolerant_clique_free_test(g, 3, p);
    EXPECT_EQ(r.queries_used, static_cast<std::uint64_t>(p.trials) * binom(p.sample_size, 2));
}

TEST(CliqueFreeTester, QueriesStayInsideSampledSets) {
    // record every queried pair; each trial must touch exactly the C(q,2)
    // pairs of one q-subset
    Graph g = erdos_renyi(25, 0.5, 7);
    TesterParams p = quick_params(23);
    std::vector<std::pair<int, int>> log;
    TestReport r = tolerant_clique_free_test_with(
        [&](int u, int v) {
            log.emplace_back(u, v);
            return g.has_edge(u, v);
        },
        g.vertex_count(), 3, p);
    std::size_t per_trial = binom(p.sample_size, 2);
    ASSERT_EQ(log.size(), static_cast<std::size_t>(p.trials) * per_trial);
    for (int t = 0; t < p.trials; ++t) {
        std::set<int> verts;
        std::set<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < per_trial; ++i) {
            auto [u, v] = log[static_cast<std::size_t>(t) * per_trial + i];
            verts.insert(u);
            verts.insert(v);
            pairs.emplace(std::min(u, v), std::max(u, v));
        }
        EXPECT_EQ(verts.size(), static_cast<std::size_t>(p.sample_size));
        EXPECT_EQ(pairs.size(), per_trial);  // all pairs of the sampled set, each once
    }
    EXPECT_EQ(r.queries_used, log.size());
}

TEST(CliqueFreeTester, OneSidedSoundnessOnFreeInputs) {
    // bipartite graphs have no triangles, so the observed density is
    // identically zero and every run accepts
    std::vector<int> parts{10, 10};
    Graph g = complete_multipartite(parts);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        TestReport r = tolerant_clique_free_test(g, 3, quick_params(seed));
        EXPECT_TRUE(r.accept);
        EXPECT_EQ(r.observed_density_ratio, Ratio(0, 1));
    }
}

TEST(CliqueFreeTester, RejectsCompleteGraph) {
    TesterParams p = quick_params(5);
    p.density_threshold = 0.9;
    TestReport r = tolerant_clique_free_test(complete(20), 3, p);
    EXPECT_FALSE(r.accept);
    EXPECT_EQ(r.observed_density_ratio, Ratio(1, 1));
}

TEST(CliqueFreeTester, DeterministicAndJobInvariant) {
    Graph g = erdos_renyi(40, 0.6, 11);
    TesterParams p = quick_params(99);
    TestReport a = tolerant_clique_free_test(g, 3, p);
    TestReport b = tolerant_clique_free_test(g, 3, p);
    EXPECT_EQ(a.accept, b.accept);
    EXPECT_EQ(a.observed_density_ratio, b.observed_density_ratio);
    EXPECT_EQ(a.queries_used, b.queries_used);
    p.jobs = 4;
    TestReport c = tolerant_clique_free_test(g, 3, p);
    EXPECT_EQ(a.observed_density_ratio, c.observed_density_ratio);
    EXPECT_EQ(a.accept, c.accept);
}

TEST(CliqueFreeTester, ThresholdMonotoneAndTieAccepts) {
    Graph g = erdos_renyi(30, 0.7, 13);
    TesterParams p = quick_params(31);
    bool prev_accept = false;
    for (double thr : {0.0, 0.1, 0.3, 0.5, 0.8, 1.0}) {
        p.density_threshold = thr;
        TestReport r = tolerant_clique_free_test(g, 3, p);
        if (prev_accept) EXPECT_TRUE(r.accept);  // raising the threshold never flips to reject
        prev_accept = r.accept;
        if (thr == 1.0) EXPECT_TRUE(r.accept);
        // tie accepts
        p.density_threshold = r.observed_density;
        EXPECT_TRUE(tolerant_clique_free_test(g, 3, p).accept);
        p.density_threshold = thr;
    }
}

TEST(CliqueFreeTester, InvalidParams) {
    auto expect_invalid = [](TesterParams p, int m, int n = 30) {
        try {
            tolerant_clique_free_test(erdos_renyi(n, 0.5, 1), m, p);
            FAIL() << "expected invalid_params";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), errc::invalid_params);
        }
    };
    TesterParams p = quick_params(1);
    p.epsilon1 = 0.2;  // epsilon1 >= epsilon
    expect_invalid(p, 3);
    p = quick_params(1);
    p.trials = 0;
    expect_invalid(p, 3);
    p = quick_params(1);
    p.sample_size = 2;  // below clique size
    expect_invalid(p, 3);
    p = quick_params(1);
    p.density_threshold = 1.5;
    expect_invalid(p, 3);
    expect_invalid(quick_params(1), 1);
}

TEST(DeltaBound, SpotValues) {
    DeltaBound b0 = delta_bound(0.02, 0);
    EXPECT_FALSE(b0.tower_suppressed);
    EXPECT_EQ(b0.value, 0.2);  // sqrt(2 * 0.02) is exactly representable

    DeltaBound b1 = delta_bound(0.09, 1);
    EXPECT_FALSE(b1.tower_suppressed);
    EXPECT_EQ(b1.value, 0.03);

    DeltaBound b2 = delta_bound(0.5, 2);
    EXPECT_TRUE(b2.tower_suppressed);
    EXPECT_EQ(b2.tower_height, 1280u);  // ceil(5 * 4^4 * log2(2))
}

TEST(DeltaBound, RepresentableTowerCase) {
    // epsilon near 1 keeps the tower height small: 5*256*log2(1/0.999) < 2
    DeltaBound b = delta_bound(0.999, 2);
    EXPECT_FALSE(b.tower_suppressed);
    EXPECT_EQ(b.tower_height, 2u);
    EXPECT_EQ(b.value, 0.25);  // 1 / tower(2)
}

TEST(DeltaBound, RejectsBadEpsilon) {
    for (double eps : {0.0, 1.0, -0.5}) {
        try {
            delta_bound(eps, 0);
            FAIL() << "expected invalid_params";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), errc::invalid_params);
        }
    }
}

TEST(FaceBoundChain, Values) {
    FaceBudget fb = k_face_bound_chain(60, 1, 0.1);
    EXPECT_FALSE(fb.saturated);
    EXPECT_EQ(fb.value, 3600u);  // floor(0.1 * 60^3 / 3!)
    EXPECT_EQ(k_face_bound_chain(37, 2, 0.0).value, 0u);
    FaceBudget big = k_face_bound_chain(100000, 3, 0.9);
    EXPECT_TRUE(big.saturated);
}

TEST(FaceBoundChain, CrossCheckAgainstExactRanks) {
    // whenever r_{k+1} <= delta * d_k, the number of K_{k+2} copies obeys the
    // chain d_{k+1} <= delta/(k+2) * n * d_k <= delta * n^{k+2} / (k+2)!
    Rng rng(71);
    int checked = 0, k = 1;
    while (checked < 50) {
        int n = 6 + static_cast<int>(rng.below(5));
        Graph g = erdos_renyi(n, 0.25 + 0.05 * rng.below(5), rng.next());
        Complex c = build_clique_complex(g, k + 1);
        long long d_k = c.face_count(k);
        if (d_k == 0) continue;
        long long r_k1 = simplicial_rank(c, k + 1);
        for (double delta : {0.2, 0.5}) {
            if (static_cast<double>(r_k1) > delta * static_cast<double>(d_k)) continue;
            long long copies = count_clique_copies(g, k + 2);
            EXPECT_LE(static_cast<double>(copies), delta / (k + 2) * n * static_cast<double>(d_k) + 1e-9);
            EXPECT_LE(static_cast<unsigned long long>(copies), k_face_bound_chain(n, k, delta).value);
            ++checked;
        }
    }
}

TEST(BettiTest, AcceptsTriangleFreeWitness) {
    std::vector<int> parts{30, 30};
    Graph g = complete_multipartite(parts);
    TesterParams p;
    p.seed = 7;
    TestReport r = betti_test(g, 1, 0.1, 0.01, p);
    EXPECT_TRUE(r.accept);
    EXPECT_TRUE(r.is_betti_test);
    EXPECT_EQ(r.clique_size, 3);
    EXPECT_EQ(r.guarantee_regime, "theorem");  // 0.01 <= 0.1/3 and eps1 < eps2
    EXPECT_EQ(r.observed_density_ratio, Ratio(0, 1));
    EXPECT_DOUBLE_EQ(r.params.epsilon, 0.05);   // split 0.5
    EXPECT_DOUBLE_EQ(r.params.epsilon1, 0.03);  // 3 delta
}

TEST(BettiTest, AcceptsEmptyGraphAtKZero) {
    TesterParams p;
    p.seed = 3;
    p.sample_size = 10;
    TestReport r = betti_test(Graph(40), 0, 0.2, 0.1, p);
    EXPECT_TRUE(r.accept);
    EXPECT_EQ(r.clique_size, 2);
    EXPECT_EQ(r.guarantee_regime, "theorem");
    EXPECT_DOUBLE_EQ(r.params.epsilon1, 1.1 * 0.1 * 0.1 / 2.0);
}

TEST(BettiTest, RejectsDenseGraphUsually) {
    int rejects = 0;
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = erdos_renyi(60, 0.9, mix_seed(1234, seed));
        TesterParams p;
        p.seed = seed;
        if (!betti_test(g, 1, 0.1, 0.01, p).accept) ++rejects;
    }
    EXPECT_GE(rejects, 10);  // 2/3 of 15
}

TEST(BettiTest, RegimeStamps) {
    Graph g = k33();
    TesterParams p;
    p.seed = 1;
    p.sample_size = 6;
    // delta above the k=1 bound epsilon/3
    EXPECT_EQ(betti_test(g, 1, 0.1, 0.05, p).guarantee_regime, "heuristic");
    // k = 2: tower-suppressed for ordinary epsilon
    Graph h = erdos_renyi(20, 0.3, 2);
    TesterParams p2;
    p2.seed = 2;
    p2.sample_size = 10;
    EXPECT_EQ(betti_test(h, 2, 0.5, 0.01, p2).guarantee_regime, "heuristic");
    // k = 2 with epsilon near 1: tower height 2, bound 1/4 representable
    EXPECT_EQ(betti_test(h, 2, 0.999, 0.2, p2).guarantee_regime, "theorem");
}

TEST(BettiTest, InvalidParams) {
    TesterParams p;
    p.seed = 1;
    for (auto [eps, delta] : std::vector<std::pair<double, double>>{{0.0, 0.1}, {0.1, 0.0}, {0.1, 1.0}, {-1, 0.1}}) {
        try {
            betti_test(Graph(10), 1, eps, delta, p);
            FAIL() << "expected invalid_params";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), errc::invalid_params);
        }
    }
}

TEST(BettiTest, ReductionConsistencyOnSmallCorpus) {
    // exact beta_k >= (1-delta) d_k must imply exact r_{k+1} <= delta d_k
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = erdos_renyi(6 + static_cast<int>(rng.below(5)), 0.2 + 0.1 * rng.below(4), rng.next());
        Complex c = build_clique_complex(g, 3);
        for (int k = 0; k <= 2; ++k) {
            RankProfile p = rank_profile(c, k);
            for (double delta : {0.1, 0.3}) {
                if (static_cast<double>(p.beta_k) >= (1.0 - delta) * static_cast<double>(p.d_k))
                    EXPECT_LE(static_cast<double>(p.r_k_plus_1), delta * static_cast<double>(p.d_k));
            }
        }
    }
}
