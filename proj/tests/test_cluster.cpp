#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "tda/cluster.hpp"

using namespace tda;
using namespace tdatest;

namespace {

// Ground-truth ultrametric: min over all simple paths of the max hop,
// by exhaustive path enumeration (n <= 8).
double path_oracle(const FiniteMetricSpace& s, std::size_t a, std::size_t b) {
    const std::size_t n = s.size();
    std::vector<bool> used(n, false);
    double best = s(a, b);
    auto dfs = [&](auto&& self, std::size_t at, double maxhop) -> void {
        if (at == b) {
            best = std::min(best, maxhop);
            return;
        }
        for (std::size_t next = 0; next < n; ++next) {
            if (used[next] || next == at) continue;
            used[next] = true;
            self(self, next, std::max(maxhop, s(at, next)));
            used[next] = false;
        }
    };
    used[a] = true;
    dfs(dfs, a, 0.0);
    return best;
}

Partition make_partition(std::size_t n,
                         std::vector<std::vector<std::size_t>> blocks) {
    Partition p;
    p.ground_size = n;
    p.blocks = std::move(blocks);
    p.canonicalize();
    return p;
}

}  // namespace

TEST_CASE("vr_clustering on Z reproduces the scale-dependent partitions") {
    auto Z = z_space();
    SUBCASE("delta 0.5 merges a and b only") {
        auto p = vr_clustering(Z, 0.5);
        CHECK(p.blocks == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
    }
    SUBCASE("delta 0.3 keeps singletons") {
        auto p = vr_clustering(Z, 0.3);
        CHECK(p.blocks == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    }
    SUBCASE("delta at the diameter gives one block") {
        auto p = vr_clustering(Z, 0.7);
        CHECK(p.blocks == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    }
    CHECK_THROWS(vr_clustering(Z, -0.1));
}

TEST_CASE("single-linkage dendrogram of Z merges at 0.4 then 0.6") {
    auto d = single_linkage_dendrogram(z_space());
    REQUIRE(d.merges.size() == 2);
    CHECK(d.merges[0].scale == 0.4);
    CHECK(d.merges[0].block_a == 0);
    CHECK(d.merges[0].block_b == 1);
    CHECK(d.merges[1].scale == 0.6);
    CHECK(d.merges[1].block_a == 0);
    CHECK(d.merges[1].block_b == 2);
}

TEST_CASE("dendrogram degenerate cases") {
    auto single = from_point_cloud({{0.0}}, MetricKind::L1);
    CHECK(single_linkage_dendrogram(single).merges.empty());

    auto pair = two_points(2.5);
    auto d = single_linkage_dendrogram(pair);
    REQUIRE(d.merges.size() == 1);
    CHECK(d.merges[0].scale == 2.5);
}

TEST_CASE("dendrogram partitions agree with vr_clustering at every scale") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        auto s = random_space(rng, 2 + trial % 8);
        auto dendro = single_linkage_dendrogram(s);
        CHECK(dendro.merges.size() == s.size() - 1);
        for (std::size_t i = 1; i < dendro.merges.size(); ++i)
            CHECK(dendro.merges[i - 1].scale <= dendro.merges[i].scale);

        std::vector<double> probes{0.0};
        for (const auto& m : dendro.merges) {
            probes.push_back(m.scale);
            probes.push_back(m.scale * 0.99);
            probes.push_back(m.scale * 1.01);
        }
        for (double t : probes) {
            auto from_dendro = dendro.partition_at(t);
            auto direct = vr_clustering(s, t);
            CHECK(from_dendro.blocks == direct.blocks);
        }
    }
}

TEST_CASE("subdominant ultrametric of Z equals the merge heights") {
    auto u = subdominant_ultrametric(z_space());
    CHECK(u(0, 1) == 0.4);
    CHECK(u(0, 2) == 0.6);
    CHECK(u(1, 2) == 0.6);
    for (std::size_t i = 0; i < 3; ++i) CHECK(u(i, i) == 0.0);
}

TEST_CASE("subdominant ultrametric matches the simple-path oracle") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = random_space(rng, 7);
        auto u = subdominant_ultrametric(s);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = i + 1; j < 7; ++j) {
                CHECK(u(i, j) == path_oracle(s, i, j));
                CHECK(u(i, j) == u(j, i));
            }
    }
}

TEST_CASE("subdominant ultrametric satisfies the strong triangle inequality") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = random_space(rng, 8);
        auto u = subdominant_ultrametric(s);
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b)
                for (std::size_t c = 0; c < 8; ++c)
                    CHECK(u(a, c) <= std::max(u(a, b), u(b, c)));
    }
}

TEST_CASE("subdominant ultrametric dominates every ultrametric below d") {
    std::mt19937_64 rng(24);
    const std::size_t n = 6;
    for (int trial = 0; trial < 15; ++trial) {
        auto s = random_space(rng, n);
        auto u = subdominant_ultrametric(s);

        // Build an unrelated random ultrametric from a random merge order,
        // then scale it below d; maximality says it must also sit below u.
        auto shape = random_space(rng, n);
        auto w = subdominant_ultrametric(shape);
        double c = 1e300;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) c = std::min(c, s(i, j) / w(i, j));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(c * w(i, j) <= u(i, j) + 1e-12);
    }
}

TEST_CASE("ultrametric equals the dendrogram merge scale of each pair") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = random_space(rng, 2 + trial % 9);
        auto u = subdominant_ultrametric(s);
        auto d = single_linkage_dendrogram(s);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                CHECK(u(i, j) == d.merge_scale(i, j));
    }
}

TEST_CASE("is_refinement basic cases") {
    auto singletons = make_partition(3, {{0}, {1}, {2}});
    auto pairfirst = make_partition(3, {{0, 1}, {2}});
    auto all = make_partition(3, {{0, 1, 2}});
    CHECK(is_refinement(singletons, pairfirst));
    CHECK(is_refinement(singletons, all));
    CHECK_FALSE(is_refinement(pairfirst, singletons));
    CHECK(is_refinement(all, all));
    CHECK_THROWS(is_refinement(singletons, make_partition(2, {{0}, {1}})));
}

TEST_CASE("vr_clustering is monotone in the scale") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = random_space(rng, 7);
        std::uniform_real_distribution<double> scale(0.0, 1.5);
        double a = scale(rng), b = scale(rng);
        if (a > b) std::swap(a, b);
        CHECK(is_refinement(vr_clustering(s, a), vr_clustering(s, b)));
    }
}

TEST_CASE("pullback_partition computes non-empty preimages") {
    auto q = make_partition(3, {{0}, {1}, {2}});
    SUBCASE("identity pulls back to the same partition") {
        auto p = pullback_partition(PointMap::identity(3), q);
        CHECK(p.blocks == q.blocks);
    }
    SUBCASE("constant map pulls any partition back to one block") {
        PointMap constant{4, 3, {1, 1, 1, 1}};
        auto p = pullback_partition(constant, q);
        CHECK(p.blocks == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
    }
    SUBCASE("2-to-1 surjection onto singletons gives blocks of size 2") {
        PointMap two_to_one{4, 2, {0, 1, 0, 1}};
        auto p = pullback_partition(two_to_one, make_partition(2, {{0}, {1}}));
        CHECK(p.blocks == std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}});
    }
}

TEST_CASE("vr_clustering is functorial for 1-Lipschitz maps") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 10; ++trial) {
        auto X = random_space(rng, 6);
        // Shrinking all distances by a constant factor makes the identity a
        // 1-Lipschitz map X -> Y.
        std::vector<double> shrunk = X.dist;
        for (double& v : shrunk) v *= 0.5;
        auto Y = FiniteMetricSpace::from_matrix(X.labels, shrunk);
        PointMap phi = PointMap::identity(6);

        // And any collapse map into a single point is 1-Lipschitz too.
        auto pt = from_point_cloud({{0.0}}, MetricKind::L1);
        PointMap collapse{6, 1, std::vector<std::size_t>(6, 0)};

        std::uniform_real_distribution<double> scale(0.0, 1.5);
        for (int probe = 0; probe < 5; ++probe) {
            const double delta = scale(rng);
            CHECK(is_refinement(vr_clustering(X, delta),
                                pullback_partition(phi, vr_clustering(Y, delta))));
            CHECK(is_refinement(vr_clustering(X, delta),
                                pullback_partition(collapse, vr_clustering(pt, delta))));
        }
    }
}
