#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "tda/complex.hpp"
#include "tda/homology.hpp"
#include "tda/persistence.hpp"

using namespace tda;
using namespace tdatest;

namespace {

// The worked reduction example builds edge values from the subdominant
// ultrametric of the 3-point space: u12 = 1, u13 = u23 = 2.
Filtration three_point_ultrametric_filtration() {
    Filtration f;
    f.max_dim = 1;
    f.entries.push_back({Simplex{{0}}, 0.0});
    f.entries.push_back({Simplex{{1}}, 0.0});
    f.entries.push_back({Simplex{{2}}, 0.0});
    f.entries.push_back({Simplex{{0, 1}}, 1.0});
    f.entries.push_back({Simplex{{0, 2}}, 2.0});
    f.entries.push_back({Simplex{{1, 2}}, 2.0});
    return f;
}

PersistenceDiagram diagram(std::vector<DiagramPoint> pts) {
    PersistenceDiagram d;
    d.points = std::move(pts);
    d.sort();
    return d;
}

bool same_diagram(PersistenceDiagram a, PersistenceDiagram b) {
    a.sort();
    b.sort();
    return a == b;
}

}  // namespace

TEST_CASE("reduction of the 3-point ultrametric filtration matches the printed R") {
    auto f = three_point_ultrametric_filtration();
    auto r = reduce(f);

    // Vertex columns are zero.
    for (std::size_t j = 0; j < 3; ++j) CHECK(r.is_zero_column(j));
    // {x1,x2} keeps faces {x1},{x2}; low at row of x2.
    CHECK(r.columns[3] == std::vector<std::uint32_t>{0, 1});
    CHECK(r.low[3] == 1);
    // {x1,x3} keeps faces {x1},{x3}; low at row of x3.
    CHECK(r.columns[4] == std::vector<std::uint32_t>{0, 2});
    CHECK(r.low[4] == 2);
    // {x2,x3} reduces to zero.
    CHECK(r.columns[5].empty());
    CHECK(r.is_zero_column(5));

    CHECK(r.paired_with[1] == 3);
    CHECK(r.paired_with[2] == 4);
    CHECK(r.is_essential(0));
    CHECK(r.is_essential(5));
}

TEST_CASE("vertex-only filtrations reduce to the zero matrix") {
    Filtration f;
    for (auto v : {0, 1, 2}) f.entries.push_back({Simplex{{v}}, 0.0});
    auto r = reduce(f);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(r.is_zero_column(j));
        CHECK(r.is_essential(j));
    }
}

TEST_CASE("reduce rejects incompatible orderings") {
    SUBCASE("coface before face") {
        Filtration f;
        f.entries.push_back({Simplex{{0}}, 0.0});
        f.entries.push_back({Simplex{{0, 1}}, 0.0});
        f.entries.push_back({Simplex{{1}}, 0.0});
        CHECK_THROWS(reduce(f));
    }
    SUBCASE("decreasing values") {
        Filtration f;
        f.entries.push_back({Simplex{{0}}, 1.0});
        f.entries.push_back({Simplex{{1}}, 0.0});
        CHECK_THROWS(reduce(f));
    }
    SUBCASE("missing face") {
        Filtration f;
        f.entries.push_back({Simplex{{0}}, 0.0});
        f.entries.push_back({Simplex{{0, 1}}, 1.0});
        CHECK_THROWS(reduce(f));
    }
}

TEST_CASE("reduction pairing is reproducible and lows are unique") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 8; ++trial) {
        auto s = random_space(rng, 7);
        auto f = vr_filtration(s, 2);
        auto r1 = reduce(f);
        auto r2 = reduce(f);
        CHECK(r1.low == r2.low);

        std::set<std::int64_t> lows;
        for (std::size_t j = 0; j < r1.low.size(); ++j) {
            if (r1.low[j] < 0) continue;
            CHECK(lows.insert(r1.low[j]).second);  // injective on non-zero cols
        }
    }
}

TEST_CASE("index diagrams of the worked examples") {
    SUBCASE("2-point space, k = 0") {
        auto s = two_points();
        auto d = index_diagram(vr_filtration(s, 1), spectrum(s), 0);
        d.sort();
        CHECK(d.pairs == std::vector<IndexPair>{{1, 1}, {1, 2}});
        CHECK(d.spectrum_size == 2);
    }
    SUBCASE("square, k = 0 and k = 1") {
        auto s = square_l1();
        auto f = vr_filtration(s, 2);
        auto spec = spectrum(s);
        auto d0 = index_diagram(f, spec, 0);
        d0.sort();
        CHECK(d0.pairs ==
              std::vector<IndexPair>{{1, 1}, {1, 1}, {1, 1}, {1, 3}});
        auto d1 = index_diagram(f, spec, 1);
        CHECK(d1.pairs == std::vector<IndexPair>{{2, 2}});
    }
    SUBCASE("1-point space, k = 0") {
        auto s = from_point_cloud({{0.0}}, MetricKind::L1);
        auto d = index_diagram(vr_filtration(s, 1), spectrum(s), 0);
        REQUIRE(d.pairs.size() == 1);
        CHECK(d.pairs[0] == IndexPair{1, 1});
        CHECK(d.spectrum_size == 1);  // death == n marks the essential class
    }
}

TEST_CASE("translation map in paper-literal mode matches the worked example") {
    Spectrum A;
    A.values = {0.0, 1.0, 2.0, 3.0};  // alpha_1 .. alpha_4, n = 4
    IndexDiagram D;
    D.spectrum_size = 4;
    D.pairs = {{1, 1}, {1, 2}, {1, 4}, {2, 3}};

    auto out = translate_index_diagram(D, A, TMode::PaperLiteral);
    CHECK(same_diagram(out, diagram({{0, 1}, {0, 1}, {0, kInfDeath}, {1, 2}})));
}

TEST_CASE("translation map rejects the undefined paper-literal atom (n,n)") {
    Spectrum A;
    A.values = {0.0, 1.0};
    IndexDiagram D;
    D.spectrum_size = 2;
    D.pairs = {{2, 2}};
    CHECK_THROWS(translate_index_diagram(D, A, TMode::PaperLiteral));
    // Geometric mode maps it to (alpha_n, inf) instead.
    auto out = translate_index_diagram(D, A, TMode::Geometric);
    CHECK(same_diagram(out, diagram({{1, kInfDeath}})));
}

TEST_CASE("translation map in geometric mode reproduces the square diagrams") {
    Spectrum A;
    A.values = {0.0, 1.0, 2.0};
    IndexDiagram d0;
    d0.spectrum_size = 3;
    d0.pairs = {{1, 3}, {1, 1}, {1, 1}, {1, 1}};
    CHECK(same_diagram(
        translate_index_diagram(d0, A, TMode::Geometric),
        diagram({{0, kInfDeath}, {0, 1}, {0, 1}, {0, 1}})));

    IndexDiagram d1;
    d1.spectrum_size = 3;
    d1.pairs = {{2, 2}};
    CHECK(same_diagram(translate_index_diagram(d1, A, TMode::Geometric),
                       diagram({{1, 2}})));
}

TEST_CASE("vr_diagram worked examples") {
    SUBCASE("2-point space") {
        auto dgms = vr_diagram(two_points(), 2);
        CHECK(same_diagram(dgms[0], diagram({{0, kInfDeath}, {0, 1}})));
        CHECK(dgms[1].points.empty());
        CHECK(dgms[2].points.empty());
    }
    SUBCASE("4-point square") {
        auto dgms = vr_diagram(square_l1(), 2);
        CHECK(same_diagram(dgms[0],
                           diagram({{0, kInfDeath}, {0, 1}, {0, 1}, {0, 1}})));
        CHECK(same_diagram(dgms[1], diagram({{1, 2}})));
        CHECK(dgms[2].points.empty());
    }
}

TEST_CASE("hexagon circle class is certified by the static-homology oracle") {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 6; ++i) {
        const double a = 3.14159265358979323846 * i / 3.0;
        pts.push_back({std::cos(a), std::sin(a)});
    }
    auto hex = from_point_cloud(pts, MetricKind::L2);  // side length 1
    auto dgms = vr_diagram(hex, 1);

    REQUIRE(dgms[1].points.size() == 1);
    const auto loop = dgms[1].points[0];
    CHECK(loop.birth == doctest::Approx(1.0).epsilon(1e-12));

    for (double delta : spectrum(hex).values) {
        const std::size_t expected = (loop.birth <= delta && delta < loop.death) ? 1 : 0;
        auto complex = static_complex(vr_filtration(hex, 2), delta);
        CHECK(betti_numbers(complex, 1)[1] == expected);
    }
}

TEST_CASE("dimension 0 has |X| points, all born at 0") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 8; ++trial) {
        auto s = random_space(rng, 2 + trial);
        auto dgms = vr_diagram(s, 0);
        CHECK(dgms[0].points.size() == s.size());
        std::size_t essentials = 0;
        for (const auto& p : dgms[0].points) {
            CHECK(p.birth == 0.0);
            if (p.death == kInfDeath) ++essentials;
        }
        CHECK(essentials == 1);
    }
}

TEST_CASE("zero_dim_diagram_fast equals the reduction path") {
    SUBCASE("3-point worked example") {
        CHECK(same_diagram(zero_dim_diagram_fast(three_point_line()),
                           diagram({{0, 1}, {0, 2}, {0, kInfDeath}})));
    }
    SUBCASE("2-point space") {
        CHECK(same_diagram(zero_dim_diagram_fast(two_points()),
                           diagram({{0, kInfDeath}, {0, 1}})));
    }
    SUBCASE("random 50-point spaces") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 5; ++trial) {
            auto s = random_space(rng, 50);
            CHECK(same_diagram(zero_dim_diagram_fast(s), vr_diagram(s, 0)[0]));
        }
    }
}

TEST_CASE("betti_curve worked values") {
    auto s = square_l1();
    CHECK(betti_curve(s, 1, 1.5) == 1);
    CHECK(betti_curve(s, 0, 0.0) == 4);
    CHECK(betti_curve(s, 0, 2.0) == 1);
    CHECK(betti_curve(s, 0, 100.0) == 1);
}

TEST_CASE("diagrams_of_filtration agrees with vr_diagram on VR inputs") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 6; ++trial) {
        auto s = random_space(rng, 7);
        auto direct = diagrams_of_filtration(vr_filtration(s, 2), 1);
        auto pipeline = vr_diagram(s, 1);
        CHECK(same_diagram(direct[0], pipeline[0]));
        CHECK(same_diagram(direct[1], pipeline[1]));
    }
}

TEST_CASE("diagrams are invariant under compatible reorderings and relabeling") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 5; ++trial) {
        auto s = random_space(rng, 8);
        auto f = vr_filtration(s, 2);
        auto reference = diagrams_of_filtration(f, 1);

        auto shuffled = f;
        shuffle_compatible(shuffled, rng);
        auto reordered = diagrams_of_filtration(shuffled, 1);
        CHECK(same_diagram(reference[0], reordered[0]));
        CHECK(same_diagram(reference[1], reordered[1]));

        auto relabeled = vr_diagram(permuted(s, random_permutation(rng, 8)), 1);
        auto original = vr_diagram(s, 1);
        CHECK(same_diagram(original[0], relabeled[0]));
        CHECK(same_diagram(original[1], relabeled[1]));
    }
}
