#ifndef TDA_TEST_HELPERS_HPP
#define TDA_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "tda/complex.hpp"
#include "tda/metric.hpp"

namespace tdatest {

// Random points in the unit cube with the Euclidean metric; always a valid
// strict metric space (duplicate points have probability zero).
inline tda::FiniteMetricSpace random_space(std::mt19937_64& rng, std::size_t n,
                                           int dim = 2) {
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<std::vector<double>> points(n, std::vector<double>(dim));
    for (auto& p : points)
        for (auto& c : p) c = coord(rng);
    return tda::from_point_cloud(points, tda::MetricKind::L2);
}

inline tda::FiniteMetricSpace square_l1() {
    return tda::from_point_cloud({{0, 0}, {0, 1}, {1, 1}, {1, 0}},
                                 tda::MetricKind::L1);
}

inline tda::FiniteMetricSpace two_points(double r = 1.0) {
    return tda::FiniteMetricSpace::from_matrix({"a", "b"}, {0, r, r, 0});
}

// The 3-point space of the worked reduction example: d12 = 1, d23 = 2,
// d13 = 3 (a pseudometric in the triangle sense is avoided: 1 + 2 = 3 is a
// degenerate but valid triangle).
inline tda::FiniteMetricSpace three_point_line() {
    return tda::FiniteMetricSpace::from_matrix({"x1", "x2", "x3"},
                                               {0, 1, 3, 1, 0, 2, 3, 2, 0});
}

// Z = {a,b,c} with d(a,b)=0.4, d(b,c)=0.6, d(a,c)=0.7.
inline tda::FiniteMetricSpace z_space() {
    return tda::FiniteMetricSpace::from_matrix(
        {"a", "b", "c"}, {0, 0.4, 0.7, 0.4, 0, 0.6, 0.7, 0.6, 0});
}

// Relabel a space by a permutation: point i of the result is point perm[i]
// of the input.
inline tda::FiniteMetricSpace permuted(const tda::FiniteMetricSpace& s,
                                       const std::vector<std::size_t>& perm) {
    const std::size_t n = s.size();
    std::vector<std::string> labels(n);
    std::vector<double> dist(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = s.labels[perm[i]];
        for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = s(perm[i], perm[j]);
    }
    return tda::FiniteMetricSpace::from_matrix(std::move(labels), std::move(dist));
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng,
                                                   std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Random compatible reordering: permute simplices within runs of equal
// value and equal dimension. Faces always have strictly smaller dimension
// at equal value, so any such shuffle keeps the order compatible.
inline void shuffle_compatible(tda::Filtration& f, std::mt19937_64& rng) {
    std::size_t start = 0;
    while (start < f.entries.size()) {
        std::size_t end = start + 1;
        while (end < f.entries.size() &&
               f.entries[end].value == f.entries[start].value &&
               f.entries[end].simplex.dim() == f.entries[start].simplex.dim())
            ++end;
        std::shuffle(f.entries.begin() + static_cast<std::ptrdiff_t>(start),
                     f.entries.begin() + static_cast<std::ptrdiff_t>(end), rng);
        start = end;
    }
}

}  // namespace tdatest

#endif
