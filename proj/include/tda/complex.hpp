#ifndef TDA_COMPLEX_HPP
#define TDA_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tda/metric.hpp"

namespace tda {

// Vertices strictly increasing; dimension = |vertices| - 1.
struct Simplex {
    std::vector<int> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex& o) const { return vertices == o.vertices; }
    bool operator<(const Simplex& o) const { return vertices < o.vertices; }
};

struct FiltrationEntry {
    Simplex simplex;
    double value;
};

// Simplices in a compatible total order: non-decreasing in value, faces
// before cofaces at equal value. The canonical order used by the builders
// is (value, dimension, lexicographic vertex list).
struct Filtration {
    std::vector<FiltrationEntry> entries;
    int max_dim = 0;

    std::size_t size() const { return entries.size(); }
    void sort_canonical();
};

inline constexpr std::size_t kDefaultSimplexBudget = 10'000'000;

// Full Vietoris-Rips filtration up to max_dim; f(sigma) = diam(sigma).
Filtration vr_filtration(const FiniteMetricSpace& space, int max_dim,
                         std::size_t budget = kDefaultSimplexBudget);

// Intrinsic Cech filtration: f(sigma) = min_x max_{p in sigma} d(x,p),
// the witness x ranging over all of X.
Filtration cech_filtration(const FiniteMetricSpace& space, int max_dim,
                           std::size_t budget = kDefaultSimplexBudget);

// Max-min landmark selection: first landmark chosen uniformly by seed, each
// next one maximizes distance to the chosen set, ties broken by smallest
// index.
std::vector<std::size_t> maxmin_landmarks(const FiniteMetricSpace& space,
                                          std::size_t count, std::uint64_t seed);

// Weak witness filtration on the given landmarks; f(sigma) is the smallest
// epsilon at which sigma and all its faces have an epsilon-witness.
Filtration witness_filtration(const FiniteMetricSpace& space,
                              const std::vector<std::size_t>& landmarks,
                              int max_dim,
                              std::size_t budget = kDefaultSimplexBudget);

struct SpikeTrains {
    std::vector<std::vector<double>> trains;  // per cell, strictly increasing
};

// Co-firing filtration: a simplex over cells enters at the earliest time t
// at which every member cell has fired at least m spikes within
// [t - epsilon, t + epsilon]. Simplices whose condition never holds are
// omitted.
Filtration cofiring_filtration(const SpikeTrains& trains, double epsilon,
                               std::size_t m, int max_dim,
                               std::size_t budget = kDefaultSimplexBudget);

// Restriction to simplices of dimension <= n; ordering preserved.
Filtration skeleton(const Filtration& filtration, int n);

}  // namespace tda

#endif
