#ifndef TDA_CLUSTER_HPP
#define TDA_CLUSTER_HPP

#include <cstddef>
#include <vector>

#include "tda/metric.hpp"

namespace tda {

// A partition of [0, n) into disjoint non-empty blocks. Blocks are kept
// canonical: each block sorted ascending, blocks ordered by first element.
struct Partition {
    std::size_t ground_size = 0;
    std::vector<std::vector<std::size_t>> blocks;

    void canonicalize();
    std::vector<std::size_t> block_of() const;  // point -> block index
};

// Single-linkage clustering at a fixed scale: connected components of the
// graph with edges {x,x'} whenever d(x,x') <= delta.
Partition vr_clustering(const FiniteMetricSpace& space, double delta);

struct Merge {
    double scale;
    std::size_t block_a;  // smallest member of the first merged block
    std::size_t block_b;  // smallest member of the second, block_a < block_b
};

// Discrete merge events of the single-linkage dendrogram, non-decreasing in
// scale; exactly n-1 entries. The partition at any t is reconstructed on
// demand and equals vr_clustering(space, t).
struct Dendrogram {
    std::size_t leaf_count = 0;
    std::vector<Merge> merges;

    Partition partition_at(double t) const;
    // Scale at which x and y first share a block.
    double merge_scale(std::size_t x, std::size_t y) const;
};

Dendrogram single_linkage_dendrogram(const FiniteMetricSpace& space);

struct Ultrametric {
    std::size_t n = 0;
    std::vector<double> u;  // row-major n*n

    double operator()(std::size_t i, std::size_t j) const { return u[i * n + j]; }
};

// The maximal subdominant ultrametric: min over paths of the max hop,
// computed as the max edge on the minimum-spanning-tree path.
Ultrametric subdominant_ultrametric(const FiniteMetricSpace& space);

// True iff every block of p is contained in some block of q.
bool is_refinement(const Partition& p, const Partition& q);

// Non-empty preimages of q's blocks under phi.
Partition pullback_partition(const PointMap& phi, const Partition& q);

}  // namespace tda

#endif
