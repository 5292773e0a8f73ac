#ifndef TDA_PERSISTENCE_HPP
#define TDA_PERSISTENCE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "tda/complex.hpp"
#include "tda/metric.hpp"

namespace tda {

inline constexpr double kInfDeath = std::numeric_limits<double>::infinity();

// Result of left-to-right Z2 column reduction of a filtration boundary
// matrix. Row and column indices are positions in the filtration order.
struct ReducedBoundaryMatrix {
    // Column j holds the ascending row positions of its set bits.
    std::vector<std::vector<std::uint32_t>> columns;
    // low[j] = row of the lowest set bit, or -1 for a zero column.
    std::vector<std::int64_t> low;
    // paired_with[i] = j if low[j] == i (and vice versa), else -1.
    std::vector<std::int64_t> paired_with;

    bool is_zero_column(std::size_t j) const { return low[j] < 0; }
    bool is_essential(std::size_t j) const {
        return low[j] < 0 && paired_with[j] < 0;
    }
};

// Reduces the boundary matrix of the filtration. Throws if the ordering is
// not compatible (a face missing or placed after a coface, or values
// decreasing along the order).
ReducedBoundaryMatrix reduce(const Filtration& filtration);

// Index-level diagram over a spectrum of size n: pairs (b, d) with
// 1 <= b <= d <= n; d == n marks an essential class.
struct IndexPair {
    std::size_t birth;
    std::size_t death;
    bool operator==(const IndexPair& o) const {
        return birth == o.birth && death == o.death;
    }
    bool operator<(const IndexPair& o) const {
        return birth != o.birth ? birth < o.birth : death < o.death;
    }
};

struct IndexDiagram {
    std::size_t spectrum_size = 0;
    std::vector<IndexPair> pairs;

    void sort();
};

// Extracts the dimension-k index diagram from a reduced matrix. Every
// filtration value must be a spectrum member. Simplexwise pairs with equal
// values are discarded; pairs record (birth index, last-alive index).
IndexDiagram index_diagram(const Filtration& filtration,
                           const ReducedBoundaryMatrix& reduced,
                           const Spectrum& spec, int k);

// Convenience overload that reduces internally.
IndexDiagram index_diagram(const Filtration& filtration, const Spectrum& spec,
                           int k);

struct DiagramPoint {
    double birth;
    double death;  // kInfDeath for essential classes
    bool operator==(const DiagramPoint& o) const {
        return birth == o.birth && death == o.death;
    }
};

struct PersistenceDiagram {
    std::vector<DiagramPoint> points;

    void sort();  // by (birth, death), infinite deaths last per birth
    bool operator==(const PersistenceDiagram& o) const;
};

// The translation map. Geometric mode (the default elsewhere) maps
// (i, n) -> (alpha_i, inf) and (i, j), j < n -> (alpha_i, alpha_{j+1}).
// PaperLiteral keeps the atoms exactly as written: (1, n) -> (alpha_1, inf),
// (j, j) -> (alpha_j, alpha_{j+1}), (i, j) with i < j -> (alpha_i, alpha_j);
// it throws on the atom (n, n) with n > 1, whose image is undefined.
enum class TMode { Geometric, PaperLiteral };

PersistenceDiagram translate_index_diagram(const IndexDiagram& diagram,
                                           const Spectrum& spec, TMode mode);

// End-to-end Vietoris-Rips pipeline: filtration to dimension max_k + 1,
// reduction, per-dimension index diagrams, translation. Returns diagrams
// for dimensions 0 .. max_k.
std::vector<PersistenceDiagram> vr_diagram(const FiniteMetricSpace& space,
                                           int max_k,
                                           TMode mode = TMode::Geometric,
                                           std::size_t budget = kDefaultSimplexBudget);

// Dimension-0 diagram in O(n^2) from the subdominant ultrametric; no matrix
// reduction.
PersistenceDiagram zero_dim_diagram_fast(const FiniteMetricSpace& space);

// Diagrams of an arbitrary filtration (witness, co-firing, Cech) by the
// direct route: pairs (f(sigma), f(tau)) with f(sigma) < f(tau), essentials
// (f(sigma), inf).
std::vector<PersistenceDiagram> diagrams_of_filtration(const Filtration& filtration,
                                                       int max_k);

// Number of dimension-k diagram points alive at delta (birth <= delta < death).
std::size_t betti_curve(const FiniteMetricSpace& space, int k, double delta,
                        std::size_t budget = kDefaultSimplexBudget);

}  // namespace tda

#endif
