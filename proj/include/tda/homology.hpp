#ifndef TDA_HOMOLOGY_HPP
#define TDA_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tda/complex.hpp"

namespace tda {

// A static simplicial complex: simplices closed under taking faces.
struct SimplicialComplex {
    std::vector<Simplex> simplices;

    std::vector<Simplex> simplices_of_dim(int n) const;
};

// Sublevel complex of a filtration at scale delta.
SimplicialComplex static_complex(const Filtration& filtration, double delta);

// The Z2 boundary matrix from n-simplices to (n-1)-simplices, columns
// bit-packed into 64-bit words.
struct BoundaryMatrixZ2 {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::uint64_t>> columns;

    bool get(std::size_t row, std::size_t col) const {
        return (columns[col][row / 64] >> (row % 64)) & 1u;
    }
};

// n >= 1; throws for n = 0 (the zero map is represented by an empty matrix
// and carries no information).
BoundaryMatrixZ2 boundary_matrix(const SimplicialComplex& complex, int n);

std::size_t rank_z2(BoundaryMatrixZ2 matrix);

// Betti numbers beta_0 .. beta_up_to via plain Gaussian elimination over Z2.
// This is the ground-truth oracle, not a fast path.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, int up_to);

// Components under shared-vertex chains, via union-find over edges.
std::size_t connected_components(const SimplicialComplex& complex);

}  // namespace tda

#endif
