#include "tda/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tda {

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int n) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices)
        if (s.dim() == n) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex static_complex(const Filtration& filtration, double delta) {
    SimplicialComplex complex;
    for (const auto& e : filtration.entries)
        if (e.value <= delta) complex.simplices.push_back(e.simplex);
    return complex;
}

BoundaryMatrixZ2 boundary_matrix(const SimplicialComplex& complex, int n) {
    if (n < 1)
        throw std::invalid_argument(
            "boundary_matrix requires n >= 1; the 0-boundary is the zero map");

    const auto faces = complex.simplices_of_dim(n - 1);
    const auto cells = complex.simplices_of_dim(n);
    std::map<std::vector<int>, std::size_t> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i)
        face_index[faces[i].vertices] = i;

    BoundaryMatrixZ2 matrix;
    matrix.rows = faces.size();
    matrix.cols = cells.size();
    const std::size_t words = (matrix.rows + 63) / 64;
    matrix.columns.assign(matrix.cols, std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < cells.size(); ++j) {
        std::vector<int> facet(cells[j].vertices.size() - 1);
        for (std::size_t drop = 0; drop < cells[j].vertices.size(); ++drop) {
            std::size_t p = 0;
            for (std::size_t q = 0; q < cells[j].vertices.size(); ++q)
                if (q != drop) facet[p++] = cells[j].vertices[q];
            auto it = face_index.find(facet);
            if (it == face_index.end())
                throw std::invalid_argument("complex is not closed under faces");
            matrix.columns[j][it->second / 64] ^= 1ull << (it->second % 64);
        }
    }
    return matrix;
}

std::size_t rank_z2(BoundaryMatrixZ2 matrix) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;  // columns already used as pivots
    for (std::size_t j = 0; j < matrix.cols && rank < matrix.rows; ++j) {
        auto& col = matrix.columns[j];
        // eliminate against established pivots
        for (std::size_t p : pivot_col) {
            const auto& pc = matrix.columns[p];
            std::size_t pr = 0;
            for (std::size_t w = 0; w < pc.size(); ++w)
                if (pc[w]) {
                    pr = w * 64 + static_cast<std::size_t>(__builtin_ctzll(pc[w]));
                    break;
                }
            if ((col[pr / 64] >> (pr % 64)) & 1u)
                for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= pc[w];
        }
        bool nonzero = false;
        for (auto w : col)
            if (w) {
                nonzero = true;
                break;
            }
        if (nonzero) {
            pivot_col.push_back(j);
            ++rank;
        }
    }
    return rank;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, int up_to) {
    std::vector<std::size_t> betti;
    std::vector<std::size_t> rank(static_cast<std::size_t>(up_to) + 2, 0);
    std::vector<std::size_t> count(static_cast<std::size_t>(up_to) + 1, 0);
    for (int k = 0; k <= up_to; ++k)
        count[static_cast<std::size_t>(k)] = complex.simplices_of_dim(k).size();
    for (int k = 1; k <= up_to + 1; ++k)
        rank[static_cast<std::size_t>(k)] = rank_z2(boundary_matrix(complex, k));
    for (int k = 0; k <= up_to; ++k) {
        // beta_k = |K_k| - rank d_k - rank d_{k+1}
        betti.push_back(count[static_cast<std::size_t>(k)] -
                        rank[static_cast<std::size_t>(k)] -
                        rank[static_cast<std::size_t>(k) + 1]);
    }
    return betti;
}

std::size_t connected_components(const SimplicialComplex& complex) {
    std::map<int, std::size_t> vertex_id;
    for (const auto& s : complex.simplices)
        for (int v : s.vertices)
            vertex_id.emplace(v, vertex_id.size());

    std::vector<std::size_t> parent(vertex_id.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    // higher simplices add no connectivity beyond their edges
    for (const auto& s : complex.simplices)
        for (std::size_t a = 1; a < s.vertices.size(); ++a) {
            std::size_t ra = find(vertex_id.at(s.vertices[a - 1]));
            std::size_t rb = find(vertex_id.at(s.vertices[a]));
            if (ra != rb) parent[rb] = ra;
        }
    std::size_t components = 0;
    for (std::size_t x = 0; x < parent.size(); ++x)
        if (find(x) == x) ++components;
    return components;
}

}  // namespace tda
