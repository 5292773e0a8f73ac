#include "tda/cluster.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tda {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        // smaller root wins so representatives stay minimal
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

Partition partition_from_roots(UnionFind& uf, std::size_t n) {
    Partition p;
    p.ground_size = n;
    std::vector<std::vector<std::size_t>> by_root(n);
    for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
    for (auto& block : by_root)
        if (!block.empty()) p.blocks.push_back(std::move(block));
    p.canonicalize();
    return p;
}

}  // namespace

void Partition::canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<std::size_t> Partition::block_of() const {
    std::vector<std::size_t> owner(ground_size);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t x : blocks[b]) owner[x] = b;
    return owner;
}

Partition vr_clustering(const FiniteMetricSpace& space, double delta) {
    if (delta < 0.0) throw std::invalid_argument("negative clustering scale");
    const std::size_t n = space.size();
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (space(i, j) <= delta) uf.unite(i, j);
    return partition_from_roots(uf, n);
}

Dendrogram single_linkage_dendrogram(const FiniteMetricSpace& space) {
    const std::size_t n = space.size();
    Dendrogram dendro;
    dendro.leaf_count = n;
    if (n <= 1) return dendro;

    // Prim on the dense matrix, O(n^2).
    std::vector<bool> in_tree(n, false);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> best_from(n, 0);
    struct Edge { double w; std::size_t a, b; };
    std::vector<Edge> mst;
    in_tree[0] = true;
    for (std::size_t j = 1; j < n; ++j) {
        best[j] = space(0, j);
        best_from[j] = 0;
    }
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!in_tree[j] && (pick == n || best[j] < best[pick])) pick = j;
        in_tree[pick] = true;
        mst.push_back({best[pick], best_from[pick], pick});
        for (std::size_t j = 0; j < n; ++j)
            if (!in_tree[j] && space(pick, j) < best[j]) {
                best[j] = space(pick, j);
                best_from[j] = pick;
            }
    }

    // Canonical merge listing: among remaining edges of minimal weight, emit
    // the one with the lexicographically smallest pair of block
    // representatives. The partition function is tie-insensitive; only the
    // event listing is canonicalized.
    UnionFind uf(n);
    std::vector<bool> used(mst.size(), false);
    for (std::size_t emitted = 0; emitted + 1 < n; ++emitted) {
        std::size_t pick = mst.size();
        std::size_t pick_a = 0, pick_b = 0;
        for (std::size_t e = 0; e < mst.size(); ++e) {
            if (used[e]) continue;
            std::size_t ra = uf.find(mst[e].a);
            std::size_t rb = uf.find(mst[e].b);
            if (rb < ra) std::swap(ra, rb);
            if (pick == mst.size() || mst[e].w < mst[pick].w ||
                (mst[e].w == mst[pick].w &&
                 (ra < pick_a || (ra == pick_a && rb < pick_b)))) {
                pick = e;
                pick_a = ra;
                pick_b = rb;
            }
        }
        used[pick] = true;
        dendro.merges.push_back({mst[pick].w, pick_a, pick_b});
        uf.unite(pick_a, pick_b);
    }
    return dendro;
}

Partition Dendrogram::partition_at(double t) const {
    UnionFind uf(leaf_count);
    for (const auto& m : merges)
        if (m.scale <= t) uf.unite(m.block_a, m.block_b);
    return partition_from_roots(uf, leaf_count);
}

double Dendrogram::merge_scale(std::size_t x, std::size_t y) const {
    if (x == y) return 0.0;
    UnionFind uf(leaf_count);
    for (const auto& m : merges) {
        uf.unite(m.block_a, m.block_b);
        if (uf.find(x) == uf.find(y)) return m.scale;
    }
    throw std::logic_error("points never merge; dendrogram incomplete");
}

Ultrametric subdominant_ultrametric(const FiniteMetricSpace& space) {
    const std::size_t n = space.size();
    Ultrametric um;
    um.n = n;
    um.u.assign(n * n, 0.0);

    // u(x,x') = max edge on the MST path; a Prim-like sweep where the
    // "distance" accumulated to each new vertex is the bottleneck value.
    // Equivalent O(n^2) formulation: grow the tree, and when vertex v joins
    // through edge weight w, u(v, x) = max(w, u(attach, x)) for tree x.
    std::vector<bool> in_tree(n, false);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> best_from(n, 0);
    std::vector<std::size_t> order;
    in_tree[0] = true;
    order.push_back(0);
    for (std::size_t j = 1; j < n; ++j) {
        best[j] = space(0, j);
        best_from[j] = 0;
    }
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j)
            if (!in_tree[j] && (pick == n || best[j] < best[pick])) pick = j;
        in_tree[pick] = true;
        const double w = best[pick];
        const std::size_t attach = best_from[pick];
        for (std::size_t x : order) {
            const double v = std::max(w, um.u[attach * n + x]);
            um.u[pick * n + x] = v;
            um.u[x * n + pick] = v;
        }
        order.push_back(pick);
        for (std::size_t j = 0; j < n; ++j)
            if (!in_tree[j] && space(pick, j) < best[j]) {
                best[j] = space(pick, j);
                best_from[j] = pick;
            }
    }
    return um;
}

bool is_refinement(const Partition& p, const Partition& q) {
    if (p.ground_size != q.ground_size)
        throw std::invalid_argument("partitions over different ground sets");
    const auto owner = q.block_of();
    for (const auto& block : p.blocks)
        for (std::size_t x : block)
            if (owner[x] != owner[block.front()]) return false;
    return true;
}

Partition pullback_partition(const PointMap& phi, const Partition& q) {
    if (phi.target_size != q.ground_size)
        throw std::invalid_argument("map target does not match partition ground set");
    const auto owner = q.block_of();
    std::vector<std::vector<std::size_t>> pre(q.blocks.size());
    for (std::size_t x = 0; x < phi.image.size(); ++x) {
        if (phi.image[x] >= phi.target_size)
            throw std::invalid_argument("point map image out of range");
        pre[owner[phi.image[x]]].push_back(x);
    }
    Partition p;
    p.ground_size = phi.source_size;
    for (auto& block : pre)
        if (!block.empty()) p.blocks.push_back(std::move(block));
    p.canonicalize();
    return p;
}

}  // namespace tda
