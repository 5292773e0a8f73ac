#include "tda/persistence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tda/cluster.hpp"

namespace tda {

namespace {

// Simplices with vertices below 2^16 - 1 and dimension <= 7 pack into one
// 128-bit integer (16 bits per vertex, most significant first, vertices
// stored + 1 so shorter lists never collide with longer ones). Packed keys
// make face lookups a binary search over integers instead of a tree of
// vector comparisons.
using PackedKey = unsigned __int128;

bool packable(const Filtration& f) {
    for (const auto& e : f.entries) {
        if (e.simplex.vertices.size() > 8) return false;
        for (int v : e.simplex.vertices)
            if (v < 0 || v >= 0xFFFE) return false;
    }
    return true;
}

PackedKey pack(const std::vector<int>& verts) {
    PackedKey key = 0;
    for (int v : verts) key = (key << 16) | static_cast<PackedKey>(v + 1);
    return key;
}

// Packed key of the facet obtained by dropping slot `drop` (0-based from the
// first vertex) out of `len` slots.
PackedKey drop_slot(PackedKey key, std::size_t len, std::size_t drop) {
    const unsigned low_bits = 16u * static_cast<unsigned>(len - 1 - drop);
    const PackedKey low_mask = (PackedKey{1} << low_bits) - 1;
    return ((key >> (low_bits + 16)) << low_bits) | (key & low_mask);
}

// Flat linear-probe hash table from packed simplex keys to filtration
// positions. Key 0 never occurs (vertices are stored + 1), so it doubles as
// the empty-slot sentinel.
struct PositionTable {
    std::vector<std::pair<PackedKey, std::uint32_t>> slots;
    std::size_t mask = 0;

    explicit PositionTable(std::size_t count) {
        std::size_t size = 16;
        while (size < 2 * count) size <<= 1;
        slots.assign(size, {0, 0});
        mask = size - 1;
    }
    static std::size_t hash(PackedKey key) {
        std::uint64_t h = static_cast<std::uint64_t>(key) ^
                          static_cast<std::uint64_t>(key >> 64);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return h;
    }
    void insert(PackedKey key, std::uint32_t pos) {
        std::size_t i = hash(key) & mask;
        while (slots[i].first != 0) i = (i + 1) & mask;
        slots[i] = {key, pos};
    }
    std::int64_t find(PackedKey key) const {
        std::size_t i = hash(key) & mask;
        while (slots[i].first != 0) {
            if (slots[i].first == key) return slots[i].second;
            i = (i + 1) & mask;
        }
        return -1;
    }
};

// Boundary columns in filtration positions, with compatibility validation.
// Throws on a face that is missing or placed after its coface.
void build_columns(const Filtration& filtration, ReducedBoundaryMatrix& r) {
    const std::size_t m = filtration.size();
    const bool use_packed = packable(filtration);

    PositionTable table(use_packed ? m : 0);
    std::map<std::vector<int>, std::size_t> fallback;
    if (use_packed) {
        for (std::size_t i = 0; i < m; ++i)
            table.insert(pack(filtration.entries[i].simplex.vertices),
                         static_cast<std::uint32_t>(i));
    } else {
        for (std::size_t i = 0; i < m; ++i)
            fallback[filtration.entries[i].simplex.vertices] = i;
    }

    auto position_of = [&](PackedKey key,
                           const std::vector<int>& verts) -> std::int64_t {
        if (use_packed) return table.find(key);
        auto it = fallback.find(verts);
        return it == fallback.end() ? -1 : static_cast<std::int64_t>(it->second);
    };

    std::vector<int> facet;
    for (std::size_t j = 0; j < m; ++j) {
        const auto& verts = filtration.entries[j].simplex.vertices;
        if (verts.size() < 2) continue;
        auto& col = r.columns[j];
        col.reserve(verts.size());
        const PackedKey key = use_packed ? pack(verts) : PackedKey{0};
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            std::int64_t pos;
            if (use_packed) {
                pos = position_of(drop_slot(key, verts.size(), drop), verts);
            } else {
                facet.clear();
                for (std::size_t q = 0; q < verts.size(); ++q)
                    if (q != drop) facet.push_back(verts[q]);
                pos = position_of(0, facet);
            }
            if (pos < 0 || static_cast<std::size_t>(pos) > j)
                throw std::invalid_argument(
                    "filtration order not compatible: face missing or after coface");
            col.push_back(static_cast<std::uint32_t>(pos));
        }
        std::sort(col.begin(), col.end());
    }
}

// Working column held as a lazy max-heap of row indices with multiplicity;
// entries appearing an even number of times cancel. Avoids rewriting the
// whole column on every XOR merge.
struct LazyColumn {
    std::vector<std::uint32_t> heap;

    void load(const std::vector<std::uint32_t>& col) {
        heap.assign(col.begin(), col.end());
        std::make_heap(heap.begin(), heap.end());
    }
    void push(std::uint32_t row) {
        heap.push_back(row);
        std::push_heap(heap.begin(), heap.end());
    }
    // Largest row with odd multiplicity, or -1 when the column is zero.
    std::int64_t pop_pivot() {
        while (!heap.empty()) {
            const std::uint32_t top = heap.front();
            std::size_t count = 0;
            while (!heap.empty() && heap.front() == top) {
                std::pop_heap(heap.begin(), heap.end());
                heap.pop_back();
                ++count;
            }
            if (count % 2) return top;
        }
        return -1;
    }
};

}  // namespace

ReducedBoundaryMatrix reduce(const Filtration& filtration) {
    const std::size_t m = filtration.size();

    int top_dim = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (j > 0 &&
            filtration.entries[j].value < filtration.entries[j - 1].value)
            throw std::invalid_argument(
                "filtration order not compatible: values decrease");
        top_dim = std::max(top_dim, filtration.entries[j].simplex.dim());
    }

    ReducedBoundaryMatrix r;
    r.columns.resize(m);
    r.low.assign(m, -1);
    r.paired_with.assign(m, -1);
    build_columns(filtration, r);

    // Left-to-right reduction within each dimension, top dimension first.
    // Clearing: a pivot row found in dimension d marks a (d-1)-column that
    // reduces to zero, so it is skipped wholesale. The resulting R and the
    // pairing are identical to plain left-to-right reduction.
    std::vector<char> cleared(m, 0);
    std::vector<std::int64_t> low_inverse(m, -1);
    LazyColumn work;
    for (int d = top_dim; d >= 1; --d) {
        for (std::size_t j = 0; j < m; ++j) {
            if (filtration.entries[j].simplex.dim() != d) continue;
            auto& col = r.columns[j];
            if (cleared[j]) {
                col.clear();
                col.shrink_to_fit();
                continue;
            }
            work.load(col);
            std::int64_t lo;
            while ((lo = work.pop_pivot()) >= 0) {
                const std::int64_t other = low_inverse[lo];
                if (other < 0) break;
                // XOR the pivot column in; its own low cancels the popped lo,
                // so only the remaining entries are pushed.
                const auto& pivot_col =
                    r.columns[static_cast<std::size_t>(other)];
                for (std::size_t k = 0; k + 1 < pivot_col.size(); ++k)
                    work.push(pivot_col[k]);
            }
            if (lo < 0) {
                col.clear();
                col.shrink_to_fit();
                continue;
            }
            // Fully reduced non-zero column: drain the heap into ascending order.
            col.clear();
            col.push_back(static_cast<std::uint32_t>(lo));
            std::int64_t row;
            while ((row = work.pop_pivot()) >= 0)
                col.push_back(static_cast<std::uint32_t>(row));
            std::reverse(col.begin(), col.end());

            low_inverse[lo] = static_cast<std::int64_t>(j);
            r.low[j] = lo;
            r.paired_with[j] = lo;
            r.paired_with[lo] = static_cast<std::int64_t>(j);
            cleared[lo] = 1;
        }
    }
    return r;
}

void IndexDiagram::sort() { std::sort(pairs.begin(), pairs.end()); }

IndexDiagram index_diagram(const Filtration& filtration,
                           const ReducedBoundaryMatrix& reduced,
                           const Spectrum& spec, int k) {
    IndexDiagram diagram;
    diagram.spectrum_size = spec.size();
    const std::size_t n = spec.size();
    for (std::size_t j = 0; j < filtration.size(); ++j) {
        const auto& entry = filtration.entries[j];
        if (entry.simplex.dim() != k) continue;
        if (!reduced.is_zero_column(j)) continue;  // k-simplex that kills; not a creator
        const std::size_t birth = spec.index_of(entry.value);
        if (reduced.paired_with[j] < 0) {
            diagram.pairs.push_back({birth, n});  // essential
            continue;
        }
        const auto& killer =
            filtration.entries[static_cast<std::size_t>(reduced.paired_with[j])];
        if (killer.value == entry.value) continue;  // never sampled
        const std::size_t death = spec.index_of(killer.value);
        diagram.pairs.push_back({birth, death - 1});  // closed-interval convention
    }
    diagram.sort();
    return diagram;
}

IndexDiagram index_diagram(const Filtration& filtration, const Spectrum& spec,
                           int k) {
    return index_diagram(filtration, reduce(filtration), spec, k);
}

void PersistenceDiagram::sort() {
    std::sort(points.begin(), points.end(),
              [](const DiagramPoint& a, const DiagramPoint& b) {
                  if (a.birth != b.birth) return a.birth < b.birth;
                  return a.death < b.death;
              });
}

bool PersistenceDiagram::operator==(const PersistenceDiagram& o) const {
    PersistenceDiagram a = *this, b = o;
    a.sort();
    b.sort();
    return a.points == b.points;
}

PersistenceDiagram translate_index_diagram(const IndexDiagram& diagram,
                                           const Spectrum& spec, TMode mode) {
    const std::size_t n = spec.size();
    if (diagram.spectrum_size != n)
        throw std::invalid_argument("index diagram and spectrum sizes differ");
    auto alpha = [&](std::size_t i) { return spec.values[i - 1]; };

    PersistenceDiagram out;
    for (const auto& [b, d] : diagram.pairs) {
        if (b < 1 || d < b || d > n)
            throw std::invalid_argument("index pair out of range");
        if (mode == TMode::Geometric) {
            if (d == n) out.points.push_back({alpha(b), kInfDeath});
            else out.points.push_back({alpha(b), alpha(d + 1)});
        } else {
            if (b == 1 && d == n) out.points.push_back({alpha(1), kInfDeath});
            else if (b == d) {
                if (d == n)
                    throw std::invalid_argument(
                        "paper-literal atom (n,n) has no defined image");
                out.points.push_back({alpha(b), alpha(d + 1)});
            } else {
                out.points.push_back({alpha(b), alpha(d)});
            }
        }
    }
    out.sort();
    return out;
}

std::vector<PersistenceDiagram> vr_diagram(const FiniteMetricSpace& space,
                                           int max_k, TMode mode,
                                           std::size_t budget) {
    if (max_k < 0) throw std::invalid_argument("negative homology dimension");
    const Filtration filtration = vr_filtration(space, max_k + 1, budget);
    const Spectrum spec = spectrum(space);
    const ReducedBoundaryMatrix reduced = reduce(filtration);
    std::vector<PersistenceDiagram> diagrams;
    for (int k = 0; k <= max_k; ++k)
        diagrams.push_back(translate_index_diagram(
            index_diagram(filtration, reduced, spec, k), spec, mode));
    return diagrams;
}

PersistenceDiagram zero_dim_diagram_fast(const FiniteMetricSpace& space) {
    const Ultrametric u = subdominant_ultrametric(space);
    PersistenceDiagram diagram;
    diagram.points.push_back({0.0, kInfDeath});
    for (std::size_t i = 1; i < space.size(); ++i) {
        double death = u(0, i);
        for (std::size_t k = 1; k < i; ++k) death = std::min(death, u(k, i));
        diagram.points.push_back({0.0, death});
    }
    diagram.sort();
    return diagram;
}

std::vector<PersistenceDiagram> diagrams_of_filtration(const Filtration& filtration,
                                                       int max_k) {
    const ReducedBoundaryMatrix reduced = reduce(filtration);
    std::vector<PersistenceDiagram> diagrams(static_cast<std::size_t>(max_k) + 1);
    for (std::size_t j = 0; j < filtration.size(); ++j) {
        const auto& entry = filtration.entries[j];
        const int k = entry.simplex.dim();
        if (k > max_k) continue;
        if (!reduced.is_zero_column(j)) continue;
        if (reduced.paired_with[j] < 0) {
            diagrams[static_cast<std::size_t>(k)].points.push_back(
                {entry.value, kInfDeath});
            continue;
        }
        const auto& killer =
            filtration.entries[static_cast<std::size_t>(reduced.paired_with[j])];
        if (killer.value > entry.value)
            diagrams[static_cast<std::size_t>(k)].points.push_back(
                {entry.value, killer.value});
    }
    for (auto& d : diagrams) d.sort();
    return diagrams;
}

std::size_t betti_curve(const FiniteMetricSpace& space, int k, double delta,
                        std::size_t budget) {
    const auto diagrams = vr_diagram(space, k, TMode::Geometric, budget);
    std::size_t alive = 0;
    for (const auto& p : diagrams[static_cast<std::size_t>(k)].points)
        if (p.birth <= delta && delta < p.death) ++alive;
    return alive;
}

}  // namespace tda
