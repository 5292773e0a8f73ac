#include "tda/complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

namespace tda {

void Filtration::sort_canonical() {
    std::sort(entries.begin(), entries.end(),
              [](const FiltrationEntry& a, const FiltrationEntry& b) {
                  if (a.value != b.value) return a.value < b.value;
                  if (a.simplex.dim() != b.simplex.dim())
                      return a.simplex.dim() < b.simplex.dim();
                  return a.simplex.vertices < b.simplex.vertices;
              });
}

namespace {

// C(n, k) saturating at cap + 1 to keep the budget check overflow-free.
std::size_t binom_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    unsigned long long r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > cap) return cap + 1;
    }
    return static_cast<std::size_t>(r);
}

void check_budget(std::size_t n, int max_dim, std::size_t budget) {
    std::size_t total = 0;
    for (int d = 0; d <= max_dim; ++d) {
        total += binom_capped(n, static_cast<std::size_t>(d) + 1, budget);
        if (total > budget)
            throw std::runtime_error(
                "simplex budget exceeded; try a smaller max dimension");
    }
}

}  // namespace

Filtration vr_filtration(const FiniteMetricSpace& space, int max_dim,
                         std::size_t budget) {
    if (max_dim < 0) throw std::invalid_argument("negative max dimension");
    const std::size_t n = space.size();
    check_budget(n, max_dim, budget);

    Filtration f;
    f.max_dim = max_dim;
    std::size_t total = 0;
    for (int d = 0; d <= max_dim; ++d)
        total += binom_capped(n, static_cast<std::size_t>(d) + 1, budget);
    f.entries.reserve(total);

    // Incremental expansion: appending vertex v to sigma raises the value by
    // at most max_{u in sigma} d(u, v), so diameters never get recomputed.
    std::vector<int> stack;
    auto expand = [&](auto&& self, double value) -> void {
        f.entries.push_back({Simplex{stack}, value});
        if (static_cast<int>(stack.size()) - 1 >= max_dim) return;
        for (int v = stack.back() + 1; v < static_cast<int>(n); ++v) {
            double ext = value;
            for (int u : stack)
                ext = std::max(ext, space(static_cast<std::size_t>(u),
                                          static_cast<std::size_t>(v)));
            stack.push_back(v);
            self(self, ext);
            stack.pop_back();
        }
    };
    for (int v = 0; v < static_cast<int>(n); ++v) {
        stack.push_back(v);
        expand(expand, 0.0);
        stack.pop_back();
    }
    f.sort_canonical();
    return f;
}

Filtration cech_filtration(const FiniteMetricSpace& space, int max_dim,
                           std::size_t budget) {
    if (max_dim < 0) throw std::invalid_argument("negative max dimension");
    const std::size_t n = space.size();
    check_budget(n, max_dim, budget);

    Filtration f;
    f.max_dim = max_dim;
    std::vector<int> stack;
    auto value_of = [&](const std::vector<int>& sigma) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t x = 0; x < n; ++x) {
            double radius = 0.0;
            for (int p : sigma)
                radius = std::max(radius, space(x, static_cast<std::size_t>(p)));
            best = std::min(best, radius);
        }
        return best;
    };
    auto expand = [&](auto&& self) -> void {
        f.entries.push_back({Simplex{stack}, value_of(stack)});
        if (static_cast<int>(stack.size()) - 1 >= max_dim) return;
        for (int v = stack.back() + 1; v < static_cast<int>(n); ++v) {
            stack.push_back(v);
            self(self);
            stack.pop_back();
        }
    };
    for (int v = 0; v < static_cast<int>(n); ++v) {
        stack.push_back(v);
        expand(expand);
        stack.pop_back();
    }
    f.sort_canonical();
    return f;
}

std::vector<std::size_t> maxmin_landmarks(const FiniteMetricSpace& space,
                                          std::size_t count, std::uint64_t seed) {
    const std::size_t n = space.size();
    if (count < 1 || count > n)
        throw std::invalid_argument("landmark count out of range");

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> landmarks;
    landmarks.push_back(
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));

    std::vector<double> to_set(n);
    for (std::size_t x = 0; x < n; ++x) to_set[x] = space(x, landmarks[0]);

    while (landmarks.size() < count) {
        std::size_t pick = 0;
        for (std::size_t x = 1; x < n; ++x)
            if (to_set[x] > to_set[pick]) pick = x;  // ties: smallest index
        landmarks.push_back(pick);
        for (std::size_t x = 0; x < n; ++x)
            to_set[x] = std::min(to_set[x], space(x, pick));
    }
    return landmarks;
}

Filtration witness_filtration(const FiniteMetricSpace& space,
                              const std::vector<std::size_t>& landmarks,
                              int max_dim, std::size_t budget) {
    if (max_dim < 0) throw std::invalid_argument("negative max dimension");
    const std::size_t n = space.size();
    const std::size_t L = landmarks.size();
    if (L == 0) throw std::invalid_argument("empty landmark set");
    {
        std::set<std::size_t> distinct(landmarks.begin(), landmarks.end());
        if (distinct.size() != L)
            throw std::invalid_argument("duplicate landmarks");
        if (*distinct.rbegin() >= n)
            throw std::invalid_argument("landmark index out of range");
    }
    check_budget(L, max_dim, budget);

    // sorted_ld[x][t] = (t+1)-th smallest of d(x, l) over l in L; the
    // witness threshold m_x for a (k+1)-tuple is sorted_ld[x][k].
    std::vector<std::vector<double>> ld(n, std::vector<double>(L));
    std::vector<std::vector<double>> sorted_ld(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < L; ++i) ld[x][i] = space(x, landmarks[i]);
        sorted_ld[x] = ld[x];
        std::sort(sorted_ld[x].begin(), sorted_ld[x].end());
    }

    // epsilon_x(sigma) = max(0, max_i d(x, l_i) - m_x); the per-simplex
    // witness value is min over x, and f adds the all-faces requirement by
    // maximizing over facets. Dimensions are filled lowest first so every
    // facet value is known when its cofaces are evaluated.
    Filtration f;
    f.max_dim = max_dim;
    std::map<std::vector<int>, double> value_of;
    for (int d = 0; d <= max_dim; ++d) {
        std::vector<int> tuple;  // indices into `landmarks`
        auto enumerate = [&](auto&& self, int from) -> void {
            if (static_cast<int>(tuple.size()) == d + 1) {
                double witnessed = std::numeric_limits<double>::infinity();
                for (std::size_t x = 0; x < n; ++x) {
                    double farthest = 0.0;
                    for (int i : tuple)
                        farthest =
                            std::max(farthest, ld[x][static_cast<std::size_t>(i)]);
                    witnessed = std::min(
                        witnessed,
                        std::max(0.0, farthest -
                                          sorted_ld[x][static_cast<std::size_t>(d)]));
                }
                std::vector<int> verts;
                verts.reserve(tuple.size());
                for (int i : tuple)
                    verts.push_back(
                        static_cast<int>(landmarks[static_cast<std::size_t>(i)]));
                std::sort(verts.begin(), verts.end());
                double value = witnessed;
                for (std::size_t drop = 0; drop < verts.size() && d > 0; ++drop) {
                    std::vector<int> facet = verts;
                    facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
                    value = std::max(value, value_of.at(facet));
                }
                value_of[verts] = value;
                f.entries.push_back({Simplex{std::move(verts)}, value});
                return;
            }
            for (int i = from; i < static_cast<int>(L); ++i) {
                tuple.push_back(i);
                self(self, i + 1);
                tuple.pop_back();
            }
        };
        enumerate(enumerate, 0);
    }
    f.sort_canonical();
    return f;
}

Filtration cofiring_filtration(const SpikeTrains& trains, double epsilon,
                               std::size_t m, int max_dim, std::size_t budget) {
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (max_dim < 0) throw std::invalid_argument("negative max dimension");
    const std::size_t n = trains.trains.size();
    check_budget(n, max_dim, budget);

    // Per cell, the admissible times form a union of closed intervals:
    // spikes s_j .. s_{j+m-1} all lie in [t-eps, t+eps] iff
    // t in [s_{j+m-1} - eps, s_j + eps].
    struct Interval { double lo, hi; };
    std::vector<std::vector<Interval>> admissible(n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto& s = trains.trains[c];
        if (s.size() < m) continue;
        for (std::size_t j = 0; j + m <= s.size(); ++j) {
            const double lo = s[j + m - 1] - epsilon;
            const double hi = s[j] + epsilon;
            if (lo <= hi) admissible[c].push_back({lo, hi});
        }
    }
    auto member = [&](std::size_t c, double t) {
        for (const auto& iv : admissible[c])
            if (iv.lo <= t && t <= iv.hi) return true;
        return false;
    };

    // Earliest common time of a cell set: sweep the left endpoints. The
    // minimum of an intersection of interval unions is attained at some
    // interval's left endpoint.
    auto earliest = [&](const std::vector<int>& cells)
        -> std::optional<double> {
        double best = std::numeric_limits<double>::infinity();
        bool found = false;
        for (int c : cells) {
            for (const auto& iv : admissible[static_cast<std::size_t>(c)]) {
                if (found && iv.lo >= best) continue;
                bool all = true;
                for (int c2 : cells)
                    if (!member(static_cast<std::size_t>(c2), iv.lo)) {
                        all = false;
                        break;
                    }
                if (all) {
                    best = iv.lo;
                    found = true;
                }
            }
        }
        if (!found) return std::nullopt;
        return best;
    };

    Filtration f;
    f.max_dim = max_dim;
    std::vector<int> stack;
    auto expand = [&](auto&& self) -> void {
        auto t = earliest(stack);
        if (!t) return;  // never co-fires; no cofaces either
        f.entries.push_back({Simplex{stack}, *t});
        if (static_cast<int>(stack.size()) - 1 >= max_dim) return;
        for (int v = stack.back() + 1; v < static_cast<int>(n); ++v) {
            stack.push_back(v);
            self(self);
            stack.pop_back();
        }
    };
    for (int v = 0; v < static_cast<int>(n); ++v) {
        stack.push_back(v);
        expand(expand);
        stack.pop_back();
    }
    f.sort_canonical();
    return f;
}

Filtration skeleton(const Filtration& filtration, int n) {
    if (n < 0) throw std::invalid_argument("negative skeleton dimension");
    Filtration out;
    out.max_dim = std::min(filtration.max_dim, n);
    for (const auto& e : filtration.entries)
        if (e.simplex.dim() <= n) out.entries.push_back(e);
    return out;
}

}  // namespace tda
