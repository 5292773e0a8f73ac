#include "tda/distance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace tda {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

double coord_diff(double a, double b) {
    if (std::isinf(a) && std::isinf(b)) return 0.0;
    if (std::isinf(a) || std::isinf(b)) return kInf;
    return std::abs(a - b);
}

double box_distance(const DiagramPoint& p, const DiagramPoint& q) {
    return std::max(coord_diff(p.birth, q.birth), coord_diff(p.death, q.death));
}

double half_persistence(const DiagramPoint& p) {
    if (std::isinf(p.death)) return kInf;
    return (p.death - p.birth) / 2.0;
}

// Kuhn's augmenting-path maximum bipartite matching.
struct Bipartite {
    std::size_t left, right;
    std::vector<std::vector<std::size_t>> adj;  // per left node

    explicit Bipartite(std::size_t l, std::size_t r) : left(l), right(r), adj(l) {}

    bool has_perfect_left_matching() const {
        std::vector<std::int64_t> match_right(right, -1);
        std::vector<char> visited;
        std::size_t matched = 0;
        std::function<bool(std::size_t)> augment = [&](std::size_t u) {
            for (std::size_t v : adj[u]) {
                if (visited[v]) continue;
                visited[v] = 1;
                if (match_right[v] < 0 ||
                    augment(static_cast<std::size_t>(match_right[v]))) {
                    match_right[v] = static_cast<std::int64_t>(u);
                    return true;
                }
            }
            return false;
        };
        for (std::size_t u = 0; u < left; ++u) {
            visited.assign(right, 0);
            if (augment(u)) ++matched;
        }
        return matched == left;
    }
};

}  // namespace

double matching_cost(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                     const PartialMatching& m) {
    std::vector<char> used1(d1.points.size(), 0), used2(d2.points.size(), 0);
    double cost = 0.0;
    for (const auto& [a, b] : m.matched) {
        if (a >= d1.points.size() || b >= d2.points.size())
            throw std::invalid_argument("matching index out of range");
        if (used1[a] || used2[b])
            throw std::invalid_argument("matching index used twice");
        used1[a] = 1;
        used2[b] = 1;
        cost = std::max(cost, box_distance(d1.points[a], d2.points[b]));
    }
    for (std::size_t a = 0; a < d1.points.size(); ++a)
        if (!used1[a]) cost = std::max(cost, half_persistence(d1.points[a]));
    for (std::size_t b = 0; b < d2.points.size(); ++b)
        if (!used2[b]) cost = std::max(cost, half_persistence(d2.points[b]));
    return cost;
}

double bottleneck_bruteforce(const PersistenceDiagram& d1,
                             const PersistenceDiagram& d2, std::size_t cap) {
    if (d1.points.size() > cap || d2.points.size() > cap)
        throw std::invalid_argument("bottleneck_bruteforce size cap exceeded");

    double best = kInf;
    PartialMatching m;
    std::vector<char> used2(d2.points.size(), 0);
    // Enumerate all partial injections d1 -> d2.
    std::function<void(std::size_t)> recurse = [&](std::size_t a) {
        if (a == d1.points.size()) {
            best = std::min(best, matching_cost(d1, d2, m));
            return;
        }
        recurse(a + 1);  // a unmatched
        for (std::size_t b = 0; b < d2.points.size(); ++b) {
            if (used2[b]) continue;
            used2[b] = 1;
            m.matched.emplace_back(a, b);
            recurse(a + 1);
            m.matched.pop_back();
            used2[b] = 0;
        }
    };
    recurse(0);
    return best;
}

double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
    std::vector<DiagramPoint> ess1, ess2, fin1, fin2;
    for (const auto& p : d1.points)
        (std::isinf(p.death) ? ess1 : fin1).push_back(p);
    for (const auto& p : d2.points)
        (std::isinf(p.death) ? ess2 : fin2).push_back(p);

    // Essential classes carry infinite unmatched penalty, so they must pair
    // with each other; unequal counts force distance inf.
    if (ess1.size() != ess2.size()) return kInf;

    std::set<double> candidates{0.0};
    for (const auto& p : ess1)
        for (const auto& q : ess2) candidates.insert(std::abs(p.birth - q.birth));
    for (const auto& p : fin1)
        for (const auto& q : fin2) {
            candidates.insert(std::abs(p.birth - q.birth));
            candidates.insert(std::abs(p.death - q.death));
        }
    for (const auto& p : fin1) candidates.insert(half_persistence(p));
    for (const auto& q : fin2) candidates.insert(half_persistence(q));
    std::vector<double> cand(candidates.begin(), candidates.end());

    auto feasible = [&](double c) {
        // essential part: perfect matching under birth distance <= c
        {
            Bipartite g(ess1.size(), ess2.size());
            for (std::size_t i = 0; i < ess1.size(); ++i)
                for (std::size_t j = 0; j < ess2.size(); ++j)
                    if (std::abs(ess1[i].birth - ess2[j].birth) <= c)
                        g.adj[i].push_back(j);
            if (!g.has_perfect_left_matching()) return false;
        }
        // finite part: the classic doubled graph. Left nodes are fin1 points
        // plus one diagonal slot per fin2 point; right nodes are fin2 points
        // plus one diagonal slot per fin1 point. A perfect matching at cost c
        // exists iff this graph has one.
        const std::size_t n1 = fin1.size(), n2 = fin2.size();
        Bipartite g(n1 + n2, n1 + n2);
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = 0; j < n2; ++j)
                if (box_distance(fin1[i], fin2[j]) <= c) g.adj[i].push_back(j);
            if (half_persistence(fin1[i]) <= c)
                g.adj[i].push_back(n2 + i);  // own diagonal slot
        }
        for (std::size_t j = 0; j < n2; ++j) {
            auto& row = g.adj[n1 + j];
            if (half_persistence(fin2[j]) <= c) row.push_back(j);
            for (std::size_t i = 0; i < n1; ++i) row.push_back(n2 + i);
        }
        return g.has_perfect_left_matching();
    };

    std::size_t lo = 0, hi = cand.size() - 1;
    if (feasible(cand[lo])) return cand[lo];
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(cand[mid])) hi = mid;
        else lo = mid;
    }
    return cand[hi];
}

}  // namespace tda
