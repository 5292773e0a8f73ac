#ifndef TDA_DISTANCE_HPP
#define TDA_DISTANCE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "tda/persistence.hpp"

namespace tda {

// A bijection between a subset of D's points and a subset of D2's points,
// given by index pairs. Indices left out on either side are unmatched.
struct PartialMatching {
    std::vector<std::pair<std::size_t, std::size_t>> matched;
};

// Cost of a partial matching: max of half-persistence over unmatched points
// on both sides and the box distance max(|db|, |dd|) over matched pairs.
// Conventions: inf - inf = 0, finite - inf = inf, empty max = 0.
double matching_cost(const PersistenceDiagram& d1, const PersistenceDiagram& d2,
                     const PartialMatching& m);

// Exact minimum of matching_cost over all partial matchings; throws when a
// diagram has more than cap points.
double bottleneck_bruteforce(const PersistenceDiagram& d1,
                             const PersistenceDiagram& d2,
                             std::size_t cap = 6);

// Exact bottleneck distance: binary search over the finite candidate cost
// set with an augmenting-path matching feasibility test at each candidate.
// Returns inf iff the two diagrams have different counts of infinite-death
// points (those can only be matched with each other).
double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

}  // namespace tda

#endif
