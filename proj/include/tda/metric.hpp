#ifndef TDA_METRIC_HPP
#define TDA_METRIC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tda {

// A finite metric space: point labels plus a symmetric n x n distance
// matrix stored row-major. Immutable after construction; all operations
// in this library treat it as a value.
struct FiniteMetricSpace {
    std::vector<std::string> labels;
    std::vector<double> dist;  // row-major, size n*n

    std::size_t size() const { return labels.size(); }

    double operator()(std::size_t i, std::size_t j) const {
        return dist[i * labels.size() + j];
    }

    static FiniteMetricSpace from_matrix(std::vector<std::string> labels,
                                         std::vector<double> dist);
};

enum class MetricKind { L1, L2, Linf };

FiniteMetricSpace from_point_cloud(const std::vector<std::vector<double>>& points,
                                   MetricKind kind);

// Validation is report-returning, never throwing: every violated axiom is
// listed with a witness. Strict mode additionally rejects zero off-diagonal
// entries and triangle-inequality violations.
struct ValidationReport {
    std::vector<std::string> issues;
    bool valid() const { return issues.empty(); }
};

ValidationReport validate(const FiniteMetricSpace& space, bool strict);

// Sorted distinct pairwise distances, always starting at 0. Deduplication
// uses exact equality of stored doubles; values are never recomputed.
struct Spectrum {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }

    // 1-based index of an exact member; throws if absent.
    std::size_t index_of(double value) const;
};

Spectrum spectrum(const FiniteMetricSpace& space);

// A set map between the index ranges of two spaces.
struct PointMap {
    std::size_t source_size = 0;
    std::size_t target_size = 0;
    std::vector<std::size_t> image;  // image[i] in [0, target_size)

    static PointMap identity(std::size_t n);
};

double distortion(const PointMap& f, const FiniteMetricSpace& X,
                  const FiniteMetricSpace& Y);

double codistortion(const PointMap& f, const PointMap& g,
                    const FiniteMetricSpace& X, const FiniteMetricSpace& Y);

// Exact Gromov-Hausdorff distance by enumeration of all map pairs
// (phi: X->Y, psi: Y->X). An oracle for tiny spaces, not a production
// feature; throws when either space exceeds size_cap.
double gh_bruteforce(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                     std::size_t size_cap = 6);

}  // namespace tda

#endif
