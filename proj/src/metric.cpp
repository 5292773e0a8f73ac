#include "tda/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

namespace tda {

FiniteMetricSpace FiniteMetricSpace::from_matrix(std::vector<std::string> labels,
                                                 std::vector<double> dist) {
    if (labels.empty()) throw std::invalid_argument("metric space needs at least one point");
    if (dist.size() != labels.size() * labels.size())
        throw std::invalid_argument("distance matrix size does not match label count");
    FiniteMetricSpace space;
    space.labels = std::move(labels);
    space.dist = std::move(dist);
    return space;
}

FiniteMetricSpace from_point_cloud(const std::vector<std::vector<double>>& points,
                                   MetricKind kind) {
    if (points.empty()) throw std::invalid_argument("empty point cloud");
    const std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("point cloud has inconsistent dimensions");

    const std::size_t n = points.size();
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = 0.0;
            switch (kind) {
                case MetricKind::L1:
                    for (std::size_t c = 0; c < dim; ++c)
                        d += std::abs(points[i][c] - points[j][c]);
                    break;
                case MetricKind::L2: {
                    double s = 0.0;
                    for (std::size_t c = 0; c < dim; ++c) {
                        const double diff = points[i][c] - points[j][c];
                        s += diff * diff;
                    }
                    d = std::sqrt(s);
                    break;
                }
                case MetricKind::Linf:
                    for (std::size_t c = 0; c < dim; ++c)
                        d = std::max(d, std::abs(points[i][c] - points[j][c]));
                    break;
            }
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }

    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return FiniteMetricSpace::from_matrix(std::move(labels), std::move(dist));
}

ValidationReport validate(const FiniteMetricSpace& space, bool strict) {
    ValidationReport report;
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (space(i, i) != 0.0)
            report.issues.push_back("nonzero diagonal at (" + std::to_string(i) + "," +
                                    std::to_string(i) + ")");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (space(i, j) < 0.0)
                report.issues.push_back("negative entry at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            if (j > i && space(i, j) != space(j, i))
                report.issues.push_back("asymmetry at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        }
    }
    if (strict) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (space(i, j) == 0.0)
                    report.issues.push_back("zero off-diagonal at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (space(i, k) > space(i, j) + space(j, k)) {
                        report.issues.push_back("triangle violation (" + std::to_string(i) +
                                                "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
                    }
    }
    return report;
}

std::size_t Spectrum::index_of(double value) const {
    auto it = std::lower_bound(values.begin(), values.end(), value);
    if (it == values.end() || *it != value)
        throw std::invalid_argument("value not in spectrum");
    return static_cast<std::size_t>(it - values.begin()) + 1;
}

Spectrum spectrum(const FiniteMetricSpace& space) {
    std::set<double> distinct;
    distinct.insert(0.0);
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) distinct.insert(space(i, j));
    Spectrum s;
    s.values.assign(distinct.begin(), distinct.end());
    return s;
}

PointMap PointMap::identity(std::size_t n) {
    PointMap f;
    f.source_size = n;
    f.target_size = n;
    f.image.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.image[i] = i;
    return f;
}

static void check_map(const PointMap& f, const FiniteMetricSpace& X,
                      const FiniteMetricSpace& Y) {
    if (f.source_size != X.size() || f.target_size != Y.size() ||
        f.image.size() != X.size())
        throw std::invalid_argument("point map sizes do not match the spaces");
    for (std::size_t i : f.image)
        if (i >= Y.size()) throw std::invalid_argument("point map image out of range");
}

double distortion(const PointMap& f, const FiniteMetricSpace& X,
                  const FiniteMetricSpace& Y) {
    check_map(f, X, Y);
    double dis = 0.0;
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t x2 = 0; x2 < X.size(); ++x2)
            dis = std::max(dis, std::abs(X(x, x2) - Y(f.image[x], f.image[x2])));
    return dis;
}

double codistortion(const PointMap& f, const PointMap& g,
                    const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
    check_map(f, X, Y);
    check_map(g, Y, X);
    double c = 0.0;
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t y = 0; y < Y.size(); ++y)
            c = std::max(c, std::abs(X(x, g.image[y]) - Y(y, f.image[x])));
    return c;
}

namespace {

// All maps [0,n) -> [0,m), i.e. m^n images.
std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> maps;
    std::vector<std::size_t> cur(n, 0);
    while (true) {
        maps.push_back(cur);
        std::size_t pos = 0;
        while (pos < n && ++cur[pos] == m) {
            cur[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return maps;
}

double map_distortion(const std::vector<std::size_t>& img,
                      const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
    double dis = 0.0;
    for (std::size_t a = 0; a < img.size(); ++a)
        for (std::size_t b = a + 1; b < img.size(); ++b)
            dis = std::max(dis, std::abs(X(a, b) - Y(img[a], img[b])));
    return dis;
}

}  // namespace

double gh_bruteforce(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                     std::size_t size_cap) {
    if (X.size() > size_cap || Y.size() > size_cap)
        throw std::invalid_argument("gh_bruteforce size cap exceeded");

    auto phis = all_maps(X.size(), Y.size());
    auto psis = all_maps(Y.size(), X.size());

    std::vector<std::pair<double, std::size_t>> phi_by_dis(phis.size());
    for (std::size_t i = 0; i < phis.size(); ++i)
        phi_by_dis[i] = {map_distortion(phis[i], X, Y), i};
    std::sort(phi_by_dis.begin(), phi_by_dis.end());
    std::vector<std::pair<double, std::size_t>> psi_by_dis(psis.size());
    for (std::size_t i = 0; i < psis.size(); ++i)
        psi_by_dis[i] = {map_distortion(psis[i], Y, X), i};
    std::sort(psi_by_dis.begin(), psi_by_dis.end());

    double best = std::numeric_limits<double>::infinity();
    for (const auto& [dis_phi, pi] : phi_by_dis) {
        if (dis_phi >= best) break;  // sorted: nothing better follows
        const auto& phi = phis[pi];
        for (const auto& [dis_psi, qi] : psi_by_dis) {
            if (dis_psi >= best) break;
            const auto& psi = psis[qi];
            double eta = std::max(dis_phi, dis_psi);
            for (std::size_t x = 0; x < X.size() && eta < best; ++x)
                for (std::size_t y = 0; y < Y.size(); ++y) {
                    eta = std::max(eta, std::abs(X(x, psi[y]) - Y(y, phi[x])));
                    if (eta >= best) break;
                }
            best = std::min(best, eta);
        }
    }
    return best / 2.0;
}

}  // namespace tda
