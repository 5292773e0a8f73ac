#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tda/cluster.hpp"
#include "tda/complex.hpp"
#include "tda/distance.hpp"
#include "tda/homology.hpp"
#include "tda/metric.hpp"
#include "tda/persistence.hpp"

namespace py = pybind11;

namespace {

tda::FiniteMetricSpace space_from_matrix(
    const std::vector<std::vector<double>>& rows,
    std::vector<std::string> labels) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw std::invalid_argument("distance matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    }
    return tda::FiniteMetricSpace::from_matrix(std::move(labels), std::move(flat));
}

tda::MetricKind metric_kind_of(const std::string& name) {
    if (name == "l1") return tda::MetricKind::L1;
    if (name == "l2") return tda::MetricKind::L2;
    if (name == "linf") return tda::MetricKind::Linf;
    throw std::invalid_argument("unknown metric '" + name + "'");
}

std::vector<std::pair<double, double>> diagram_pairs(
    const tda::PersistenceDiagram& d) {
    tda::PersistenceDiagram sorted = d;
    sorted.sort();
    std::vector<std::pair<double, double>> out;
    for (const auto& p : sorted.points) out.emplace_back(p.birth, p.death);
    return out;
}

tda::PersistenceDiagram diagram_from_pairs(
    const std::vector<std::pair<double, double>>& pairs) {
    tda::PersistenceDiagram d;
    for (const auto& [b, dd] : pairs) d.points.push_back({b, dd});
    return d;
}

}  // namespace

PYBIND11_MODULE(tdakit, m) {
    m.doc() = "persistent homology of finite metric spaces: Vietoris-Rips "
              "filtrations, Z2 matrix reduction, single-linkage clustering, "
              "bottleneck distance";

    py::class_<tda::FiniteMetricSpace>(m, "FiniteMetricSpace")
        .def(py::init(&space_from_matrix), py::arg("dist"),
             py::arg("labels") = std::vector<std::string>{})
        .def_readonly("labels", &tda::FiniteMetricSpace::labels)
        .def("__len__", &tda::FiniteMetricSpace::size)
        .def("dist", [](const tda::FiniteMetricSpace& s, std::size_t i,
                        std::size_t j) { return s(i, j); });

    m.def(
        "from_point_cloud",
        [](const std::vector<std::vector<double>>& points, const std::string& metric) {
            return tda::from_point_cloud(points, metric_kind_of(metric));
        },
        py::arg("points"), py::arg("metric") = "l2");

    m.def(
        "validate",
        [](const tda::FiniteMetricSpace& s, bool strict) {
            return tda::validate(s, strict).issues;
        },
        py::arg("space"), py::arg("strict") = true,
        "List of violated metric axioms; empty means valid.");

    m.def("spectrum", [](const tda::FiniteMetricSpace& s) {
        return tda::spectrum(s).values;
    });

    m.def(
        "vr_diagram",
        [](const tda::FiniteMetricSpace& s, int max_k, const std::string& t_mode) {
            const tda::TMode mode = t_mode == "paper-literal"
                                        ? tda::TMode::PaperLiteral
                                        : tda::TMode::Geometric;
            std::vector<std::vector<std::pair<double, double>>> out;
            for (const auto& d : tda::vr_diagram(s, max_k, mode))
                out.push_back(diagram_pairs(d));
            return out;
        },
        py::arg("space"), py::arg("max_k") = 1, py::arg("t_mode") = "geometric",
        "Persistence diagrams for dimensions 0..max_k as (birth, death) "
        "lists; death is float('inf') for essential classes.");

    m.def("zero_dim_diagram_fast", [](const tda::FiniteMetricSpace& s) {
        return diagram_pairs(tda::zero_dim_diagram_fast(s));
    });

    m.def(
        "betti_curve",
        [](const tda::FiniteMetricSpace& s, int k, double delta) {
            return tda::betti_curve(s, k, delta);
        },
        py::arg("space"), py::arg("k"), py::arg("delta"));

    m.def(
        "bottleneck",
        [](const std::vector<std::pair<double, double>>& d1,
           const std::vector<std::pair<double, double>>& d2) {
            return tda::bottleneck(diagram_from_pairs(d1), diagram_from_pairs(d2));
        },
        py::arg("diagram1"), py::arg("diagram2"));

    m.def(
        "single_linkage_merges",
        [](const tda::FiniteMetricSpace& s) {
            std::vector<std::tuple<double, std::size_t, std::size_t>> out;
            for (const auto& merge : tda::single_linkage_dendrogram(s).merges)
                out.emplace_back(merge.scale, merge.block_a, merge.block_b);
            return out;
        },
        "Merge events (scale, block_a, block_b) in canonical order.");

    m.def("subdominant_ultrametric", [](const tda::FiniteMetricSpace& s) {
        const auto u = tda::subdominant_ultrametric(s);
        std::vector<std::vector<double>> rows(u.n, std::vector<double>(u.n));
        for (std::size_t i = 0; i < u.n; ++i)
            for (std::size_t j = 0; j < u.n; ++j) rows[i][j] = u(i, j);
        return rows;
    });

    m.def(
        "maxmin_landmarks",
        [](const tda::FiniteMetricSpace& s, std::size_t count, std::uint64_t seed) {
            return tda::maxmin_landmarks(s, count, seed);
        },
        py::arg("space"), py::arg("count"), py::arg("seed") = 0);

    m.def(
        "gh_bruteforce",
        [](const tda::FiniteMetricSpace& x, const tda::FiniteMetricSpace& y,
           std::size_t cap) { return tda::gh_bruteforce(x, y, cap); },
        py::arg("x"), py::arg("y"), py::arg("size_cap") = 6);

    m.attr("__version__") = "0.1.0";
}
