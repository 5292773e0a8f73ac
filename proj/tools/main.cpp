#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "tda/cluster.hpp"
#include "tda/complex.hpp"
#include "tda/distance.hpp"
#include "tda/homology.hpp"
#include "tda/io.hpp"
#include "tda/metric.hpp"
#include "tda/persistence.hpp"

namespace {

struct RunConfig {
    std::string input;
    std::string format = "distance-matrix";  // distance-matrix|point-cloud|spike-trains
    std::string metric = "l2";               // l1|l2|linf
    std::string complex_kind = "vr";         // vr|cech|witness|cofiring
    int max_dim = 1;
    std::size_t landmarks = 0;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    std::size_t min_spikes = 1;
    std::string t_mode = "geometric";  // geometric|paper-literal
    bool strict = true;
    std::string output;
    std::string svg;
};

tda::MetricKind metric_kind_of(const std::string& name) {
    if (name == "l1") return tda::MetricKind::L1;
    if (name == "l2") return tda::MetricKind::L2;
    if (name == "linf") return tda::MetricKind::Linf;
    throw std::runtime_error("unknown metric '" + name + "'");
}

tda::FiniteMetricSpace load_space(const RunConfig& cfg) {
    if (cfg.format == "distance-matrix")
        return tda::io::read_distance_matrix_file(cfg.input);
    if (cfg.format == "point-cloud")
        return tda::from_point_cloud(tda::io::read_point_cloud_file(cfg.input),
                                     metric_kind_of(cfg.metric));
    throw std::runtime_error("format '" + cfg.format +
                             "' does not describe a metric space");
}

void require_valid(const tda::FiniteMetricSpace& space, bool strict) {
    auto report = tda::validate(space, strict);
    if (!report.valid())
        throw std::runtime_error("invalid metric space: " + report.issues.front());
}

void add_metric_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--input", cfg.input, "input file")->required();
    cmd->add_option("--format", cfg.format,
                    "distance-matrix|point-cloud|spike-trains");
    cmd->add_option("--metric", cfg.metric, "l1|l2|linf (point clouds)");
    auto* strict = cmd->add_flag("--strict", "reject metric-axiom violations (default)");
    cmd->add_flag("--allow-pseudometric",
                  "permit duplicate points and triangle violations")
        ->excludes(strict);
}

void apply_pseudometric_flag(const CLI::App* cmd, RunConfig& cfg) {
    if (cmd->count("--allow-pseudometric")) cfg.strict = false;
}

int cmd_compute(const RunConfig& cfg) {
    std::map<int, tda::PersistenceDiagram> diagrams;
    std::optional<tda::Spectrum> spec;

    if (cfg.complex_kind == "cofiring") {
        if (cfg.format != "spike-trains")
            throw std::runtime_error("cofiring complex needs --format spike-trains");
        if (cfg.epsilon <= 0.0)
            throw std::runtime_error("cofiring complex needs --epsilon > 0");
        auto trains = tda::io::read_spike_trains_file(cfg.input);
        auto filtration = tda::cofiring_filtration(trains, cfg.epsilon,
                                                   cfg.min_spikes, cfg.max_dim + 1);
        auto per_dim = tda::diagrams_of_filtration(filtration, cfg.max_dim);
        for (int k = 0; k <= cfg.max_dim; ++k)
            diagrams[k] = per_dim[static_cast<std::size_t>(k)];
    } else {
        auto space = load_space(cfg);
        require_valid(space, cfg.strict);
        if (cfg.complex_kind == "vr") {
            const tda::TMode mode = cfg.t_mode == "paper-literal"
                                        ? tda::TMode::PaperLiteral
                                        : tda::TMode::Geometric;
            auto per_dim = tda::vr_diagram(space, cfg.max_dim, mode);
            for (int k = 0; k <= cfg.max_dim; ++k)
                diagrams[k] = per_dim[static_cast<std::size_t>(k)];
            spec = tda::spectrum(space);
        } else if (cfg.complex_kind == "cech") {
            auto filtration = tda::cech_filtration(space, cfg.max_dim + 1);
            auto per_dim = tda::diagrams_of_filtration(filtration, cfg.max_dim);
            for (int k = 0; k <= cfg.max_dim; ++k)
                diagrams[k] = per_dim[static_cast<std::size_t>(k)];
        } else if (cfg.complex_kind == "witness") {
            if (cfg.landmarks == 0)
                throw std::runtime_error("witness complex needs --landmarks");
            auto picked = tda::maxmin_landmarks(space, cfg.landmarks, cfg.seed);
            auto filtration =
                tda::witness_filtration(space, picked, cfg.max_dim + 1);
            auto per_dim = tda::diagrams_of_filtration(filtration, cfg.max_dim);
            for (int k = 0; k <= cfg.max_dim; ++k)
                diagrams[k] = per_dim[static_cast<std::size_t>(k)];
        } else {
            throw std::runtime_error("unknown complex '" + cfg.complex_kind + "'");
        }
    }

    tda::io::DiagramDocument doc;
    doc.digest = tda::io::digest_file(cfg.input);
    doc.spec = spec;
    doc.diagrams = diagrams;

    if (cfg.output.empty()) {
        tda::io::write_diagram_document(std::cout, doc);
    } else {
        std::ofstream out(cfg.output);
        if (!out) throw std::runtime_error("cannot write " + cfg.output);
        tda::io::write_diagram_document(out, doc);
    }
    if (!cfg.svg.empty()) {
        std::ofstream out(cfg.svg);
        if (!out) throw std::runtime_error("cannot write " + cfg.svg);
        tda::io::write_barcode_svg(out, diagrams);
    }
    return 0;
}

int cmd_betti(const RunConfig& cfg, double delta) {
    auto space = load_space(cfg);
    require_valid(space, cfg.strict);
    for (int k = 0; k <= cfg.max_dim; ++k)
        std::cout << (k ? " " : "") << tda::betti_curve(space, k, delta);
    std::cout << "\n";
    return 0;
}

int cmd_cluster(const RunConfig& cfg, const std::string& ultrametric_path) {
    auto space = load_space(cfg);
    require_valid(space, cfg.strict);
    auto dendro = tda::single_linkage_dendrogram(space);
    tda::io::write_dendrogram_merges(std::cout, dendro, space.labels);
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw std::runtime_error("cannot write " + cfg.output);
        tda::io::write_dendrogram_document(out, dendro, space.labels);
    }
    if (!ultrametric_path.empty()) {
        std::ofstream out(ultrametric_path);
        if (!out) throw std::runtime_error("cannot write " + ultrametric_path);
        tda::io::write_ultrametric(out, tda::subdominant_ultrametric(space),
                                   space.labels);
    }
    return 0;
}

int cmd_distance(const std::string& path1, const std::string& path2) {
    auto doc1 = tda::io::read_diagram_document_file(path1);
    auto doc2 = tda::io::read_diagram_document_file(path2);
    // The value reported per dimension is the bottleneck distance; by the
    // isometry between interleaving and bottleneck metrics for decomposable
    // persistence modules it equals the interleaving distance as well.
    for (const auto& [dim, d1] : doc1.diagrams) {
        auto it = doc2.diagrams.find(dim);
        if (it == doc2.diagrams.end()) continue;
        const double d = tda::bottleneck(d1, it->second);
        std::cout << dim << " ";
        if (std::isinf(d)) std::cout << "inf";
        else std::cout << tda::io::format_double(d);
        std::cout << "\n";
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    auto space = load_space(cfg);
    auto report = tda::validate(space, cfg.strict);
    if (report.valid()) {
        std::cout << "valid\n";
        return 0;
    }
    for (const auto& issue : report.issues) std::cout << issue << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistent homology pipeline: metric space -> filtration -> "
                 "Z2 persistence -> diagram"};
    app.require_subcommand(1);

    RunConfig cfg;
    double delta = 0.0;
    std::string diag1, diag2, ultrametric_path;

    auto* compute = app.add_subcommand("compute", "full pipeline to a diagram document");
    add_metric_flags(compute, cfg);
    compute->add_option("--complex", cfg.complex_kind, "vr|cech|witness|cofiring");
    compute->add_option("--max-dim", cfg.max_dim, "max homology dimension");
    compute->add_option("--landmarks", cfg.landmarks, "landmark count (witness)");
    compute->add_option("--seed", cfg.seed, "landmark selection seed");
    compute->add_option("--epsilon", cfg.epsilon, "co-firing window half-width");
    compute->add_option("--min-spikes", cfg.min_spikes, "co-firing spike threshold");
    compute->add_option("--t-mode", cfg.t_mode, "geometric|paper-literal");
    compute->add_option("--output", cfg.output, "diagram document path (default stdout)");
    compute->add_option("--svg", cfg.svg, "barcode SVG path");

    auto* betti = app.add_subcommand("betti", "static Betti numbers at a scale");
    add_metric_flags(betti, cfg);
    betti->add_option("--delta", delta, "scale")->required();
    betti->add_option("--max-dim", cfg.max_dim, "max homology dimension");

    auto* cluster = app.add_subcommand("cluster", "single-linkage dendrogram export");
    add_metric_flags(cluster, cfg);
    cluster->add_option("--output", cfg.output, "structured dendrogram document path");
    cluster->add_option("--ultrametric", ultrametric_path, "ultrametric matrix path");

    auto* distance = app.add_subcommand(
        "distance", "bottleneck distance between two diagram documents");
    distance->add_option("diagram1", diag1)->required();
    distance->add_option("diagram2", diag2)->required();

    auto* validate = app.add_subcommand("validate", "metric axiom report");
    add_metric_flags(validate, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            apply_pseudometric_flag(compute, cfg);
            return cmd_compute(cfg);
        }
        if (betti->parsed()) {
            apply_pseudometric_flag(betti, cfg);
            return cmd_betti(cfg, delta);
        }
        if (cluster->parsed()) {
            apply_pseudometric_flag(cluster, cfg);
            return cmd_cluster(cfg, ultrametric_path);
        }
        if (distance->parsed()) return cmd_distance(diag1, diag2);
        if (validate->parsed()) {
            apply_pseudometric_flag(validate, cfg);
            return cmd_validate(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
