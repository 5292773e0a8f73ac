#include "tda/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tda::io {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::string normalized = line;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream iss(normalized);
    std::vector<std::string> tokens;
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool parse_double(const std::string& tok, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(tok, &used);
        return used == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

// Non-comment lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!is_comment_or_blank(line)) lines.emplace_back(no, line);
    }
    return lines;
}

template <typename Reader>
auto read_file_with(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return reader(in);
}

}  // namespace

FiniteMetricSpace read_distance_matrix(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw std::runtime_error("empty distance matrix");

    std::vector<std::string> labels;
    std::size_t first_row = 0;
    {
        auto tokens = tokenize(lines[0].second);
        double ignored;
        bool numeric = !tokens.empty();
        for (const auto& t : tokens)
            if (!parse_double(t, ignored)) numeric = false;
        if (!numeric) {
            labels = tokens;
            first_row = 1;
        }
    }

    std::vector<std::vector<double>> rows;
    for (std::size_t r = first_row; r < lines.size(); ++r) {
        auto tokens = tokenize(lines[r].second);
        std::vector<double> row;
        for (const auto& t : tokens) {
            double v;
            if (!parse_double(t, v)) parse_error(lines[r].first, "bad number '" + t + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw std::runtime_error("distance matrix has no data rows");
    for (std::size_t r = 0; r < n; ++r)
        if (rows[r].size() != n)
            parse_error(lines[first_row + r].first,
                        "expected " + std::to_string(n) + " columns, got " +
                            std::to_string(rows[r].size()));
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    } else if (labels.size() != n) {
        parse_error(lines[0].first, "header has " + std::to_string(labels.size()) +
                                        " labels for " + std::to_string(n) + " rows");
    }
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return FiniteMetricSpace::from_matrix(std::move(labels), std::move(flat));
}

FiniteMetricSpace read_distance_matrix_file(const std::string& path) {
    return read_file_with(path, [](std::istream& in) { return read_distance_matrix(in); });
}

std::vector<std::vector<double>> read_point_cloud(std::istream& in) {
    auto lines = content_lines(in);
    std::vector<std::vector<double>> points;
    for (const auto& [no, line] : lines) {
        auto tokens = tokenize(line);
        std::vector<double> point;
        for (const auto& t : tokens) {
            double v;
            if (!parse_double(t, v)) parse_error(no, "bad number '" + t + "'");
            point.push_back(v);
        }
        if (!points.empty() && point.size() != points.front().size())
            parse_error(no, "inconsistent point dimension");
        points.push_back(std::move(point));
    }
    if (points.empty()) throw std::runtime_error("empty point cloud");
    return points;
}

std::vector<std::vector<double>> read_point_cloud_file(const std::string& path) {
    return read_file_with(path, [](std::istream& in) { return read_point_cloud(in); });
}

SpikeTrains read_spike_trains(std::istream& in) {
    auto lines = content_lines(in);
    SpikeTrains trains;
    for (const auto& [no, line] : lines) {
        auto tokens = tokenize(line);
        std::vector<double> train;
        for (const auto& t : tokens) {
            double v;
            if (!parse_double(t, v)) parse_error(no, "bad number '" + t + "'");
            if (!train.empty() && v <= train.back())
                parse_error(no, "spike times must be strictly increasing");
            train.push_back(v);
        }
        trains.trains.push_back(std::move(train));
    }
    if (trains.trains.empty()) throw std::runtime_error("empty spike-train file");
    return trains;
}

SpikeTrains read_spike_trains_file(const std::string& path) {
    return read_file_with(path, [](std::istream& in) { return read_spike_trains(in); });
}

std::string format_double(double v) {
    std::ostringstream oss;
    // shortest representation that round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        oss.str("");
        oss << std::setprecision(prec) << v;
        double back;
        if (parse_double(oss.str(), back) && back == v) break;
    }
    return oss.str();
}

void write_diagram_document(std::ostream& out, const DiagramDocument& doc) {
    out << "# tdakit diagram\n";
    out << "tool: " << doc.tool << "\n";
    out << "digest: " << (doc.digest.empty() ? "-" : doc.digest) << "\n";
    if (doc.spec) {
        out << "spectrum:";
        for (double v : doc.spec->values) out << " " << format_double(v);
        out << "\n";
    }
    for (const auto& [dim, diagram] : doc.diagrams) {
        out << "dim: " << dim << "\n";
        PersistenceDiagram sorted = diagram;
        sorted.sort();
        for (const auto& p : sorted.points) {
            out << format_double(p.birth) << " ";
            if (std::isinf(p.death)) out << "inf";
            else out << format_double(p.death);
            out << "\n";
        }
    }
}

DiagramDocument read_diagram_document(std::istream& in) {
    DiagramDocument doc;
    doc.tool.clear();
    std::string line;
    std::size_t no = 0;
    int current_dim = -1;
    bool have_dim = false;
    while (std::getline(in, line)) {
        ++no;
        if (is_comment_or_blank(line)) continue;
        if (line.rfind("tool:", 0) == 0) {
            doc.tool = line.substr(5);
            doc.tool.erase(0, doc.tool.find_first_not_of(' '));
            continue;
        }
        if (line.rfind("digest:", 0) == 0) {
            doc.digest = line.substr(7);
            doc.digest.erase(0, doc.digest.find_first_not_of(' '));
            if (doc.digest == "-") doc.digest.clear();
            continue;
        }
        if (line.rfind("spectrum:", 0) == 0) {
            Spectrum spec;
            for (const auto& t : tokenize(line.substr(9))) {
                double v;
                if (!parse_double(t, v)) parse_error(no, "bad spectrum value '" + t + "'");
                spec.values.push_back(v);
            }
            doc.spec = std::move(spec);
            continue;
        }
        if (line.rfind("dim:", 0) == 0) {
            auto tokens = tokenize(line.substr(4));
            if (tokens.size() != 1) parse_error(no, "bad dim line");
            current_dim = std::stoi(tokens[0]);
            have_dim = true;
            doc.diagrams.emplace(current_dim, PersistenceDiagram{});
            continue;
        }
        auto tokens = tokenize(line);
        if (tokens.size() != 2) parse_error(no, "expected 'birth death'");
        if (!have_dim) parse_error(no, "point before any dim header");
        double birth, death;
        if (!parse_double(tokens[0], birth)) parse_error(no, "bad birth '" + tokens[0] + "'");
        if (tokens[1] == "inf") death = std::numeric_limits<double>::infinity();
        else if (!parse_double(tokens[1], death))
            parse_error(no, "bad death '" + tokens[1] + "'");
        doc.diagrams[current_dim].points.push_back({birth, death});
    }
    return doc;
}

DiagramDocument read_diagram_document_file(const std::string& path) {
    return read_file_with(path, [](std::istream& in) { return read_diagram_document(in); });
}

std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream oss;
    oss << std::hex << std::setfill('0') << std::setw(16) << h;
    return oss.str();
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream oss;
    oss << in.rdbuf();
    return digest_bytes(oss.str());
}

void write_barcode_text(std::ostream& out,
                        const std::map<int, PersistenceDiagram>& diagrams) {
    for (const auto& [dim, diagram] : diagrams) {
        PersistenceDiagram sorted = diagram;
        sorted.sort();
        for (const auto& p : sorted.points) {
            out << dim << " " << format_double(p.birth) << " ";
            if (std::isinf(p.death)) out << "inf";
            else out << format_double(p.death);
            out << "\n";
        }
    }
}

void write_barcode_svg(std::ostream& out,
                       const std::map<int, PersistenceDiagram>& diagrams) {
    // layout constants
    const double left = 40.0, right = 560.0, bar_h = 6.0, gap = 4.0, band_gap = 20.0;
    double max_value = 0.0;
    std::size_t bar_count = 0;
    for (const auto& [dim, diagram] : diagrams) {
        bar_count += diagram.points.size();
        for (const auto& p : diagram.points) {
            max_value = std::max(max_value, p.birth);
            if (!std::isinf(p.death)) max_value = std::max(max_value, p.death);
        }
    }
    if (max_value <= 0.0) max_value = 1.0;
    const double height =
        20.0 + static_cast<double>(bar_count) * (bar_h + gap) +
        static_cast<double>(diagrams.size()) * band_gap + 20.0;
    auto x_of = [&](double v) { return left + (right - left) * v / max_value; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\""
        << static_cast<int>(height) << "\">\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    double y = 20.0;
    for (const auto& [dim, diagram] : diagrams) {
        out << "  <text x=\"4\" y=\"" << y + 4 << "\" font-size=\"12\">H" << dim
            << "</text>\n";
        const char* color = colors[static_cast<std::size_t>(dim) % 5];
        PersistenceDiagram sorted = diagram;
        sorted.sort();
        for (const auto& p : sorted.points) {
            const double x0 = x_of(p.birth);
            const double x1 = std::isinf(p.death) ? right : x_of(p.death);
            out << "  <rect x=\"" << x0 << "\" y=\"" << y << "\" width=\""
                << std::max(x1 - x0, 0.5) << "\" height=\"" << bar_h
                << "\" fill=\"" << color << "\"/>\n";
            if (std::isinf(p.death)) {
                // arrowhead at the right margin
                out << "  <path d=\"M" << right << " " << y - 2 << " L" << right + 8
                    << " " << y + bar_h / 2 << " L" << right << " " << y + bar_h + 2
                    << " Z\" fill=\"" << color << "\"/>\n";
            }
            y += bar_h + gap;
        }
        y += band_gap;
    }
    out << "</svg>\n";
}

void write_dendrogram_merges(std::ostream& out, const Dendrogram& dendrogram,
                             const std::vector<std::string>& labels) {
    for (const auto& m : dendrogram.merges)
        out << format_double(m.scale) << "\t" << labels[m.block_a] << "\t"
            << labels[m.block_b] << "\n";
}

void write_dendrogram_document(std::ostream& out, const Dendrogram& dendrogram,
                               const std::vector<std::string>& labels) {
    out << "# tdakit dendrogram\n";
    out << "leaves:";
    for (const auto& l : labels) out << " " << l;
    out << "\n";
    for (const auto& m : dendrogram.merges)
        out << "merge: " << format_double(m.scale) << " " << labels[m.block_a] << " "
            << labels[m.block_b] << "\n";
}

void write_ultrametric(std::ostream& out, const Ultrametric& u,
                       const std::vector<std::string>& labels) {
    for (const auto& l : labels) out << (&l == &labels.front() ? "" : " ") << l;
    out << "\n";
    for (std::size_t i = 0; i < u.n; ++i) {
        for (std::size_t j = 0; j < u.n; ++j)
            out << (j ? " " : "") << format_double(u(i, j));
        out << "\n";
    }
}

void write_filtration_dump(std::ostream& out, const Filtration& filtration) {
    for (const auto& e : filtration.entries) {
        out << format_double(e.value) << "\t";
        for (std::size_t i = 0; i < e.simplex.vertices.size(); ++i)
            out << (i ? "," : "") << e.simplex.vertices[i];
        out << "\n";
    }
}

}  // namespace tda::io
