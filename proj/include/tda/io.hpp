#ifndef TDA_IO_HPP
#define TDA_IO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tda/cluster.hpp"
#include "tda/complex.hpp"
#include "tda/metric.hpp"
#include "tda/persistence.hpp"

namespace tda::io {

inline constexpr const char* kToolVersion = "0.1.0";

// Plain-text inputs. All formats are UTF-8 with '#'-prefixed comment lines
// ignored; fields are comma- or whitespace-separated. Parse errors carry
// the 1-based line number.

// n rows x n columns, optional header row of labels.
FiniteMetricSpace read_distance_matrix(std::istream& in);
FiniteMetricSpace read_distance_matrix_file(const std::string& path);

// One point per row, d columns.
std::vector<std::vector<double>> read_point_cloud(std::istream& in);
std::vector<std::vector<double>> read_point_cloud_file(const std::string& path);

// One line per cell, whitespace-separated ascending times.
SpikeTrains read_spike_trains(std::istream& in);
SpikeTrains read_spike_trains_file(const std::string& path);

// Diagram document: tool version, input digest, optional spectrum, then
// per-dimension point lists with "inf" for infinite deaths. Deterministic
// point ordering (birth, death).
struct DiagramDocument {
    std::string tool = kToolVersion;
    std::string digest;
    std::optional<Spectrum> spec;
    std::map<int, PersistenceDiagram> diagrams;
};

void write_diagram_document(std::ostream& out, const DiagramDocument& doc);
DiagramDocument read_diagram_document(std::istream& in);
DiagramDocument read_diagram_document_file(const std::string& path);

// FNV-1a over raw bytes, rendered as 16 hex digits.
std::string digest_bytes(const std::string& bytes);
std::string digest_file(const std::string& path);

// Barcode emission: one band per dimension, bars sorted by (birth, death);
// essential bars run to the right margin (with an arrowhead in the SVG).
void write_barcode_text(std::ostream& out,
                        const std::map<int, PersistenceDiagram>& diagrams);
void write_barcode_svg(std::ostream& out,
                       const std::map<int, PersistenceDiagram>& diagrams);

// Dendrogram export: "scale<TAB>memberA<TAB>memberB" lines, members named
// by the labels of the smallest point of each merged block.
void write_dendrogram_merges(std::ostream& out, const Dendrogram& dendrogram,
                             const std::vector<std::string>& labels);
// Structured document: leaf labels plus the merge list.
void write_dendrogram_document(std::ostream& out, const Dendrogram& dendrogram,
                               const std::vector<std::string>& labels);

void write_ultrametric(std::ostream& out, const Ultrametric& u,
                       const std::vector<std::string>& labels);

// "value<TAB>v0,v1,...,vk" lines in filtration order.
void write_filtration_dump(std::ostream& out, const Filtration& filtration);

// Shortest round-trippable decimal rendering of a double ("inf" handled by
// diagram writers separately).
std::string format_double(double v);

}  // namespace tda::io

#endif
