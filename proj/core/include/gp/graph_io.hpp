#pragma once

#include <string>

#include "gp/gp_graph.hpp"

namespace gp {

enum class LabelMode { poly, log, index };

enum class ExportFormat { dot, json, csv_edges };

/// Deterministic serialization of a GP-graph. DOT uses `graph` for
/// undirected and `digraph` for directed output; JSON carries the field
/// descriptor, k, n, directedness and the arc list; CSV is an edge list
/// with header "u,v".
std::string export_graph(const GPGraph& g, ExportFormat format,
                         LabelMode labels = LabelMode::poly);

std::string vertex_label(const GPGraph& g, long idx, LabelMode labels);

}  // namespace gp
