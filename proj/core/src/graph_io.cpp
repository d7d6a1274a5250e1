#include "gp/graph_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace gp {

std::string vertex_label(const GPGraph& g, long idx, LabelMode labels) {
  switch (labels) {
    case LabelMode::poly:
      return g.field().poly_label(idx);
    case LabelMode::log:
      return idx == 0 ? "zero" : "w^" + std::to_string(g.field().discrete_log(idx));
    case LabelMode::index:
      return std::to_string(idx);
  }
  return {};
}

std::string export_graph(const GPGraph& g, ExportFormat format,
                         LabelMode labels) {
  const long q = g.q();
  switch (format) {
    case ExportFormat::dot: {
      std::ostringstream os;
      const char* kind = g.directed() ? "digraph" : "graph";
      const char* sep = g.directed() ? " -> " : " -- ";
      os << kind << " gp {\n";
      for (long u = 0; u < q; ++u)
        os << "  \"" << vertex_label(g, u, labels) << "\";\n";
      for (long u = 0; u < q; ++u) {
        for (long v : g.adjacency()[u]) {
          if (!g.directed() && v < u) continue;  // one line per edge
          os << "  \"" << vertex_label(g, u, labels) << "\"" << sep << "\""
             << vertex_label(g, v, labels) << "\";\n";
        }
      }
      os << "}\n";
      return os.str();
    }
    case ExportFormat::json: {
      nlohmann::ordered_json j;
      j["field"] = nlohmann::ordered_json::parse(g.field().descriptor_json());
      j["k"] = g.k();
      j["n"] = g.n();
      j["directed"] = g.directed();
      auto arcs = nlohmann::ordered_json::array();
      for (long u = 0; u < q; ++u)
        for (long v : g.adjacency()[u]) {
          if (!g.directed() && v < u) continue;
          arcs.push_back({vertex_label(g, u, labels),
                          vertex_label(g, v, labels)});
        }
      j["arcs"] = std::move(arcs);
      return j.dump();
    }
    case ExportFormat::csv_edges: {
      std::ostringstream os;
      os << "u,v\n";
      for (long u = 0; u < q; ++u)
        for (long v : g.adjacency()[u]) {
          if (!g.directed() && v < u) continue;
          os << vertex_label(g, u, labels) << ","
             << vertex_label(g, v, labels) << "\n";
        }
      return os.str();
    }
  }
  return {};
}

}  // namespace gp
