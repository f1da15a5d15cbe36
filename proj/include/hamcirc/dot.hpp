#pragma once

#include <set>
#include <string>
#include <string_view>

#include "hamcirc/multigraph.hpp"

namespace hamcirc {

struct DotOptions {
  std::set<EdgeId> highlight;  // drawn bold
  bool edge_labels = true;
};

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

/// Undirected DOT, vertices then edges, both in index order.
inline std::string export_dot(const Multigraph& g, const DotOptions& options = {}) {
  std::string out = "graph {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out += "  " + dot_quote(g.label(v)) + ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out += "  " + dot_quote(g.label(edge.u)) + " -- " + dot_quote(g.label(edge.v));
    std::string attrs;
    if (options.edge_labels && !edge.tag.empty()) attrs += "label=" + dot_quote(edge.tag);
    if (options.highlight.contains(e)) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "penwidth=3";
    }
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  return out + "}\n";
}

}  // namespace hamcirc
