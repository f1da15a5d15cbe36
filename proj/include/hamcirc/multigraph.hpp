#pragma once

// Finite undirected multigraph with labelled vertices and optionally tagged
// edges. Parallel edges are kept; loops are rejected.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hamcirc/error.hpp"

namespace hamcirc {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::string tag;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  std::pair<VertexId, VertexId> ends() const { return std::minmax(u, v); }
};

class Multigraph {
 public:
  Multigraph() = default;

  /// Adds a vertex; labels must be unique.
  VertexId add_vertex(std::string label) {
    if (index_.contains(label)) throw PreconditionError("duplicate vertex label '" + label + "'");
    const VertexId id = labels_.size();
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    incidence_.emplace_back();
    return id;
  }

  VertexId vertex(std::string_view label) {
    if (auto id = find(label)) return *id;
    return add_vertex(std::string(label));
  }

  EdgeId add_edge(VertexId u, VertexId v, std::string tag = {}) {
    if (u >= labels_.size() || v >= labels_.size()) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("loop at vertex '" + labels_[u] + "'");
    const EdgeId id = edges_.size();
    edges_.push_back(Edge{u, v, std::move(tag)});
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
    return id;
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Number of parallel edges joining u and v.
  std::size_t multiplicity(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(std::count_if(incidence_.at(u).begin(), incidence_.at(u).end(), [&](EdgeId e) { return edges_[e].other(u) == v; }));
  }

  /// Same vertices, one edge per adjacent pair (first tag wins).
  Multigraph simple_support() const {
    Multigraph g = vertices_only();
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : edges_) {
      if (seen.insert(e.ends()).second) g.add_edge(e.u, e.v, e.tag);
    }
    return g;
  }

  bool is_simple() const {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : edges_) {
      if (!seen.insert(e.ends()).second) return false;
    }
    return true;
  }

  /// Spanning subgraph keeping the edges accepted by `keep(edge_id, edge)`.
  template <class Pred>
  Multigraph spanning_subgraph(Pred keep) const {
    Multigraph g = vertices_only();
    for (EdgeId i = 0; i < edges_.size(); ++i) {
      if (keep(i, edges_[i])) g.add_edge(edges_[i].u, edges_[i].v, edges_[i].tag);
    }
    return g;
  }

  Multigraph without_edges(std::span<const EdgeId> removed) const {
    const std::set<EdgeId> drop(removed.begin(), removed.end());
    return spanning_subgraph([&](EdgeId i, const Edge&) { return !drop.contains(i); });
  }

  /// Multiset of (label, label, tag) triples with the label pair sorted.
  std::multiset<std::tuple<std::string, std::string, std::string>> labelled_edges() const {
    std::multiset<std::tuple<std::string, std::string, std::string>> out;
    for (const Edge& e : edges_) {
      auto [a, b] = std::minmax(labels_[e.u], labels_[e.v]);
      out.emplace(a, b, e.tag);
    }
    return out;
  }

 private:
  Multigraph vertices_only() const {
    Multigraph g;
    for (const std::string& l : labels_) g.add_vertex(l);
    return g;
  }

  std::vector<std::string> labels_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Reads the edge-list format: one `u v` pair per line, `#` starts a comment.
/// Vertices are numbered in order of first appearance.
inline Multigraph parse_edge_list(std::istream& in) {
  Multigraph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u)) continue;
    if (!(fields >> v) || (fields >> extra)) throw ParseError("line " + std::to_string(lineno) + ": expected `u v`");
    const VertexId a = g.vertex(u);
    const VertexId b = g.vertex(v);
    g.add_edge(a, b);
  }
  return g;
}

inline Multigraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

}  // namespace hamcirc
