#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "hamcirc/multigraph.hpp"

namespace hamcirc {

/// Components as sorted vertex lists, ordered by their least vertex.
inline std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (EdgeId e : g.incident(comp[i])) {
        const VertexId w = g.edge(e).other(comp[i]);
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Multigraph& g) { return connected_components(g).size() <= 1; }

/// A single simple cycle through every vertex: connected, at least three
/// vertices, every degree exactly 2 counting multiplicity.
inline bool is_cycle(const Multigraph& g) {
  if (g.vertex_count() < 3) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

/// δ(A): the edges with exactly one endpoint in `side`.
struct EdgeCut {
  std::vector<VertexId> side;
  std::vector<EdgeId> cut_edges;
};

inline std::vector<EdgeId> boundary_edges(const Multigraph& g, std::span<const VertexId> side) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : side) in.at(v) = true;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in[g.edge(e).u] != in[g.edge(e).v]) out.push_back(e);
  }
  return out;
}

/// An edge cut δ(A) of `g` whose intersection with the edge set `factor`
/// is exactly {e1, e2}, if one exists.
///
/// A must be a union of components of factor − {e1, e2} with e1 and e2 each
/// crossing, which reduces the search to two-colouring those components.
inline std::optional<EdgeCut> min_edge_cuts_separating(const Multigraph& g, std::span<const EdgeId> factor, EdgeId e1, EdgeId e2) {
  if (e1 == e2) return std::nullopt;
  const std::set<EdgeId> f(factor.begin(), factor.end());
  if (!f.contains(e1) || !f.contains(e2)) return std::nullopt;

  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto root = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : f) {
    if (e == e1 || e == e2) continue;
    parent[root(g.edge(e).u)] = root(g.edge(e).v);
  }

  // colour[c] in {-1 unset, 0 outside, 1 inside}
  std::vector<int> colour(g.vertex_count(), -1);
  const VertexId a1 = root(g.edge(e1).u), b1 = root(g.edge(e1).v);
  const VertexId a2 = root(g.edge(e2).u), b2 = root(g.edge(e2).v);
  if (a1 == b1 || a2 == b2) return std::nullopt;
  colour[a1] = 1;
  colour[b1] = 0;
  auto force = [&](VertexId c, int value) {
    if (colour[c] == -1) colour[c] = value;
    return colour[c] == value;
  };
  if (colour[a2] != -1) {
    if (!force(b2, 1 - colour[a2])) return std::nullopt;
  } else if (colour[b2] != -1) {
    if (!force(a2, 1 - colour[b2])) return std::nullopt;
  } else {
    colour[a2] = 1;
    colour[b2] = 0;
  }

  EdgeCut cut;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (colour[root(v)] == 1) cut.side.push_back(v);
  }
  cut.cut_edges = boundary_edges(g, cut.side);
  return cut;
}

}  // namespace hamcirc
