#pragma once

// A finite graph is outerplanar (no K4 and no K2,3 minor) exactly when the
// graph obtained by adding one vertex adjacent to everything is planar.

#include <cstddef>
#include <set>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "hamcirc/multigraph.hpp"

namespace hamcirc {

inline bool is_planar(const Multigraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.vertex_count());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    if (seen.insert(e.ends()).second) boost::add_edge(e.u, e.v, bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

/// Parallel edges are collapsed first; they never create K4 or K2,3 minors.
inline bool is_outerplanar(const Multigraph& g) {
  Multigraph apex = g.simple_support();
  const VertexId hub = apex.add_vertex("\x01apex");
  for (VertexId v = 0; v < g.vertex_count(); ++v) apex.add_edge(hub, v);
  return is_planar(apex);
}

}  // namespace hamcirc
