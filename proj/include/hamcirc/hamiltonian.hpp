#pragma once

// Backtracking enumeration of hamiltonian cycles in small graphs.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hamcirc/error.hpp"
#include "hamcirc/multigraph.hpp"

namespace hamcirc {

inline constexpr std::size_t kMaxHamiltonianVertices = 24;
inline constexpr std::size_t kMaxSmithVertices = 16;

using Cycle = std::vector<VertexId>;

/// Calls `visit(cycle)` once per hamiltonian cycle of the simple support of
/// `g`. Each cycle starts at vertex 0 and runs in the direction whose second
/// vertex is smaller.
template <class Visit>
void for_each_hamiltonian_cycle(const Multigraph& g, Visit&& visit) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxHamiltonianVertices) throw BudgetError("hamiltonian enumeration is limited to " + std::to_string(kMaxHamiltonianVertices) + " vertices");
  if (n < 3) return;

  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t all = (1u << n) - 1;

  Cycle path;
  path.reserve(n);
  path.push_back(0);

  auto extend = [&](auto& self, VertexId at, std::uint32_t visited) -> void {
    if (visited == all) {
      if ((adj[at] & 1u) && path[1] < path.back()) visit(static_cast<const Cycle&>(path));
      return;
    }
    // Every unvisited vertex needs a free neighbour to enter and one to leave.
    const std::uint32_t open = ~visited & all;
    for (std::uint32_t rest = open; rest; rest &= rest - 1) {
      const auto w = static_cast<VertexId>(std::countr_zero(rest));
      const std::uint32_t reach = adj[w] & (open | (1u << at) | 1u);
      if (std::popcount(reach) < 2) return;
    }
    for (std::uint32_t next = adj[at] & open; next; next &= next - 1) {
      const auto w = static_cast<VertexId>(std::countr_zero(next));
      path.push_back(w);
      self(self, w, visited | (1u << w));
      path.pop_back();
    }
  };
  extend(extend, 0, 1u);
}

inline std::vector<Cycle> enumerate_hamiltonian_cycles(const Multigraph& g) {
  std::vector<Cycle> out;
  for_each_hamiltonian_cycle(g, [&](const Cycle& c) { out.push_back(c); });
  return out;
}

inline std::size_t count_hamiltonian_cycles(const Multigraph& g) {
  std::size_t count = 0;
  for_each_hamiltonian_cycle(g, [&](const Cycle&) { ++count; });
  return count;
}

inline bool cycle_uses_edge(const Cycle& c, VertexId u, VertexId v) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const VertexId a = c[i], b = c[(i + 1) % c.size()];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

/// Rotates to start at the least vertex and picks the direction with the
/// smaller second vertex.
inline Cycle canonical_cycle(Cycle c) {
  if (c.size() < 3) return c;
  const auto least = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), least, c.end());
  if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return c;
}

/// Number of hamiltonian cycles through edge `e` of a simple cubic graph.
inline std::size_t smith_parity(const Multigraph& g, EdgeId e) {
  if (g.vertex_count() > kMaxSmithVertices) throw BudgetError("smith_parity is limited to " + std::to_string(kMaxSmithVertices) + " vertices");
  if (!g.is_simple()) throw PreconditionError("smith_parity needs a simple graph");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw PreconditionError("smith_parity needs a cubic graph");
  }
  const Edge& edge = g.edge(e);
  std::size_t count = 0;
  for_each_hamiltonian_cycle(g, [&](const Cycle& c) {
    if (cycle_uses_edge(c, edge.u, edge.v)) ++count;
  });
  return count;
}

}  // namespace hamcirc
