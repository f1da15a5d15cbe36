#pragma once

#include <random>
#include <string>

#include "hamcirc/hamcirc.hpp"
#include "oracles.hpp"

namespace testing_support {

inline constexpr int kPropertyCases = 1000;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'cafe'f00dULL ^ salt); }

inline hamcirc::Multigraph to_multigraph(const oracle::SimpleGraph& g) {
  hamcirc::Multigraph m;
  for (int v = 0; v < g.n; ++v) m.add_vertex(std::to_string(v));
  for (auto [u, v] : g.edges) m.add_edge(static_cast<hamcirc::VertexId>(u), static_cast<hamcirc::VertexId>(v));
  return m;
}

inline oracle::SimpleGraph to_simple(const hamcirc::Multigraph& m) {
  oracle::SimpleGraph g{static_cast<int>(m.vertex_count()), {}};
  for (const hamcirc::Edge& e : m.edges()) g.add(static_cast<int>(e.u), static_cast<int>(e.v));
  return g;
}

inline std::string corpus_path(const std::string& file) { return std::string(HAMCIRC_CORPUS_DIR) + "/" + file; }

}  // namespace testing_support
