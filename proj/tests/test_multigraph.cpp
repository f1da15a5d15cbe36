#include <gtest/gtest.h>

#include <fstream>

#include "support/common.hpp"

using namespace hamcirc;

namespace {

Multigraph cycle_graph(std::size_t n) {
  Multigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST(Multigraph, Basics) {
  Multigraph g;
  const VertexId a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.vertex("c");
  EXPECT_EQ(g.vertex("a"), a);
  g.add_edge(a, b, "x");
  g.add_edge(a, b, "y");
  g.add_edge(b, c);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(b), 3u);
  EXPECT_EQ(g.multiplicity(a, b), 2u);
  EXPECT_FALSE(g.is_simple());
  EXPECT_TRUE(g.simple_support().is_simple());
  EXPECT_EQ(g.simple_support().edge_count(), 2u);
  EXPECT_THROW(g.add_edge(a, a), PreconditionError);
  EXPECT_THROW(g.add_vertex("a"), PreconditionError);
  EXPECT_THROW(g.add_edge(a, 7), PreconditionError);
  EXPECT_FALSE(g.find("zz").has_value());
  EXPECT_EQ(g.edge(0).other(a), b);
}

TEST(Multigraph, CycleRecognition) {
  EXPECT_TRUE(is_cycle(cycle_graph(3)));
  EXPECT_TRUE(is_cycle(cycle_graph(9)));
  Multigraph two = cycle_graph(3);
  Multigraph digon;
  digon.add_vertex("0");
  digon.add_vertex("1");
  digon.add_edge(0, 1);
  digon.add_edge(0, 1);
  EXPECT_FALSE(is_cycle(digon));
  // Two disjoint triangles: 2-regular but disconnected.
  Multigraph twins = cycle_graph(3);
  for (int i = 0; i < 3; ++i) twins.add_vertex("t" + std::to_string(i));
  twins.add_edge(3, 4);
  twins.add_edge(4, 5);
  twins.add_edge(5, 3);
  EXPECT_FALSE(is_cycle(twins));
  EXPECT_EQ(connected_components(twins).size(), 2u);
  two.add_edge(0, 1);
  EXPECT_FALSE(is_cycle(two));
  EXPECT_FALSE(is_cycle(Multigraph{}));
}

TEST(Multigraph, EdgeListParsing) {
  const Multigraph g = parse_edge_list("# triangle\n0 1\n1 2  # trailing\n\n2 0\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_TRUE(is_cycle(g));
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 3\n"), PreconditionError);

  std::ifstream in(testing_support::corpus_path("petersen.edges"));
  const Multigraph p = parse_edge_list(in);
  EXPECT_EQ(p.vertex_count(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
}

TEST(Multigraph, DotGolden) {
  Multigraph g;
  g.add_vertex("1");
  g.add_vertex("a\"b");
  g.add_edge(0, 1, "s");
  g.add_edge(0, 1);
  DotOptions options;
  options.highlight = {1};
  EXPECT_EQ(export_dot(g, options), "graph {\n  \"1\";\n  \"a\\\"b\";\n  \"1\" -- \"a\\\"b\" [label=\"s\"];\n  \"1\" -- \"a\\\"b\" [penwidth=3];\n}\n");
  EXPECT_EQ(export_dot(Multigraph{}), "graph {\n}\n");
  options.edge_labels = false;
  options.highlight.clear();
  EXPECT_EQ(export_dot(g, options), "graph {\n  \"1\";\n  \"a\\\"b\";\n  \"1\" -- \"a\\\"b\";\n  \"1\" -- \"a\\\"b\";\n}\n");
}

TEST(Multigraph, SubgraphsAndLabelledEdges) {
  Multigraph g = cycle_graph(4);
  g.add_edge(0, 2, "chord");
  const Multigraph no_chord = g.spanning_subgraph([](EdgeId, const Edge& e) { return e.tag.empty(); });
  EXPECT_TRUE(is_cycle(no_chord));
  const std::vector<EdgeId> drop{0, 2};
  EXPECT_EQ(g.without_edges(drop).edge_count(), 3u);
  const auto labelled = g.labelled_edges();
  EXPECT_TRUE(labelled.contains({"0", "2", "chord"}));
  EXPECT_TRUE(labelled.contains({"0", "3", ""}));
}

TEST(Multigraph, EdgeCutsAgainstSubsetSearch) {
  // Random small multigraphs with a random 2-factor-like edge set: compare the
  // two-colouring search with trying every vertex subset.
  auto rng = testing_support::rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    Multigraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    const std::size_t m = n + rng() % (2 * n);
    for (std::size_t k = 0; k < m; ++k) {
      const VertexId u = rng() % n;
      VertexId v = rng() % n;
      if (u == v) v = (v + 1) % n;
      g.add_edge(u, v);
    }
    std::vector<EdgeId> factor;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (rng() % 2) factor.push_back(e);
    }
    if (factor.size() < 2) continue;
    const EdgeId e1 = factor[rng() % factor.size()], e2 = factor[rng() % factor.size()];
    const auto cut = min_edge_cuts_separating(g, factor, e1, e2);

    bool exists = false;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n) && !exists; ++mask) {
      std::vector<VertexId> side;
      for (VertexId v = 0; v < n; ++v) {
        if (mask & (1u << v)) side.push_back(v);
      }
      std::set<EdgeId> in_factor;
      for (EdgeId e : boundary_edges(g, side)) {
        if (std::find(factor.begin(), factor.end(), e) != factor.end()) in_factor.insert(e);
      }
      exists = e1 != e2 && in_factor == std::set<EdgeId>{e1, e2};
    }
    ASSERT_EQ(cut.has_value(), exists) << "trial " << trial;
    if (cut) {
      std::set<EdgeId> in_factor;
      for (EdgeId e : cut->cut_edges) {
        if (std::find(factor.begin(), factor.end(), e) != factor.end()) in_factor.insert(e);
      }
      ASSERT_EQ(in_factor, (std::set<EdgeId>{e1, e2}));
      ASSERT_EQ(cut->cut_edges, boundary_edges(g, cut->side));
    }
  }
}
