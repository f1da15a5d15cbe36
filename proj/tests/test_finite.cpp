#include <gtest/gtest.h>

#include <fstream>

#include "json.hpp"
#include "support/common.hpp"

using namespace hamcirc;

namespace {

bool walks_graph(const Multigraph& g, const Cycle& c) {
  if (c.size() != g.vertex_count()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (g.multiplicity(c[i], c[(i + 1) % c.size()]) == 0) return false;
  }
  return std::set<VertexId>(c.begin(), c.end()).size() == c.size();
}

/// Cay(D_2k; a, b) with a = reflection and r = ab written out directly from
/// the multiplication table of the symmetries of a k-gon as permutations.
Multigraph dihedral_oracle(int k) {
  using Perm = std::vector<int>;
  auto compose = [](const Perm& x, const Perm& y) {  // x then y
    Perm out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[static_cast<std::size_t>(x[i])];
    return out;
  };
  Perm a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    a[static_cast<std::size_t>(i)] = (k - i) % k;
    b[static_cast<std::size_t>(i)] = (k + 1 - i) % k;
  }
  std::map<Perm, VertexId> index;
  std::vector<Perm> elements{Perm(static_cast<std::size_t>(k))};
  std::iota(elements[0].begin(), elements[0].end(), 0);
  index[elements[0]] = 0;
  Multigraph g;
  g.add_vertex("0");
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm* s : {&a, &b}) {
      const Perm y = compose(elements[i], *s);
      auto [it, fresh] = index.emplace(y, static_cast<VertexId>(elements.size()));
      if (fresh) {
        elements.push_back(y);
        g.add_vertex(std::to_string(it->second));
      }
      if (seen.insert(std::minmax(static_cast<VertexId>(i), it->second)).second) g.add_edge(static_cast<VertexId>(i), it->second);
    }
  }
  return g;
}

}  // namespace

TEST(Finite, SpecParsing) {
  const FiniteCayleySpec c = parse_finite_spec("cyclic:8:1,2");
  EXPECT_EQ(c.connection.size(), 4u);
  const FiniteCayleySpec d = parse_finite_spec("dihedral:12:a,b,aba");
  EXPECT_EQ(d.order, 12);
  EXPECT_EQ(d.connection.size(), 3u);
  EXPECT_EQ(parse_finite_spec("dihedral:10:(ab)^2,(ab)^-2").connection.size(), 2u);
  EXPECT_THROW(parse_finite_spec("cyclic:8"), ParseError);
  EXPECT_THROW(parse_finite_spec("quaternion:8:1"), ParseError);
  EXPECT_THROW(parse_finite_spec("dihedral:7:a,b"), ParseError);
  EXPECT_THROW(parse_finite_spec("dihedral:10:a,c"), ParseError);
  EXPECT_THROW(parse_finite_spec("cyclic:x:1"), ParseError);
}

TEST(Finite, DihedralArithmetic) {
  const FiniteCayleySpec d = parse_finite_spec("dihedral:10:a,b");
  const GroupElement a{0, true}, r{1, false};
  EXPECT_EQ(d.multiply(a, a), GroupElement{});
  EXPECT_EQ(d.multiply(d.multiply(a, r), a), d.inverse(r));
  for (VertexId v = 0; v < 10; ++v) {
    const GroupElement x = d.element(v);
    EXPECT_EQ(d.index(x), v);
    EXPECT_EQ(d.multiply(x, d.inverse(x)), GroupElement{});
  }
}

TEST(Finite, BuildExamples) {
  const Multigraph c6 = build_finite_cayley(parse_finite_spec("cyclic:6:1"));
  EXPECT_EQ(c6.vertex_count(), 6u);
  EXPECT_TRUE(is_cycle(c6));

  const Multigraph d10 = build_finite_cayley(parse_finite_spec("dihedral:10:a,b"));
  EXPECT_EQ(d10.vertex_count(), 10u);
  EXPECT_TRUE(is_cycle(d10));

  const Multigraph circ = build_finite_cayley(cyclic_spec(8, {1, 2}));
  EXPECT_TRUE(circ.is_simple());
  for (VertexId v = 0; v < circ.vertex_count(); ++v) EXPECT_EQ(circ.degree(v), 4u);

  // Antipodal element of Z_8 is its own inverse: the graph stays simple.
  const Multigraph mobius = build_finite_cayley(cyclic_spec(8, {1, 4}));
  for (VertexId v = 0; v < mobius.vertex_count(); ++v) EXPECT_EQ(mobius.degree(v), 3u);

  FiniteCayleySpec bad{GroupFamily::Cyclic, 6, {{1, false}}};
  EXPECT_THROW(build_finite_cayley(bad), PreconditionError);
  FiniteCayleySpec identity{GroupFamily::Cyclic, 6, {{0, false}}};
  EXPECT_THROW(build_finite_cayley(identity), PreconditionError);
}

TEST(Finite, DihedralMatchesPermutationModel) {
  for (int k = 3; k <= 10; ++k) {
    const Multigraph ours = build_finite_cayley(parse_finite_spec("dihedral:" + std::to_string(2 * k) + ":a,b"));
    const Multigraph model = dihedral_oracle(k);
    EXPECT_EQ(ours.vertex_count(), model.vertex_count());
    EXPECT_EQ(ours.edge_count(), model.edge_count());
    EXPECT_TRUE(is_cycle(model));
    EXPECT_TRUE(is_cycle(ours));
  }
}

TEST(Finite, SecondCycle) {
  const Cycle c = second_cycle_cyclic(8, 2);
  EXPECT_EQ(c, (Cycle{0, 2, 1, 3, 4, 5, 6, 7}));
  const Multigraph g = build_finite_cayley(cyclic_spec(8, {1, 2}));
  EXPECT_TRUE(walks_graph(g, c));
  const auto cycles = enumerate_hamiltonian_cycles(g);
  EXPECT_NE(std::find(cycles.begin(), cycles.end(), canonical_cycle(c)), cycles.end());
  EXPECT_NE(canonical_cycle(c), (Cycle{0, 1, 2, 3, 4, 5, 6, 7}));

  EXPECT_TRUE(walks_graph(build_finite_cayley(cyclic_spec(7, {1, 3})), second_cycle_cyclic(7, 3)));
  EXPECT_THROW(second_cycle_cyclic(6, 5), PreconditionError);
  EXPECT_THROW(second_cycle_cyclic(6, 1), PreconditionError);
}

TEST(Finite, UniquenessExamples) {
  EXPECT_EQ(verify_unique_finite(cyclic_spec(9, {1})), (UniquenessResult{1, true}));
  const UniquenessResult circ = verify_unique_finite(cyclic_spec(8, {1, 2}));
  EXPECT_GE(circ.count, 2u);
  EXPECT_FALSE(circ.unique);
  const UniquenessResult cubic = verify_unique_finite(parse_finite_spec("dihedral:12:a,b,aba"));
  EXPECT_GE(cubic.count, 2u);
  EXPECT_FALSE(cubic.unique);
}

TEST(Finite, FamiliesAreUniquelyHamiltonian) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_TRUE(verify_unique_finite(cyclic_spec(n, {1})).unique) << n;
    EXPECT_TRUE(verify_unique_finite(parse_finite_spec("dihedral:" + std::to_string(2 * n) + ":a,b")).unique) << n;
  }
}

TEST(Finite, CirculantsHaveASecondCycle) {
  for (int n = 4; n <= 12; ++n) {
    for (int s = 2; s <= n - 2; ++s) {
      const Multigraph g = build_finite_cayley(cyclic_spec(n, {1, s}));
      const auto cycles = enumerate_hamiltonian_cycles(g);
      EXPECT_GE(cycles.size(), 2u) << n << "," << s;
      const Cycle c = canonical_cycle(second_cycle_cyclic(n, s));
      EXPECT_NE(std::find(cycles.begin(), cycles.end(), c), cycles.end()) << n << "," << s;
    }
  }
}

TEST(Finite, VertexTransitiveCorpus) {
  std::ifstream in(testing_support::corpus_path("manifest.json"));
  const nlohmann::json manifest = nlohmann::json::parse(in);
  ASSERT_FALSE(manifest.empty());
  for (const auto& entry : manifest) {
    std::ifstream file(testing_support::corpus_path(entry.at("file").get<std::string>()));
    const Multigraph g = parse_edge_list(file);
    EXPECT_EQ(g.vertex_count(), entry.at("vertices").get<std::size_t>());
    EXPECT_EQ(is_cycle(g), entry.at("is_cycle").get<bool>());
    const std::size_t count = count_hamiltonian_cycles(g);
    if (entry.at("is_cycle").get<bool>()) {
      EXPECT_EQ(count, 1u) << entry.at("name");
    } else {
      EXPECT_NE(count, 1u) << entry.at("name");
    }
  }
}
