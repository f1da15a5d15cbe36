#pragma once

// Finite quotients Cay(F_n; S)/~l: reduced words sharing their length-l
// prefix are identified, words shorter than l stay singletons, loops are
// dropped and parallel edges are kept (one per group edge).

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamcirc/error.hpp"
#include "hamcirc/multigraph.hpp"
#include "hamcirc/word.hpp"

namespace hamcirc {

inline constexpr std::size_t kDefaultEnumerationBudget = 5'000'000;

struct ClassId {
  Word representative;
  std::size_t level = 0;

  bool operator==(const ClassId&) const = default;
};

inline ClassId class_of(const Word& w, std::size_t level) { return ClassId{w.prefix(level), level}; }

/// Closes `generators` under inversion; sorted shortlex, duplicates dropped.
inline std::vector<Word> symmetric_closure(std::span<const Word> generators) {
  std::vector<Word> out;
  for (const Word& s : generators) {
    if (s.empty()) throw PreconditionError("the identity cannot be a generator");
    out.push_back(s);
    out.push_back(s.inverse());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using GroupEdge = std::pair<Word, Word>;  // endpoints in shortlex order

class QuotientGraph {
 public:
  QuotientGraph(int rank, std::vector<Word> generators, std::size_t level) : rank_(rank), level_(level), generators_(std::move(generators)) {
    if (level == 0) throw PreconditionError("quotient level must be at least 1");
    representatives_ = reduced_words_up_to(rank, level);
    for (VertexId v = 0; v < representatives_.size(); ++v) {
      index_.emplace(representatives_[v], v);
      graph_.add_vertex(word_label(representatives_[v]));
    }
  }

  const Multigraph& graph() const { return graph_; }
  int rank() const { return rank_; }
  std::size_t level() const { return level_; }
  const std::vector<Word>& generators() const { return generators_; }
  const Word& representative(VertexId v) const { return representatives_.at(v); }
  VertexId vertex_of(const Word& w) const { return index_.at(w.prefix(level_)); }
  const GroupEdge& edge_origin(EdgeId e) const { return origins_.at(e); }

  /// Adds the group edges in shortlex order of their endpoints; edges whose
  /// endpoints share a class are skipped.
  void add_group_edges(const std::map<GroupEdge, Word>& edges) {
    for (const auto& [ends, tag] : edges) {
      const VertexId a = vertex_of(ends.first), b = vertex_of(ends.second);
      if (a == b) continue;
      graph_.add_edge(a, b, tag.str());
      origins_.push_back(ends);
    }
  }

 private:
  int rank_;
  std::size_t level_;
  std::vector<Word> generators_;
  std::vector<Word> representatives_;
  std::map<Word, VertexId> index_;
  Multigraph graph_;
  std::vector<GroupEdge> origins_;
};

namespace detail {

/// Records the group edge {x, x t}; the tag is the generator read from the
/// shortlex-smaller endpoint.
inline void record_group_edge(std::map<GroupEdge, Word>& edges, const Word& x, const Word& t) {
  Word y = x * t;
  if (x < y) {
    edges.emplace(GroupEdge{x, std::move(y)}, t);
  } else {
    edges.emplace(GroupEdge{std::move(y), x}, t.inverse());
  }
}

inline std::size_t max_length(std::span<const Word> words) {
  std::size_t m = 0;
  for (const Word& w : words) m = std::max(m, w.length());
  return m;
}

}  // namespace detail

/// Construction straight from the definition: every group edge with an
/// endpoint of length <= level + max |s| is enumerated and projected.
inline QuotientGraph build_quotient_enum(int rank, std::span<const Word> generators, std::size_t level,
                                         std::size_t budget = kDefaultEnumerationBudget) {
  std::vector<Word> s = symmetric_closure(generators);
  const std::size_t reach = level + detail::max_length(s);
  if (reduced_word_count(rank, reach) > budget) {
    throw BudgetError("quotient enumeration needs " + std::to_string(reduced_word_count(rank, reach)) + " words, budget is " + std::to_string(budget));
  }
  QuotientGraph q(rank, s, level);
  std::map<GroupEdge, Word> edges;
  for (const Word& w : reduced_words_up_to(rank, reach)) {
    for (const Word& t : s) detail::record_group_edge(edges, w, t);
  }
  q.add_group_edges(edges);
  return q;
}

/// Per-class construction. A class below full length is a single vertex v
/// with neighbours v t. A full-length class v with last letter a receives
/// one edge per position j of each t with t_j = a^-1, realised by the group
/// edge from v (t_1..t_{j-1})^-1 along t.
inline QuotientGraph build_quotient_local(int rank, std::span<const Word> generators, std::size_t level) {
  std::vector<Word> s = symmetric_closure(generators);
  QuotientGraph q(rank, s, level);
  std::map<GroupEdge, Word> edges;
  for (const Word& v : reduced_words_up_to(rank, level)) {
    if (v.length() < level) {
      for (const Word& t : s) detail::record_group_edge(edges, v, t);
      continue;
    }
    const Letter back_out = v.back().inverse();
    for (const Word& t : s) {
      for (std::size_t j = 0; j < t.length(); ++j) {
        if (t[j] != back_out) continue;
        const Word w = v * t.prefix(j).inverse();
        detail::record_group_edge(edges, w, t);
      }
    }
  }
  q.add_group_edges(edges);
  return q;
}

}  // namespace hamcirc
