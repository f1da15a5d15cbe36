#pragma once

// Normal forms in Z_m * Z_n = <a, b | a^m = b^n = 1>, the quotients
// Cay(Z_m * Z_n; S)/≡_r with S ⊆ {a^±1, (ab)^±1}, and finite-depth checks
// that Cay(Z_m * Z_n; (ab)^±1) quotients to cycles.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamcirc/error.hpp"
#include "hamcirc/graph_algorithms.hpp"
#include "hamcirc/multigraph.hpp"

namespace hamcirc {

inline constexpr std::size_t kDefaultLeggeBudget = 100'000;

struct Syllable {
  char generator = 'a';  // 'a' or 'b'
  int exponent = 1;      // in 1 .. order-1

  auto operator<=>(const Syllable&) const = default;
};

/// Reduced word of Z_m * Z_n: alternating syllables with nonzero exponents.
class FPWord {
 public:
  FPWord(int m, int n) : m_(m), n_(n) {
    if (m < 2 || n < 2) throw PreconditionError("free product factors need order >= 2");
  }

  static FPWord identity(int m, int n) { return FPWord(m, n); }
  static FPWord a(int m, int n, int exponent = 1) { return FPWord(m, n).append({'a', exponent}); }
  static FPWord b(int m, int n, int exponent = 1) { return FPWord(m, n).append({'b', exponent}); }

  /// `a2b1a1`, `a^2ba`, `ab`, `1` or the empty string; exponents may be
  /// negative and default to 1.
  static FPWord parse(std::string_view text, int m, int n) {
    FPWord w(m, n);
    if (text == "1") return w;
    std::size_t i = 0;
    while (i < text.size()) {
      const char g = text[i++];
      if (g != 'a' && g != 'b') throw ParseError("unexpected character '" + std::string(1, g) + "' in free-product word");
      if (i < text.size() && text[i] == '^') ++i;
      const std::size_t start = i;
      if (i < text.size() && text[i] == '-') ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      const std::string digits(text.substr(start, i - start));
      int e = 1;
      if (!digits.empty()) {
        if (digits == "-") throw ParseError("missing exponent in free-product word");
        e = std::stoi(digits);
      }
      w.append({g, e});
    }
    return w;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  int order(char generator) const { return generator == 'a' ? m_ : n_; }

  std::size_t b_syllable_count() const {
    return static_cast<std::size_t>(std::count_if(syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.generator == 'b'; }));
  }

  /// Right-multiplies by one syllable, merging and cancelling as needed.
  FPWord& append(Syllable s) {
    const int ord = order(s.generator);
    int e = ((s.exponent % ord) + ord) % ord;
    if (e == 0) return *this;
    if (!syllables_.empty() && syllables_.back().generator == s.generator) {
      e = (syllables_.back().exponent + e) % ord;
      if (e == 0) {
        syllables_.pop_back();
      } else {
        syllables_.back().exponent = e;
      }
      return *this;
    }
    syllables_.push_back({s.generator, e});
    return *this;
  }

  FPWord inverse() const {
    FPWord out(m_, n_);
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) out.append({it->generator, -it->exponent});
    return out;
  }

  /// Keeps the syllables up to and including the `count`-th b-syllable.
  FPWord through_b_syllable(std::size_t count) const {
    FPWord out(m_, n_);
    std::size_t seen = 0;
    for (const Syllable& s : syllables_) {
      if (seen == count) break;
      out.syllables_.push_back(s);
      if (s.generator == 'b') ++seen;
    }
    return out;
  }

  /// Exponents above 1 are written out: `a2ba`; the identity is `1`.
  std::string str() const {
    if (syllables_.empty()) return "1";
    std::string out;
    for (const Syllable& s : syllables_) {
      out.push_back(s.generator);
      if (s.exponent != 1) out += std::to_string(s.exponent);
    }
    return out;
  }

  bool operator==(const FPWord& other) const { return m_ == other.m_ && n_ == other.n_ && syllables_ == other.syllables_; }
  std::strong_ordering operator<=>(const FPWord& other) const {
    if (auto c = m_ <=> other.m_; c != 0) return c;
    if (auto c = n_ <=> other.n_; c != 0) return c;
    if (auto c = syllables_.size() <=> other.syllables_.size(); c != 0) return c;
    return syllables_ <=> other.syllables_;
  }

 private:
  int m_;
  int n_;
  std::vector<Syllable> syllables_;
};

inline FPWord fp_multiply(const FPWord& u, const FPWord& v) {
  if (u.m() != v.m() || u.n() != v.n()) throw PreconditionError("free-product words have different orders");
  FPWord out = u;
  for (const Syllable& s : v.syllables()) out.append(s);
  return out;
}

inline FPWord operator*(const FPWord& u, const FPWord& v) { return fp_multiply(u, v); }

struct RClass {
  FPWord representative;
  std::size_t depth = 0;

  bool operator==(const RClass&) const = default;
};

/// Words agreeing through their r-th b-syllable are identified; words with
/// fewer than r b-syllables are singletons.
inline RClass requiv_class(const FPWord& w, std::size_t r) {
  if (r == 0) throw PreconditionError("class depth must be at least 1");
  return RClass{w.through_b_syllable(r), r};
}

/// Every reduced word with at most `max_b` b-syllables, shortest first.
inline std::vector<FPWord> fp_words_up_to(int m, int n, std::size_t max_b, std::size_t budget = kDefaultLeggeBudget) {
  std::vector<FPWord> out{FPWord(m, n)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const FPWord w = out[i];
    for (char g : {'a', 'b'}) {
      if (!w.empty() && w.syllables().back().generator == g) continue;
      if (g == 'b' && w.b_syllable_count() == max_b) continue;
      for (int e = 1; e < w.order(g); ++e) {
        out.push_back(FPWord(w).append({g, e}));
        if (out.size() > budget) throw BudgetError("free-product enumeration exceeds " + std::to_string(budget) + " words");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class LeggeGenerator { A, AB };

inline std::string_view to_string(LeggeGenerator g) { return g == LeggeGenerator::A ? "a" : "ab"; }

inline FPWord legge_element(LeggeGenerator g, int m, int n) {
  return g == LeggeGenerator::A ? FPWord::a(m, n) : FPWord::a(m, n) * FPWord::b(m, n);
}

/// A group edge x -> x g, stored with the positive generator.
struct LeggeEdge {
  FPWord origin;
  LeggeGenerator generator;

  auto operator<=>(const LeggeEdge&) const = default;
};

struct LeggeQuotient {
  int m = 0;
  int n = 0;
  std::size_t depth = 0;
  Multigraph graph;
  std::vector<FPWord> representatives;
  std::vector<LeggeEdge> origins;  // one per graph edge

  VertexId vertex_of(const FPWord& w) const {
    const FPWord rep = requiv_class(w, depth).representative;
    const auto it = std::lower_bound(representatives.begin(), representatives.end(), rep);
    if (it == representatives.end() || *it != rep) throw InternalError("no class for " + w.str());
    return static_cast<VertexId>(it - representatives.begin());
  }

  std::optional<EdgeId> edge_of(const LeggeEdge& e) const {
    const auto it = std::find(origins.begin(), origins.end(), e);
    if (it == origins.end()) return std::nullopt;
    return static_cast<EdgeId>(it - origins.begin());
  }
};

/// Words with at most r+1 b-syllables cover every non-loop edge incident to
/// a depth-r class, since a or ab changes the b-syllable count by at most one.
inline LeggeQuotient build_legge_quotient(int m, int n, bool include_a, bool include_ab, std::size_t r,
                                          std::size_t budget = kDefaultLeggeBudget) {
  if (m < 3 || n < 2) throw PreconditionError("Legge quotients need m >= 3 and n >= 2");
  if (r == 0) throw PreconditionError("class depth must be at least 1");
  if (!include_a && !include_ab) throw PreconditionError("empty generating set");

  LeggeQuotient q;
  q.m = m;
  q.n = n;
  q.depth = r;
  const std::vector<FPWord> words = fp_words_up_to(m, n, r + 1, budget);

  std::set<FPWord> reps;
  for (const FPWord& w : words) reps.insert(requiv_class(w, r).representative);
  q.representatives.assign(reps.begin(), reps.end());
  for (const FPWord& rep : q.representatives) q.graph.add_vertex(rep.str());

  std::vector<LeggeGenerator> gens;
  if (include_a) gens.push_back(LeggeGenerator::A);
  if (include_ab) gens.push_back(LeggeGenerator::AB);

  std::set<LeggeEdge> edges;
  for (const FPWord& w : words) {
    for (LeggeGenerator g : gens) {
      const FPWord s = legge_element(g, m, n);
      edges.insert({w, g});
      edges.insert({w * s.inverse(), g});
    }
  }
  for (const LeggeEdge& e : edges) {
    const FPWord end = e.origin * legge_element(e.generator, m, n);
    const VertexId u = q.vertex_of(e.origin), v = q.vertex_of(end);
    if (u == v) continue;
    q.graph.add_edge(u, v, std::string(to_string(e.generator)));
    q.origins.push_back(e);
  }
  return q;
}

struct LeggeLevel {
  std::size_t r = 0;
  std::size_t vertices = 0;
  bool circle_is_cycle = false;
  bool full_connected = false;
  bool circle_spans_full = false;

  bool pass() const { return circle_is_cycle && full_connected && circle_spans_full; }
  bool operator==(const LeggeLevel&) const = default;
};

struct LeggeReport {
  int m = 0;
  int n = 0;
  std::vector<LeggeLevel> levels;

  bool pass() const {
    return !levels.empty() && std::all_of(levels.begin(), levels.end(), [](const LeggeLevel& l) { return l.pass(); });
  }
  bool operator==(const LeggeReport&) const = default;
};

/// The (ab)-quotient at each depth is a cycle, and inside the quotient by
/// {a, ab} its edges are exactly the ab-edges on the same vertex set.
inline LeggeReport verify_legge(int m, int n, std::size_t r_max, std::size_t budget = kDefaultLeggeBudget) {
  LeggeReport report{m, n, {}};
  for (std::size_t r = 1; r <= r_max; ++r) {
    const LeggeQuotient circle = build_legge_quotient(m, n, false, true, r, budget);
    const LeggeQuotient full = build_legge_quotient(m, n, true, true, r, budget);
    LeggeLevel level;
    level.r = r;
    level.vertices = circle.graph.vertex_count();
    level.circle_is_cycle = is_cycle(circle.graph);
    level.full_connected = is_connected(full.graph);
    const Multigraph ab_part = full.graph.spanning_subgraph([](EdgeId, const Edge& e) { return e.tag == "ab"; });
    level.circle_spans_full = full.representatives == circle.representatives && ab_part.labelled_edges() == circle.graph.labelled_edges();
    report.levels.push_back(level);
  }
  return report;
}

/// The two ab-edges a^-1 -> b and b a^-1 -> b^2 of the full quotient.
inline std::pair<LeggeEdge, LeggeEdge> legge_cut_pair(int m, int n) {
  const FPWord a_inv = FPWord::a(m, n, -1);
  return {LeggeEdge{a_inv, LeggeGenerator::AB}, LeggeEdge{FPWord::b(m, n) * a_inv, LeggeGenerator::AB}};
}

/// Whether deleting the cut pair from the {a, ab} quotient at depth r
/// disconnects it.
inline bool legge_cut_disconnects(int m, int n, std::size_t r, std::size_t budget = kDefaultLeggeBudget) {
  const LeggeQuotient full = build_legge_quotient(m, n, true, true, r, budget);
  const auto [first, second] = legge_cut_pair(m, n);
  const auto e1 = full.edge_of(first), e2 = full.edge_of(second);
  if (!e1 || !e2) throw InternalError("cut pair edge missing from the Legge quotient");
  const std::vector<EdgeId> removed{*e1, *e2};
  return !is_connected(full.graph.without_edges(removed));
}

}  // namespace hamcirc
