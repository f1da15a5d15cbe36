#pragma once

// Deciding whether Cay(F_n; s^±1) is a hamiltonian circle of
// Cay(F_n; A^±1 ∪ {s^±1}), and classifying s up to automorphism against the
// two canonical words a1²a2²…an² and [a1,a2][a3,a4]…[a(n-1),an].

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamcirc/automorphism.hpp"
#include "hamcirc/error.hpp"
#include "hamcirc/graph_algorithms.hpp"
#include "hamcirc/multigraph.hpp"
#include "hamcirc/quotient.hpp"
#include "hamcirc/whitehead.hpp"
#include "hamcirc/word.hpp"

namespace hamcirc {

// ---------------------------------------------------------------------------
// The graph X_1^s on A^±1 ∪ {1}

inline VertexId x1_vertex(Letter l) { return 1 + static_cast<VertexId>(l.code()); }

/// Cay(F_n; s^±1)/~1 given directly by its edge list:
/// 1 – s_1, s_i^-1 – s_(i+1) for 1 <= i < r, s_r^-1 – 1.
inline Multigraph build_x1(const Word& s) {
  if (s.empty()) throw PreconditionError("X_1^s needs a nontrivial word");
  Multigraph g;
  g.add_vertex("1");
  for (int code = 0; code < 2 * s.rank(); ++code) g.add_vertex(std::string(1, Letter::from_code(code).to_char()));

  auto add = [&](VertexId a, VertexId b, std::string tag) {
    if (a == b) throw InternalError("X_1^s produced a loop for reduced word " + s.str());
    g.add_edge(a, b, std::move(tag));
  };
  const auto letters = s.letters();
  add(0, x1_vertex(letters.front()), std::string(1, letters.front().to_char()));
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    add(x1_vertex(letters[i].inverse()), x1_vertex(letters[i + 1]), std::string{letters[i].to_char(), letters[i + 1].to_char()});
  }
  add(x1_vertex(letters.back().inverse()), 0, std::string(1, letters.back().to_char()));
  return g;
}

/// X_1^w restricted to 1 and the letters of the generators occurring in w.
inline Multigraph build_x1_restricted(const Word& w) {
  const Multigraph full = build_x1(w);
  std::vector<bool> keep(full.vertex_count(), false);
  keep[0] = true;
  for (Letter l : w.letters()) {
    keep[x1_vertex(l)] = true;
    keep[x1_vertex(l.inverse())] = true;
  }
  Multigraph g;
  std::vector<VertexId> remap(full.vertex_count(), 0);
  for (VertexId v = 0; v < full.vertex_count(); ++v) {
    if (keep[v]) remap[v] = g.add_vertex(full.label(v));
  }
  for (const Edge& e : full.edges()) g.add_edge(remap[e.u], remap[e.v], e.tag);
  return g;
}

inline bool all_letter_counts_equal(const Word& w, std::size_t count) {
  for (int g = 1; g <= w.rank(); ++g) {
    if (w.letter_count(g) != count) return false;
  }
  return true;
}

inline bool all_letter_counts_at_most(const Word& w, std::size_t count) {
  for (int g = 1; g <= w.rank(); ++g) {
    if (w.letter_count(g) > count) return false;
  }
  return true;
}

/// a1 a1 a2 a2 ... an an
inline Word squares_word(int rank) {
  Word w(rank);
  for (int g = 1; g <= rank; ++g) {
    w.push_back(Letter(g, +1));
    w.push_back(Letter(g, +1));
  }
  return w;
}

/// [a1,a2][a3,a4]...; needs an even rank.
inline Word commutators_word(int rank) {
  if (rank % 2 != 0) throw PreconditionError("the commutator word needs an even rank");
  Word w(rank);
  for (int g = 1; g < rank; g += 2) {
    for (Letter l : {Letter(g, +1), Letter(g + 1, +1), Letter(g, -1), Letter(g + 1, -1)}) w.push_back(l);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Classification

enum class CanonicalKind { Squares, Commutators, None };

struct CanonicalForm {
  CanonicalKind kind = CanonicalKind::None;
  std::vector<Move> witness;  // maps the input exactly onto the canonical word

  bool operator==(const CanonicalForm&) const = default;
};

inline std::string_view to_string(CanonicalKind k) {
  switch (k) {
    case CanonicalKind::Squares: return "Squares";
    case CanonicalKind::Commutators: return "Commutators";
    case CanonicalKind::None: return "None";
  }
  return "None";
}

/// Both canonical words are automorphically minimal of length 2n, so the
/// orbit closure of the minimised input contains one of them iff s is in
/// its orbit.
inline CanonicalForm classify(int rank, const Word& s, std::size_t orbit_cap = kDefaultOrbitCap) {
  if (rank < 2) throw PreconditionError("classify needs rank >= 2");
  if (s.rank() != rank) throw RankError("word rank differs from n");
  if (s.empty()) return {};
  const OrbitClosure orbit(s, orbit_cap);
  if (const Word sq = squares_word(rank); orbit.contains(sq)) return {CanonicalKind::Squares, orbit.witness(sq).moves()};
  if (rank % 2 == 0) {
    if (const Word cm = commutators_word(rank); orbit.contains(cm)) return {CanonicalKind::Commutators, orbit.witness(cm).moves()};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Certification

enum class Verdict { Yes, No, Unknown };

enum class Reason {
  X1Cycle,              // X_1 of s (or of the witness image) is a cycle
  MissingGenerator,     // the orbit meets a proper free factor F_(n-1)
  X1NotCycleDegreeTwo,  // every #_a^± = 2 but X_1 is not a cycle
  NoCanonicalForm,      // n = 2 and s is not automorphic to a canonical word
  TrivialWord,
  Undecided,
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

inline std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::X1Cycle: return "X1Cycle";
    case Reason::MissingGenerator: return "MissingGenerator";
    case Reason::X1NotCycleDegreeTwo: return "X1NotCycleDegreeTwo";
    case Reason::NoCanonicalForm: return "NoCanonicalForm";
    case Reason::TrivialWord: return "TrivialWord";
    case Reason::Undecided: return "Undecided";
  }
  return "Undecided";
}

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  bool unique = false;
  Reason reason = Reason::Undecided;
  std::vector<Move> witness;  // empty when the decision was made on s itself
  std::vector<std::size_t> checked_levels;
  std::string diagnostic;

  bool operator==(const Certificate&) const = default;
};

struct CertifyOptions {
  std::size_t max_level = 0;  // 0 selects 4 for n = 2 and 3 otherwise
  std::size_t orbit_cap = kDefaultOrbitCap;
};

inline std::size_t default_max_level(int rank) { return rank == 2 ? 4 : 3; }

namespace detail {

/// Cay(F_n; t^±1)/~l is a cycle for every l in 1..max_level; a failure here
/// contradicts the induction that turns an X_1 cycle into a circle.
inline std::vector<std::size_t> verify_circle_quotients(const Word& t, std::size_t max_level) {
  std::vector<std::size_t> levels;
  const std::vector<Word> gens{t};
  for (std::size_t l = 1; l <= max_level; ++l) {
    if (!is_cycle(build_quotient_local(t.rank(), gens, l).graph())) {
      throw InternalError("quotient of Cay(F_n; " + t.str() + ") at level " + std::to_string(l) + " is not a cycle");
    }
    levels.push_back(l);
  }
  return levels;
}

}  // namespace detail

inline Certificate certify(int rank, const Word& s, const CertifyOptions& options = {}) {
  if (rank < 2) throw PreconditionError("certify needs n >= 2");
  if (s.rank() != rank) throw RankError("word rank differs from n");
  const std::size_t max_level = options.max_level ? options.max_level : default_max_level(rank);

  Certificate c;
  if (s.empty()) {
    c.verdict = Verdict::No;
    c.reason = Reason::TrivialWord;
    return c;
  }

  auto yes = [&](const Word& t, std::vector<Move> witness) {
    c.verdict = Verdict::Yes;
    c.reason = Reason::X1Cycle;
    c.unique = all_letter_counts_at_most(s, 2);
    c.witness = std::move(witness);
    c.checked_levels = detail::verify_circle_quotients(t, max_level);
    return c;
  };
  auto no = [&](Reason r, std::vector<Move> witness) {
    c.verdict = Verdict::No;
    c.reason = r;
    c.witness = std::move(witness);
    return c;
  };

  if (all_letter_counts_equal(s, 2)) {
    if (is_cycle(build_x1(s))) return yes(s, {});
    // Degree-two words with a non-cycle X_1 must not be automorphic to a
    // canonical word; check it rather than trust it.
    try {
      if (classify(rank, s, options.orbit_cap).kind != CanonicalKind::None) {
        throw InternalError("word " + s.str() + " has no X_1 cycle yet is automorphic to a canonical word");
      }
    } catch (const BudgetError& e) {
      c.diagnostic = std::string("classification cross-check skipped: ") + e.what();
    }
    return no(Reason::X1NotCycleDegreeTwo, {});
  }

  std::optional<OrbitClosure> orbit;
  try {
    orbit.emplace(s, options.orbit_cap);
  } catch (const BudgetError& e) {
    c.verdict = Verdict::Unknown;
    c.reason = Reason::Undecided;
    c.diagnostic = e.what();
    return c;
  }

  for (const Word& t : orbit->words()) {
    if (t.support_size() < rank) return no(Reason::MissingGenerator, orbit->witness(t).moves());
  }
  std::optional<Word> degree_two;
  for (const Word& t : orbit->words()) {
    if (!all_letter_counts_equal(t, 2)) continue;
    if (is_cycle(build_x1(t))) return yes(t, orbit->witness(t).moves());
    if (!degree_two) degree_two = t;
  }
  if (degree_two) return no(Reason::X1NotCycleDegreeTwo, orbit->witness(*degree_two).moves());
  if (rank == 2) return no(Reason::NoCanonicalForm, {});

  c.verdict = Verdict::Unknown;
  c.reason = Reason::Undecided;
  c.diagnostic = "no orbit element has every letter count equal to 2";
  return c;
}

// ---------------------------------------------------------------------------
// Split words s = u v with u over a_1..a_k and v over a_(k+1)..a_n

/// Whether the restricted graphs of u and v are both cycles.
inline bool split_check(const Word& s, int k) {
  const auto letters = s.letters();
  const auto split = std::find_if(letters.begin(), letters.end(), [&](Letter l) { return l.generator() > k; });
  if (std::any_of(split, letters.end(), [&](Letter l) { return l.generator() <= k; })) {
    throw PreconditionError("word " + s.str() + " is not of the form u v split at generator " + std::to_string(k));
  }
  const Word u(std::span<const Letter>(letters.begin(), split), s.rank());
  const Word v(std::span<const Letter>(split, letters.end()), s.rank());
  if (u.empty() || v.empty()) throw PreconditionError("degenerate split of " + s.str());
  return is_cycle(build_x1_restricted(u)) && is_cycle(build_x1_restricted(v));
}

}  // namespace hamcirc
