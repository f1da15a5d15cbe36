#pragma once

// Finite evidence that Cay(F_n; A^±1 ∪ {s^±1}) is outerplanar with boundary
// circle Cay(F_n; s^±1): each truncation X/~l has no K4 or K2,3 minor and
// the s-edges form a hamiltonian cycle of it.

#include <cstddef>
#include <string>
#include <vector>

#include "hamcirc/certifier.hpp"
#include "hamcirc/error.hpp"
#include "hamcirc/graph_algorithms.hpp"
#include "hamcirc/outerplanarity.hpp"
#include "hamcirc/quotient.hpp"
#include "hamcirc/word.hpp"

namespace hamcirc {

struct OuterplanarLevel {
  std::size_t l = 0;
  std::size_t vertices = 0;
  bool outerplanar = false;
  bool circle_is_ham_cycle = false;

  bool pass() const { return outerplanar && circle_is_ham_cycle; }
  bool operator==(const OuterplanarLevel&) const = default;
};

struct OuterplanarReport {
  std::string word;
  std::vector<OuterplanarLevel> levels;

  bool pass() const {
    for (const OuterplanarLevel& l : levels) {
      if (!l.pass()) return false;
    }
    return !levels.empty();
  }
  bool operator==(const OuterplanarReport&) const = default;
};

/// Free generators together with s.
inline std::vector<Word> generators_with(const Word& s) {
  std::vector<Word> gens;
  for (int g = 1; g <= s.rank(); ++g) gens.push_back(Word::generator(g, s.rank()));
  gens.push_back(s);
  return gens;
}

/// Both checks at one level, for any s.
inline OuterplanarLevel outerplanar_level_report(const Word& s, std::size_t l) {
  if (s.empty()) throw PreconditionError("the identity cannot be a generator");
  const QuotientGraph q = build_quotient_local(s.rank(), generators_with(s), l);
  const std::string forward = s.str(), backward = s.inverse().str();
  const Multigraph circle = q.graph().spanning_subgraph([&](EdgeId, const Edge& e) { return e.tag == forward || e.tag == backward; });
  return {l, q.graph().vertex_count(), is_outerplanar(q.graph()), is_cycle(circle)};
}

/// Levels 1..max_level. s must be certified Yes on itself: a Yes reached
/// through an automorphism says nothing about A ∪ {s}.
inline OuterplanarReport verify_outerplanar_quotient(int rank, const Word& s, std::size_t max_level, const CertifyOptions& options = {}) {
  if (s.rank() != rank) throw RankError("word rank differs from n");
  if (max_level == 0) throw PreconditionError("quotient level must be at least 1");
  const Certificate c = certify(rank, s, options);
  if (c.verdict != Verdict::Yes) {
    throw PreconditionError("word " + s.str() + " is not certified: " + std::string(to_string(c.verdict)) + " (" + std::string(to_string(c.reason)) + ")");
  }
  if (!c.witness.empty()) throw PreconditionError("word " + s.str() + " is certified only after an automorphism; X_1 of the word itself is not a cycle");
  OuterplanarReport report{s.str(), {}};
  for (std::size_t l = 1; l <= max_level; ++l) report.levels.push_back(outerplanar_level_report(s, l));
  return report;
}

}  // namespace hamcirc
