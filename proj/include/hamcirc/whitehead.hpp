#pragma once

// Length minimisation over Aut(F_n)-orbits (Whitehead's algorithm) and the
// closure of a minimal word under length-preserving moves.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hamcirc/automorphism.hpp"
#include "hamcirc/error.hpp"
#include "hamcirc/word.hpp"

namespace hamcirc {

/// Whitehead searches enumerate 2n·4^(n-1) moves; beyond this rank that is
/// no longer desk-scale.
inline constexpr int kMaxWhiteheadRank = 6;

inline constexpr std::size_t kDefaultOrbitCap = 100'000;

struct Minimized {
  Word word;
  Automorphism witness;  // witness.apply(input) == word
};

/// Conjugates `w` until it is cyclically reduced, recording conj moves.
inline Minimized cyclically_reduce(const Word& w) {
  Minimized out{w, Automorphism(w.rank())};
  while (!out.word.is_cyclically_reduced()) {
    const Move m = Conjugate{out.word.front()};
    out.word = substitute(move_images(m, w.rank()), out.word);
    out.witness.append(m);
  }
  return out;
}

namespace detail {

inline void check_whitehead_rank(int rank) {
  if (rank > kMaxWhiteheadRank) throw BudgetError("Whitehead search supports rank <= " + std::to_string(kMaxWhiteheadRank));
}

}  // namespace detail

/// Greedy Whitehead descent. The result is cyclically reduced and of minimal
/// length in the Aut(F_n)-orbit of `w`; among equally short candidates at
/// each step the shortlex-least image is taken.
inline Minimized whitehead_minimize(const Word& w) {
  detail::check_whitehead_rank(w.rank());
  Minimized cur = cyclically_reduce(w);
  const std::vector<Automorphism> moves = whitehead_automorphisms(w.rank());

  while (true) {
    std::optional<Minimized> best;
    const Automorphism* best_move = nullptr;
    for (const Automorphism& phi : moves) {
      Minimized cand = cyclically_reduce(phi.apply(cur.word));
      if (cand.word.length() >= cur.word.length()) continue;
      if (!best || cand.word < best->word) {
        best = std::move(cand);
        best_move = &phi;
      }
    }
    if (!best) return cur;
    for (const Move& m : best_move->moves()) cur.witness.append(m);
    for (const Move& m : best->witness.moves()) cur.witness.append(m);
    cur.word = std::move(best->word);
  }
}

/// All minimal-length elements of an Aut(F_n)-orbit reachable from the
/// Whitehead-minimised input by length-preserving moves, with witnesses.
class OrbitClosure {
 public:
  OrbitClosure(const Word& input, std::size_t cap) : rank_(input.rank()), input_(input) {
    detail::check_whitehead_rank(rank_);
    const Minimized start = whitehead_minimize(input);
    to_start_ = start.witness;
    build_steps();

    std::vector<Word> queue{start.word};
    parents_.emplace(start.word, Parent{start.word, {}, true});
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Word cur = queue[head];
      // Images are cyclically reduced before the length test; a raw image of
      // a minimal word can be a longer conjugate of a minimal word.
      auto visit = [&](const Automorphism& step) {
        Minimized next = cyclically_reduce(step.apply(cur));
        if (next.word.length() != cur.length()) return;
        if (parents_.contains(next.word)) return;
        if (parents_.size() >= cap) throw BudgetError("orbit closure exceeded cap of " + std::to_string(cap) + " words");
        std::vector<Move> moves = step.moves();
        for (const Move& m : next.witness.moves()) moves.push_back(m);
        parents_.emplace(next.word, Parent{cur, std::move(moves), false});
        queue.push_back(std::move(next.word));
      };
      for (const Automorphism& step : steps_) visit(step);
      if (!cur.empty()) visit(Automorphism::from_move(Conjugate{cur.front()}, rank_));
    }
    words_ = std::move(queue);
    std::sort(words_.begin(), words_.end());
  }

  const Word& input() const { return input_; }

  /// Minimal-length orbit elements in shortlex order.
  const std::vector<Word>& words() const { return words_; }
  std::size_t min_length() const { return words_.front().length(); }
  bool contains(const Word& w) const { return parents_.contains(w); }

  /// Automorphism taking the input word exactly to `target`.
  Automorphism witness(const Word& target) const {
    if (!parents_.contains(target)) throw PreconditionError("word " + target.str() + " is not in the orbit closure");
    std::vector<const Parent*> path;
    for (const Parent* p = &parents_.at(target); !p->root; p = &parents_.at(p->from)) path.push_back(p);
    Automorphism a = to_start_;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      for (const Move& m : (*it)->moves) a.append(m);
    }
    return a;
  }

 private:
  struct Parent {
    Word from;
    std::vector<Move> moves;  // from -> this word
    bool root;
  };

  void build_steps() {
    steps_ = whitehead_automorphisms(rank_);
    for (int g = 1; g <= rank_; ++g) steps_.push_back(Automorphism::from_move(Invert{g}, rank_));
    for (int i = 1; i <= rank_; ++i) {
      for (int j = i + 1; j <= rank_; ++j) {
        Permute p;
        for (int k = 1; k <= rank_; ++k) p.images.push_back(k == i ? j : (k == j ? i : k));
        steps_.push_back(Automorphism::from_move(p, rank_));
      }
    }
  }

  int rank_;
  Word input_;
  Automorphism to_start_;
  std::vector<Automorphism> steps_;
  std::unordered_map<Word, Parent> parents_;
  std::vector<Word> words_;
};

inline OrbitClosure orbit_minimal_set(const Word& w, std::size_t cap = kDefaultOrbitCap) { return OrbitClosure(w, cap); }

}  // namespace hamcirc
