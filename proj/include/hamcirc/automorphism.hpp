#pragma once

// Automorphisms of F_n, always built as composition chains of named
// elementary moves so that every instance is invertible by construction.
//
// Move text forms:
//   perm(s1,...,sn)    a_i -> a_{s_i}
//   inv(i)             a_i -> a_i^-1
//   mul(i,left,j,e)    a_i -> a_j^e a_i
//   mul(i,right,j,e)   a_i -> a_i a_j^e
//   conj(j,e)          every a_i -> x^-1 a_i x, with x = a_j^e

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hamcirc/error.hpp"
#include "hamcirc/word.hpp"

namespace hamcirc {

enum class Side { Left, Right };

struct Permute {
  std::vector<int> images;  // 1-based, images[i-1] = sigma(i)
  bool operator==(const Permute&) const = default;
};

struct Invert {
  int generator = 1;
  bool operator==(const Invert&) const = default;
};

struct Multiply {
  int target = 1;
  Side side = Side::Left;
  Letter by;
  bool operator==(const Multiply&) const = default;
};

struct Conjugate {
  Letter by;
  bool operator==(const Conjugate&) const = default;
};

using Move = std::variant<Permute, Invert, Multiply, Conjugate>;

namespace detail {

inline void check_generator(int g, int rank) {
  if (g < 1 || g > rank) throw RankError("move refers to generator " + std::to_string(g) + " outside rank " + std::to_string(rank));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline std::string sign_text(int sign) { return sign > 0 ? "+1" : "-1"; }

}  // namespace detail

/// Images of the generators under a single move; validates the move.
inline std::vector<Word> move_images(const Move& move, int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(i, rank));

  std::visit(detail::overloaded{
                 [&](const Permute& p) {
                   if (static_cast<int>(p.images.size()) != rank) throw RankError("permutation size differs from rank");
                   std::vector<int> sorted = p.images;
                   std::sort(sorted.begin(), sorted.end());
                   for (int i = 0; i < rank; ++i) {
                     if (sorted[static_cast<std::size_t>(i)] != i + 1) throw ParseError("perm(...) is not a permutation");
                   }
                   for (int i = 0; i < rank; ++i) images[static_cast<std::size_t>(i)] = Word::generator(p.images[static_cast<std::size_t>(i)], rank);
                 },
                 [&](const Invert& v) {
                   detail::check_generator(v.generator, rank);
                   images[static_cast<std::size_t>(v.generator - 1)] = images[static_cast<std::size_t>(v.generator - 1)].inverse();
                 },
                 [&](const Multiply& m) {
                   detail::check_generator(m.target, rank);
                   detail::check_generator(m.by.generator(), rank);
                   if (m.target == m.by.generator()) throw ParseError("mul(...) must multiply by a different generator");
                   const Word x({m.by}, rank);
                   Word& img = images[static_cast<std::size_t>(m.target - 1)];
                   img = m.side == Side::Left ? x * img : img * x;
                 },
                 [&](const Conjugate& c) {
                   detail::check_generator(c.by.generator(), rank);
                   const Word x({c.by}, rank);
                   const Word xi = x.inverse();
                   for (Word& img : images) img = xi * img * x;
                 },
             },
             move);
  return images;
}

inline Move inverse_move(const Move& move) {
  return std::visit(detail::overloaded{
                        [](const Permute& p) -> Move {
                          Permute inv;
                          inv.images.resize(p.images.size());
                          for (std::size_t i = 0; i < p.images.size(); ++i) inv.images[static_cast<std::size_t>(p.images[i] - 1)] = static_cast<int>(i) + 1;
                          return inv;
                        },
                        [](const Invert& v) -> Move { return v; },
                        [](const Multiply& m) -> Move { return Multiply{m.target, m.side, m.by.inverse()}; },
                        [](const Conjugate& c) -> Move { return Conjugate{c.by.inverse()}; },
                    },
                    move);
}

inline std::string to_string(const Move& move) {
  return std::visit(detail::overloaded{
                        [](const Permute& p) {
                          std::string s = "perm(";
                          for (std::size_t i = 0; i < p.images.size(); ++i) {
                            if (i) s += ',';
                            s += std::to_string(p.images[i]);
                          }
                          return s + ")";
                        },
                        [](const Invert& v) { return "inv(" + std::to_string(v.generator) + ")"; },
                        [](const Multiply& m) {
                          return "mul(" + std::to_string(m.target) + (m.side == Side::Left ? ",left," : ",right,") + std::to_string(m.by.generator()) + "," +
                                 detail::sign_text(m.by.sign()) + ")";
                        },
                        [](const Conjugate& c) { return "conj(" + std::to_string(c.by.generator()) + "," + detail::sign_text(c.by.sign()) + ")"; },
                    },
                    move);
}

inline Move parse_move(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') throw ParseError("malformed move '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, open);
  std::vector<std::string_view> args;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (true) {
    const auto comma = body.find(',');
    args.push_back(body.substr(0, comma));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  auto integer = [&](std::string_view a) {
    if (!a.empty() && a.front() == '+') a.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), v);
    if (ec != std::errc() || ptr != a.data() + a.size()) throw ParseError("bad integer '" + std::string(a) + "' in move");
    return v;
  };
  auto sign = [&](std::string_view a) {
    const int v = integer(a);
    if (v != 1 && v != -1) throw ParseError("sign must be +1 or -1");
    return v;
  };
  auto generator = [&](std::string_view a) {
    const int v = integer(a);
    if (v < 1 || v > kMaxRank) throw ParseError("generator index out of range in '" + std::string(text) + "'");
    return v;
  };
  auto arity = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("wrong number of arguments in '" + std::string(text) + "'");
  };
  if (name == "perm") {
    Permute p;
    for (auto a : args) p.images.push_back(generator(a));
    return p;
  }
  if (name == "inv") {
    arity(1);
    return Invert{generator(args[0])};
  }
  if (name == "mul") {
    arity(4);
    Side side;
    if (args[1] == "left") {
      side = Side::Left;
    } else if (args[1] == "right") {
      side = Side::Right;
    } else {
      throw ParseError("mul side must be left or right");
    }
    return Multiply{generator(args[0]), side, Letter(generator(args[2]), sign(args[3]))};
  }
  if (name == "conj") {
    arity(2);
    return Conjugate{Letter(generator(args[0]), sign(args[1]))};
  }
  throw ParseError("unknown move '" + std::string(name) + "'");
}

/// Replaces every letter of `w` by its image (inverse letters by inverted images).
inline Word substitute(std::span<const Word> images, const Word& w) {
  Word out(w.rank());
  for (Letter l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(l.generator() - 1)];
    if (l.sign() > 0) {
      for (Letter x : img.letters()) out.push_back(x);
    } else {
      const auto ls = img.letters();
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return out;
}

/// An automorphism of F_n together with the chain of moves that produced it.
/// The chain is applied first-to-last: apply(w) = m_k(...m_1(w)).
class Automorphism {
 public:
  explicit Automorphism(int rank = 0) : rank_(rank) {
    for (int i = 1; i <= rank; ++i) images_.push_back(Word::generator(i, rank));
  }

  static Automorphism identity(int rank) { return Automorphism(rank); }

  static Automorphism from_move(const Move& m, int rank) { return Automorphism(rank).then(m); }

  static Automorphism from_moves(std::span<const Move> moves, int rank) {
    Automorphism a(rank);
    for (const Move& m : moves) a.append(m);
    return a;
  }

  /// This automorphism followed by `m`.
  Automorphism then(const Move& m) const {
    Automorphism a = *this;
    a.append(m);
    return a;
  }

  void append(const Move& m) {
    const std::vector<Word> step = move_images(m, rank_);
    for (Word& img : images_) img = substitute(step, img);
    moves_.push_back(m);
  }

  Word apply(const Word& w) const {
    if (w.rank() != rank_) throw RankError("rank mismatch applying automorphism");
    return substitute(images_, w);
  }

  Automorphism inverse() const {
    Automorphism a(rank_);
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) a.append(inverse_move(*it));
    return a;
  }

  int rank() const { return rank_; }
  std::span<const Word> images() const { return images_; }
  const std::vector<Move>& moves() const { return moves_; }
  bool is_identity() const {
    for (int i = 0; i < rank_; ++i) {
      if (images_[static_cast<std::size_t>(i)] != Word::generator(i + 1, rank_)) return false;
    }
    return true;
  }

  std::vector<std::string> chain_strings() const {
    std::vector<std::string> out;
    out.reserve(moves_.size());
    for (const Move& m : moves_) out.push_back(to_string(m));
    return out;
  }

  /// Equality of the underlying maps, regardless of how they were built.
  bool operator==(const Automorphism& other) const { return rank_ == other.rank_ && images_ == other.images_; }

 private:
  int rank_;
  std::vector<Word> images_;
  std::vector<Move> moves_;
};

/// outer after inner: compose(outer, inner)(w) = outer(inner(w)).
inline Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  if (outer.rank() != inner.rank()) throw RankError("rank mismatch composing automorphisms");
  Automorphism a = inner;
  for (const Move& m : outer.moves()) a.append(m);
  return a;
}

inline Word apply_automorphism(const Automorphism& phi, const Word& w) { return phi.apply(w); }

inline Automorphism parse_chain(std::span<const std::string> moves, int rank) {
  Automorphism a(rank);
  for (const std::string& m : moves) a.append(parse_move(m));
  return a;
}

/// Generator permutations, sign patterns and single-letter multiplications
/// a_i -> a_j^e a_i, a_i -> a_i a_j^e. Duplicates (by images) are dropped.
inline std::vector<Automorphism> elementary_automorphisms(int rank) {
  if (rank < 1) throw RankError("rank must be at least 1");
  std::vector<Automorphism> out;
  auto add = [&](Automorphism a) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  };

  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    const bool trivial = std::is_sorted(perm.begin(), perm.end());
    add(trivial ? Automorphism(rank) : Automorphism::from_move(Permute{perm}, rank));
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    Automorphism a(rank);
    for (int i = 0; i < rank; ++i) {
      if (mask & (1u << i)) a.append(Invert{i + 1});
    }
    add(std::move(a));
  }

  for (int target = 1; target <= rank; ++target) {
    for (int j = 1; j <= rank; ++j) {
      if (j == target) continue;
      for (Side side : {Side::Left, Side::Right}) {
        for (int e : {+1, -1}) add(Automorphism::from_move(Multiply{target, side, Letter(j, e)}, rank));
      }
    }
  }
  return out;
}

/// Whitehead automorphisms of the second kind: for a letter x, every other
/// generator a is sent to one of a, a x, x^-1 a, x^-1 a x. The identity
/// choices are skipped. There are 2n (4^(n-1) - 1) of them.
inline std::vector<Automorphism> whitehead_automorphisms(int rank) {
  std::vector<Automorphism> out;
  if (rank < 2) return out;
  const std::size_t choices = std::size_t{1} << (2 * (rank - 1));
  for (int code = 0; code < 2 * rank; ++code) {
    const Letter x = Letter::from_code(code);
    for (std::size_t pick = 1; pick < choices; ++pick) {
      Automorphism a(rank);
      std::size_t bits = pick;
      for (int g = 1; g <= rank; ++g) {
        if (g == x.generator()) continue;
        const std::size_t option = bits & 3u;
        bits >>= 2;
        if (option & 1u) a.append(Multiply{g, Side::Right, x});
        if (option & 2u) a.append(Multiply{g, Side::Left, x.inverse()});
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace hamcirc
