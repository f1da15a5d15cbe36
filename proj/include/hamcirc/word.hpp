#pragma once

// Reduced words in the free group F_n on generators a_1..a_n.
//
// Text syntax: lowercase 'a'..'z' are the generators a_1..a_26, the matching
// uppercase letter is the inverse. The empty string is the identity.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamcirc/error.hpp"

namespace hamcirc {

inline constexpr int kMaxRank = 26;

/// A generator or inverse generator. Ordered a < A < b < B < ...
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign) : code_(static_cast<std::uint8_t>(2 * (generator - 1) + (sign < 0 ? 1 : 0))) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = static_cast<std::uint8_t>(code);
    return l;
  }

  /// 1-based generator index.
  constexpr int generator() const { return code_ / 2 + 1; }
  constexpr int sign() const { return (code_ & 1) ? -1 : 1; }
  constexpr int code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1); }

  constexpr char to_char() const {
    const char base = static_cast<char>('a' + generator() - 1);
    return sign() > 0 ? base : static_cast<char>(base - 'a' + 'A');
  }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint8_t code_ = 0;
};

inline Letter parse_letter(char c) {
  if (c >= 'a' && c <= 'z') return Letter(c - 'a' + 1, +1);
  if (c >= 'A' && c <= 'Z') return Letter(c - 'A' + 1, -1);
  throw ParseError(std::string("invalid letter '") + c + "'");
}

/// A freely reduced word of a fixed ambient rank.
///
/// Every constructor reduces its input, so the invariant "no letter is
/// followed by its inverse" holds for every live object.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(check_rank(rank)) {}

  /// Freely reduces `letters`; throws RankError for out-of-range generators.
  Word(std::span<const Letter> letters, int rank) : rank_(check_rank(rank)) {
    letters_.reserve(letters.size());
    for (Letter l : letters) push_back(l);
  }
  Word(std::initializer_list<Letter> letters, int rank) : Word(std::span<const Letter>(letters.begin(), letters.size()), rank) {}

  /// Letters a A b B ...; "1" is the identity.
  static Word parse(std::string_view text, int rank) {
    Word w(rank);
    if (text == "1") return w;
    for (char c : text) w.push_back(parse_letter(c));
    return w;
  }

  static Word generator(int index, int rank) { return Word({Letter(index, +1)}, rank); }

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(l.to_char());
    return s;
  }

  /// Appends a letter, cancelling against the last one when they are inverse.
  void push_back(Letter l) {
    if (l.generator() > rank_) {
      throw RankError("generator " + std::string(1, l.to_char()) + " exceeds rank " + std::to_string(rank_));
    }
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  Word inverse() const {
    Word w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
    return w;
  }

  /// #_a^±: occurrences of a_generator plus occurrences of its inverse.
  std::size_t letter_count(int generator) const {
    if (generator < 1 || generator > rank_) throw RankError("generator index out of rank");
    return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [&](Letter l) { return l.generator() == generator; }));
  }

  /// Number of distinct generators occurring in the word.
  int support_size() const {
    std::uint32_t seen = 0;
    for (Letter l : letters_) seen |= 1u << (l.generator() - 1);
    return std::popcount(seen);
  }

  bool is_cyclically_reduced() const { return letters_.size() < 2 || letters_.front() != letters_.back().inverse(); }

  Word prefix(std::size_t n) const {
    Word w(rank_);
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, letters_.size())));
    return w;
  }

  Word& operator*=(const Word& rhs) {
    if (rhs.rank_ != rank_) throw RankError("rank mismatch in product");
    for (Letter l : rhs.letters_) push_back(l);
    return *this;
  }

  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  bool operator==(const Word& other) const { return letters_ == other.letters_; }

  /// Shortlex order: length first, then letters with a < A < b < B < ...
  std::strong_ordering operator<=>(const Word& other) const {
    if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), other.letters_.begin(), other.letters_.end());
  }

 private:
  static int check_rank(int rank) {
    if (rank < 0 || rank > kMaxRank) throw RankError("rank must be in 0.." + std::to_string(kMaxRank));
    return rank;
  }

  int rank_ = 0;
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
inline Word reduce(std::span<const Letter> letters, int rank) { return Word(letters, rank); }

inline Word concat(const Word& u, const Word& v) { return u * v; }

inline Word invert(const Word& w) { return w.inverse(); }

inline std::size_t letter_count(const Word& w, int generator) { return w.letter_count(generator); }

/// Label used for vertices named by words; the identity is rendered "1".
inline std::string word_label(const Word& w) { return w.empty() ? std::string("1") : w.str(); }

/// All reduced words of length <= max_length, in shortlex order.
inline std::vector<Word> reduced_words_up_to(int rank, std::size_t max_length) {
  std::vector<Word> out;
  out.emplace_back(rank);
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int code = 0; code < 2 * rank; ++code) {
        const Letter l = Letter::from_code(code);
        if (!out[i].empty() && out[i].back() == l.inverse()) continue;
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

/// Number of reduced words of length <= max_length: 1 + sum 2n(2n-1)^(k-1).
inline std::size_t reduced_word_count(int rank, std::size_t max_length) {
  if (rank == 0) return 1;
  std::size_t total = 1;
  std::size_t layer = 2 * static_cast<std::size_t>(rank);
  for (std::size_t k = 1; k <= max_length; ++k) {
    total += layer;
    layer *= 2 * static_cast<std::size_t>(rank) - 1;
  }
  return total;
}

}  // namespace hamcirc

template <>
struct std::hash<hamcirc::Word> {
  std::size_t operator()(const hamcirc::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (hamcirc::Letter l : w.letters()) {
      h ^= static_cast<std::size_t>(l.code()) + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};
