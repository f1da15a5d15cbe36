#pragma once

// Cayley graphs of Z_n and of the dihedral group D_2n, and hamiltonian
// cycle counts on them.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamcirc/error.hpp"
#include "hamcirc/hamiltonian.hpp"
#include "hamcirc/multigraph.hpp"

namespace hamcirc {

enum class GroupFamily { Cyclic, Dihedral };

/// r^rotation a^reflection; cyclic elements never reflect. In D_2n with
/// r = ab we have b = r^-1 a and a r a = r^-1.
struct GroupElement {
  int rotation = 0;
  bool reflection = false;

  auto operator<=>(const GroupElement&) const = default;
};

struct FiniteCayleySpec {
  GroupFamily family = GroupFamily::Cyclic;
  int order = 0;  // |G|
  std::vector<GroupElement> connection;

  /// Number of rotations: n for Z_n, n/2 for D_n.
  int rotations() const { return family == GroupFamily::Cyclic ? order : order / 2; }
  std::size_t element_count() const { return static_cast<std::size_t>(order); }

  GroupElement normalize(GroupElement g) const {
    const int k = rotations();
    g.rotation = ((g.rotation % k) + k) % k;
    return g;
  }

  GroupElement multiply(GroupElement x, GroupElement y) const {
    return normalize({x.rotation + (x.reflection ? -y.rotation : y.rotation), x.reflection != y.reflection});
  }

  GroupElement inverse(GroupElement x) const { return x.reflection ? normalize(x) : normalize({-x.rotation, false}); }

  VertexId index(GroupElement g) const {
    g = normalize(g);
    return static_cast<VertexId>((g.reflection ? rotations() : 0) + g.rotation);
  }

  GroupElement element(VertexId v) const {
    const int k = rotations();
    return {static_cast<int>(v) % k, static_cast<int>(v) >= k};
  }

  std::string label(GroupElement g) const {
    if (family == GroupFamily::Cyclic) return std::to_string(g.rotation);
    return "r" + std::to_string(g.rotation) + (g.reflection ? "a" : "");
  }

  bool operator==(const FiniteCayleySpec&) const = default;
};

namespace detail {

/// Words over a and b with parentheses and integer powers, for example
/// `aba` or `(ab)^3`.
class DihedralParser {
 public:
  DihedralParser(std::string_view text, const FiniteCayleySpec& spec) : text_(text), spec_(spec) {}

  GroupElement parse() {
    const GroupElement g = sequence();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (text_.empty()) fail("empty word");
    return g;
  }

 private:
  GroupElement sequence() {
    GroupElement acc{};
    while (pos_ < text_.size() && text_[pos_] != ')') acc = spec_.multiply(acc, power());
    return acc;
  }

  GroupElement power() {
    GroupElement base = atom();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t start = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.empty() || digits == "-") fail("missing exponent");
      int e = std::stoi(digits);
      if (e < 0) {
        base = spec_.inverse(base);
        e = -e;
      }
      GroupElement out{};
      for (int i = 0; i < e % (2 * spec_.order); ++i) out = spec_.multiply(out, base);
      return out;
    }
    return base;
  }

  GroupElement atom() {
    const char c = text_[pos_++];
    if (c == 'a') return {0, true};
    if (c == 'b') return spec_.normalize({-1, true});
    if (c == '(') {
      const GroupElement g = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("unbalanced parenthesis");
      ++pos_;
      return g;
    }
    fail("unexpected '" + std::string(1, c) + "'");
    return {};
  }

  [[noreturn]] void fail(const std::string& why) const { throw ParseError("dihedral word '" + std::string(text_) + "': " + why); }

  std::string_view text_;
  const FiniteCayleySpec& spec_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

inline int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(std::string(text), &used);
  } catch (const std::exception&) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  if (used != text.size()) throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace detail

/// `cyclic:N:k1,k2,...` (each k stands for ±k) or `dihedral:ORDER:w1,w2,...`
/// with words over a, b such as `aba` or `(ab)^2`.
inline FiniteCayleySpec parse_finite_spec(std::string_view text) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 3) throw ParseError("finite spec must look like family:order:elements");
  FiniteCayleySpec spec;
  if (parts[0] == "cyclic") {
    spec.family = GroupFamily::Cyclic;
  } else if (parts[0] == "dihedral") {
    spec.family = GroupFamily::Dihedral;
  } else {
    throw ParseError("unknown group family '" + std::string(parts[0]) + "'");
  }
  spec.order = detail::parse_int(parts[1], "group order");
  if (spec.order < 1 || (spec.family == GroupFamily::Dihedral && (spec.order < 4 || spec.order % 2 != 0))) {
    throw ParseError("invalid group order " + std::string(parts[1]));
  }
  for (std::string_view item : detail::split(parts[2], ',')) {
    if (spec.family == GroupFamily::Cyclic) {
      const int k = detail::parse_int(item, "residue");
      spec.connection.push_back(spec.normalize({k, false}));
      spec.connection.push_back(spec.normalize({-k, false}));
    } else {
      spec.connection.push_back(detail::DihedralParser(item, spec).parse());
    }
  }
  std::sort(spec.connection.begin(), spec.connection.end());
  spec.connection.erase(std::unique(spec.connection.begin(), spec.connection.end()), spec.connection.end());
  return spec;
}

inline Multigraph build_finite_cayley(const FiniteCayleySpec& spec) {
  const std::set<GroupElement> s(spec.connection.begin(), spec.connection.end());
  for (GroupElement g : s) {
    if (spec.normalize(g) != g) throw PreconditionError("connection set element is not normalised");
    if (g == GroupElement{}) throw PreconditionError("connection set contains the identity");
    if (!s.contains(spec.inverse(g))) throw PreconditionError("connection set is not closed under inverses");
  }
  Multigraph graph;
  for (VertexId v = 0; v < spec.element_count(); ++v) graph.add_vertex(spec.label(spec.element(v)));
  std::set<std::pair<VertexId, VertexId>> seen;
  for (VertexId v = 0; v < spec.element_count(); ++v) {
    for (GroupElement g : s) {
      const VertexId w = spec.index(spec.multiply(spec.element(v), g));
      if (seen.insert(std::minmax(v, w)).second) graph.add_edge(v, w);
    }
  }
  return graph;
}

inline FiniteCayleySpec cyclic_spec(int n, std::initializer_list<int> residues) {
  FiniteCayleySpec spec{GroupFamily::Cyclic, n, {}};
  for (int k : residues) {
    spec.connection.push_back(spec.normalize({k, false}));
    spec.connection.push_back(spec.normalize({-k, false}));
  }
  std::sort(spec.connection.begin(), spec.connection.end());
  spec.connection.erase(std::unique(spec.connection.begin(), spec.connection.end()), spec.connection.end());
  return spec;
}

/// Walks (s, -1 repeated s-1 times, s, 1 repeated n-s-1 times) from 0 in
/// Cay(Z_n; ±1, ±s) and returns the visited vertices.
inline Cycle second_cycle_cyclic(int n, int s) {
  if (s < 2 || s > n - 2) throw PreconditionError("second cycle needs 2 <= s <= n-2");
  std::vector<int> steps{s};
  steps.insert(steps.end(), static_cast<std::size_t>(s - 1), -1);
  steps.push_back(s);
  steps.insert(steps.end(), static_cast<std::size_t>(n - s - 1), 1);

  Cycle walk;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int at = 0;
  for (int step : steps) {
    if (seen[static_cast<std::size_t>(at)]) throw InternalError("second cycle revisits vertex " + std::to_string(at));
    seen[static_cast<std::size_t>(at)] = true;
    walk.push_back(static_cast<VertexId>(at));
    at = ((at + step) % n + n) % n;
  }
  if (at != 0) throw InternalError("second cycle does not close up");
  return walk;
}

struct UniquenessResult {
  std::size_t count = 0;
  bool unique = false;

  bool operator==(const UniquenessResult&) const = default;
};

inline UniquenessResult verify_unique_finite(const FiniteCayleySpec& spec) {
  const std::size_t count = count_hamiltonian_cycles(build_finite_cayley(spec));
  return {count, count == 1};
}

}  // namespace hamcirc
