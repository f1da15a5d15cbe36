#include <gtest/gtest.h>

#include "support/common.hpp"

using namespace hamcirc;
using testing_support::kPropertyCases;

namespace {

Word w2(const char* s) { return Word::parse(s, 2); }

/// Edge multiset of X_1 written out by hand: 1-s_1, s_i^-1 - s_(i+1), s_r^-1 - 1.
std::multiset<std::pair<std::string, std::string>> x1_oracle_edges(const std::string& s) {
  std::multiset<std::pair<std::string, std::string>> out;
  auto add = [&](std::string x, std::string y) { out.insert(std::minmax(x, y)); };
  auto inv = [](char c) { return std::string(1, std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c)) : static_cast<char>(std::tolower(c))); };
  add("1", std::string(1, s.front()));
  for (std::size_t i = 0; i + 1 < s.size(); ++i) add(inv(s[i]), std::string(1, s[i + 1]));
  add(inv(s.back()), "1");
  return out;
}

std::multiset<std::pair<std::string, std::string>> edge_pairs(const Multigraph& g) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const Edge& e : g.edges()) out.insert(std::minmax(g.label(e.u), g.label(e.v)));
  return out;
}

/// Every reduced arrangement of a, A, b, B, ... with each letter once.
std::vector<Word> commutator_degree_two_words(int rank) {
  std::string letters;
  for (int g = 0; g < rank; ++g) {
    letters.push_back(static_cast<char>('a' + g));
    letters.push_back(static_cast<char>('A' + g));
  }
  std::sort(letters.begin(), letters.end());
  std::vector<Word> out;
  do {
    if (oracle::reduce(letters) == letters) out.push_back(Word::parse(letters, rank));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

Automorphism random_automorphism(std::mt19937_64& rng, int rank, int steps) {
  const auto elementary = elementary_automorphisms(rank);
  Automorphism phi(rank);
  for (int i = 0; i < steps; ++i) {
    for (const Move& m : elementary[rng() % elementary.size()].moves()) phi.append(m);
  }
  return phi;
}

}  // namespace

TEST(Certifier, BuildX1Examples) {
  const Multigraph squares = build_x1(w2("aabb"));
  EXPECT_EQ(squares.vertex_count(), 5u);
  EXPECT_TRUE(is_cycle(squares));
  EXPECT_EQ(edge_pairs(squares), (std::multiset<std::pair<std::string, std::string>>{{"1", "a"}, {"A", "a"}, {"A", "b"}, {"B", "b"}, {"1", "B"}}));

  const Multigraph commutator = build_x1(w2("abAB"));
  EXPECT_TRUE(is_cycle(commutator));
  EXPECT_EQ(edge_pairs(commutator), (std::multiset<std::pair<std::string, std::string>>{{"1", "a"}, {"B", "a"}, {"A", "B"}, {"A", "b"}, {"1", "b"}}));

  const Multigraph abab = build_x1(w2("abab"));
  EXPECT_FALSE(is_cycle(abab));
  EXPECT_EQ(connected_components(abab).size(), 2u);
  EXPECT_EQ(abab.multiplicity(*abab.find("A"), *abab.find("b")), 2u);

  EXPECT_THROW(build_x1(w2("")), PreconditionError);
}

TEST(Certifier, BuildX1MatchesHandEdgeListAndLevelOneQuotient) {
  auto rng = testing_support::rng(12);
  for (int i = 0; i < 300; ++i) {
    const int rank = 1 + i % 3;
    const Word s = Word::parse(oracle::random_word(rng, rank, 6), rank);
    if (s.empty()) continue;
    const Multigraph x1 = build_x1(s);
    ASSERT_EQ(x1.vertex_count(), static_cast<std::size_t>(2 * rank + 1));
    ASSERT_EQ(edge_pairs(x1), x1_oracle_edges(s.str())) << s.str();
    const std::vector<Word> gens{s};
    const QuotientGraph q = build_quotient_enum(rank, gens, 1);
    ASSERT_EQ(edge_pairs(x1), edge_pairs(q.graph())) << s.str();
  }
}

TEST(Certifier, CanonicalWords) {
  EXPECT_EQ(squares_word(3).str(), "aabbcc");
  EXPECT_EQ(commutators_word(4).str(), "abABcdCD");
  EXPECT_THROW(commutators_word(3), PreconditionError);
}

TEST(Certifier, CertifyExamples) {
  const Certificate squares = certify(2, w2("aabb"));
  EXPECT_EQ(squares.verdict, Verdict::Yes);
  EXPECT_TRUE(squares.unique);
  EXPECT_EQ(squares.reason, Reason::X1Cycle);
  EXPECT_TRUE(squares.witness.empty());
  EXPECT_EQ(squares.checked_levels, (std::vector<std::size_t>{1, 2, 3, 4}));

  const Certificate single = certify(2, w2("a"));
  EXPECT_EQ(single.verdict, Verdict::No);
  EXPECT_EQ(single.reason, Reason::MissingGenerator);

  const Certificate abab = certify(2, w2("abab"));
  EXPECT_EQ(abab.verdict, Verdict::No);
  EXPECT_EQ(abab.reason, Reason::X1NotCycleDegreeTwo);

  const Certificate trivial = certify(2, w2(""));
  EXPECT_EQ(trivial.verdict, Verdict::No);
  EXPECT_EQ(trivial.reason, Reason::TrivialWord);

  // Primitive in F_2: an automorphism drops b.
  EXPECT_EQ(certify(2, w2("aab")).reason, Reason::MissingGenerator);

  // Degree two with an X_1 cycle of its own.
  const Certificate mixed = certify(3, Word::parse("abABcc", 3));
  EXPECT_EQ(mixed.verdict, Verdict::Yes);
  EXPECT_TRUE(mixed.witness.empty());

  // The image of aabb under b -> ab: Yes only through an automorphism, and
  // the letter count of a exceeds 2.
  const Word s = w2("aaabab");
  const Certificate lifted = certify(2, s);
  EXPECT_EQ(lifted.verdict, Verdict::Yes);
  EXPECT_FALSE(lifted.unique);
  ASSERT_FALSE(lifted.witness.empty());
  EXPECT_FALSE(is_cycle(build_x1(s)));
  EXPECT_TRUE(is_cycle(build_x1(Automorphism::from_moves(lifted.witness, 2).apply(s))));

  CertifyOptions tiny;
  tiny.orbit_cap = 3;
  const Certificate capped = certify(3, Word::parse("aaabbbccc", 3), tiny);
  EXPECT_EQ(capped.verdict, Verdict::Unknown);
  EXPECT_FALSE(capped.diagnostic.empty());

  EXPECT_THROW(certify(1, Word::parse("aa", 1)), PreconditionError);
  EXPECT_THROW(certify(3, w2("aabb")), RankError);
}

TEST(Certifier, CertifyFamiliesAcrossRanks) {
  for (int rank = 2; rank <= 4; ++rank) {
    const Certificate c = certify(rank, squares_word(rank));
    EXPECT_EQ(c.verdict, Verdict::Yes);
    EXPECT_TRUE(c.unique);
    EXPECT_TRUE(is_cycle(build_x1(squares_word(rank))));
  }
  for (int rank : {2, 4}) {
    const Certificate c = certify(rank, commutators_word(rank));
    EXPECT_EQ(c.verdict, Verdict::Yes);
    EXPECT_TRUE(c.unique);
  }
}

TEST(CertifierProperty, AutomorphicImagesOfSquaresAreYesWithUniquenessLaw) {
  auto rng = testing_support::rng(13);
  int non_unique = 0;
  for (int i = 0; i < 150; ++i) {
    const Automorphism phi = random_automorphism(rng, 2, 1 + static_cast<int>(rng() % 3));
    const Word s = phi.apply(w2(i % 2 ? "aabb" : "abAB"));
    const Certificate c = certify(2, s);
    ASSERT_EQ(c.verdict, Verdict::Yes) << s.str();
    ASSERT_EQ(c.unique, all_letter_counts_at_most(s, 2)) << s.str();
    ASSERT_FALSE(c.checked_levels.empty());
    const Word image = Automorphism::from_moves(c.witness, 2).apply(s);
    ASSERT_TRUE(is_cycle(build_x1(image))) << s.str();
    if (!c.unique) ++non_unique;
  }
  EXPECT_GT(non_unique, 0);
}

TEST(CertifierProperty, SoundnessOfYes) {
  auto rng = testing_support::rng(14);
  for (int i = 0; i < 300; ++i) {
    const int rank = 2 + i % 2;
    const Word s = Word::parse(oracle::random_word(rng, rank, 2 * rank + 2), rank);
    const Certificate c = certify(rank, s);
    if (c.verdict == Verdict::Yes) {
      ASSERT_EQ(c.reason, Reason::X1Cycle);
      ASSERT_FALSE(c.checked_levels.empty());
      const Word image = Automorphism::from_moves(c.witness, rank).apply(s);
      const std::vector<Word> gens{image};
      for (std::size_t l : c.checked_levels) ASSERT_TRUE(is_cycle(build_quotient_local(rank, gens, l).graph()));
    }
    if (c.verdict == Verdict::No) {
      ASSERT_TRUE(c.reason == Reason::MissingGenerator || c.reason == Reason::X1NotCycleDegreeTwo || c.reason == Reason::TrivialWord ||
                  c.reason == Reason::NoCanonicalForm);
    }
  }
}

TEST(CertifierProperty, ClassificationConsistencyInRankTwo) {
  std::size_t cases = 0, yes = 0;
  for (const Word& s : reduced_words_up_to(2, 8)) {
    if (!s.is_cyclically_reduced() || !all_letter_counts_equal(s, 2)) continue;
    ++cases;
    const bool certified = certify(2, s).verdict == Verdict::Yes;
    const bool canonical = classify(2, s).kind != CanonicalKind::None;
    ASSERT_EQ(certified, canonical) << s.str();
    yes += certified;
  }
  EXPECT_EQ(cases, 48u);
  EXPECT_GT(yes, 0u);
  EXPECT_LT(yes, cases);
}

TEST(Certifier, CommutatorParityObstruction) {
  // Words in [F_n, F_n] with every letter count 2 have an X_1 cycle only
  // for even n.
  std::map<int, std::size_t> cycles;
  for (int rank = 2; rank <= 4; ++rank) {
    for (const Word& s : commutator_degree_two_words(rank)) {
      if (is_cycle(build_x1(s))) ++cycles[rank];
    }
  }
  EXPECT_GT(cycles[2], 0u);
  EXPECT_EQ(cycles[3], 0u);
  EXPECT_GT(cycles[4], 0u);
}

TEST(Certifier, SplitCheckExamples) {
  EXPECT_TRUE(split_check(Word::parse("aabbcc", 3), 2));
  EXPECT_FALSE(split_check(Word::parse("ababcc", 3), 2));
  EXPECT_THROW(split_check(Word::parse("aabb", 3), 2), PreconditionError);
  EXPECT_THROW(split_check(Word::parse("cab", 3), 2), PreconditionError);
  EXPECT_THROW(split_check(Word::parse("acbc", 3), 2), PreconditionError);
}

TEST(CertifierProperty, SplitCheckMatchesX1) {
  auto rng = testing_support::rng(15);
  std::size_t cases = 0, cycles = 0;
  for (int i = 0; i < 20000 && cases < 1000; ++i) {
    const int rank = 3 + i % 2;
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(rank - 1));
    // u over the first k generators, v over the rest, each letter count at most 2.
    auto part = [&](int first, int last) {
      std::string out;
      for (int g = first; g <= last; ++g) {
        const char c = static_cast<char>('a' + g - 1);
        const int count = 1 + static_cast<int>(rng() % 2);
        for (int j = 0; j < count; ++j) out.push_back(rng() % 3 ? c : static_cast<char>(std::toupper(c)));
      }
      std::shuffle(out.begin(), out.end(), rng);
      return out;
    };
    const std::string u = part(1, k), v = part(k + 1, rank);
    if (oracle::reduce(u) != u || oracle::reduce(v) != v) continue;
    const Word s = Word::parse(u + v, rank);
    if (s.support_size() != rank) continue;
    ++cases;
    const bool expected = is_cycle(build_x1(s));
    ASSERT_EQ(split_check(s, k), expected) << u << "|" << v;
    cycles += expected;
  }
  EXPECT_GE(cases, 1000u);
  EXPECT_GT(cycles, 0u);
}
