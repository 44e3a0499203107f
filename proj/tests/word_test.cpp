#include <sturmian/sturmian.hpp>

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace sturmian;

namespace {

FiniteWord w(std::string_view s) { return FiniteWord::parse(s); }

}  // namespace

TEST(Alphabet, NamesAndAliases) {
  Alphabet b = Alphabet::binary();
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(b.letter("0").index, 0);
  EXPECT_EQ(b.letter("a").index, 0);
  EXPECT_EQ(b.letter("b").index, 1);
  EXPECT_THROW(b.letter("c"), std::invalid_argument);
  EXPECT_THROW(Alphabet({"x", "x"}), std::invalid_argument);
  EXPECT_THROW(Alphabet(std::vector<std::string>{}), std::invalid_argument);
  EXPECT_EQ(Alphabet::latin(3).name(Letter(2)), "c");
}

TEST(FiniteWord, ParseInfersAlphabet) {
  EXPECT_EQ(w("abac").str(), "abac");
  EXPECT_EQ(w("0110").alphabet().size(), 2u);
  EXPECT_EQ(w("").size(), 0u);
  EXPECT_EQ(w("abc").alphabet().size(), 3u);
  EXPECT_THROW(FiniteWord::parse(Alphabet::binary(), "012"), std::invalid_argument);
}

TEST(FiniteWord, CircularShift) {
  EXPECT_EQ(shift(w("abc"), 1).str(), "bca");
  EXPECT_EQ(shift(w("abc"), 4).str(), "bca");
  EXPECT_EQ(shift(w("abc"), 0).str(), "abc");
  EXPECT_THROW(shift(FiniteWord(Alphabet::binary()), 1), std::invalid_argument);
}

TEST(FiniteWord, ReversalAndPalindromes) {
  EXPECT_EQ(reversal(w("abac")).str(), "caba");
  EXPECT_TRUE(is_palindrome(w("abacaba")));
  EXPECT_TRUE(is_palindrome(FiniteWord(Alphabet::binary())));
  EXPECT_FALSE(is_palindrome(w("ab")));
}

TEST(LexOrder, ParseAndRank) {
  Alphabet abc = Alphabet::latin(3);
  auto o = LexOrder::parse(abc, "b<c<a");
  EXPECT_EQ(o.rank(abc.letter("b")), 0u);
  EXPECT_EQ(o.rank(abc.letter("a")), 2u);
  EXPECT_EQ(o.str(abc), "b<c<a");
  EXPECT_THROW(LexOrder::parse(abc, "a<b"), std::invalid_argument);
  EXPECT_THROW(LexOrder::parse(abc, "a<a<b"), std::invalid_argument);
}

TEST(LexCompare, SpecExamples) {
  auto ab = LexOrder::natural(2);
  EXPECT_TRUE(lex_compare(w("aab"), w("aba"), ab, 3).is_less());
  auto same = lex_compare(w("abba"), w("abba"), ab, 4);
  EXPECT_TRUE(same.is_equal());
  EXPECT_EQ(same.depth, 4u);
  auto f = fibonacci01();
  EXPECT_TRUE(lex_compare(prepend(Letter(0), f), prepend(Letter(1), f), ab, 1).is_less());
  auto ba = LexOrder::parse(Alphabet::binary(), "b<a");
  EXPECT_TRUE(lex_compare(w("aab"), w("aba"), ba, 3).is_greater());
}

TEST(LexCompare, AgreesWithStringOrderOnNaturalOrder) {
  std::mt19937 rng(11);
  auto order = LexOrder::natural(3);
  for (int i = 0; i < 500; ++i) {
    std::string a, b;
    for (int j = 0; j < 8; ++j) a += static_cast<char>('a' + rng() % 3), b += static_cast<char>('a' + rng() % 3);
    Alphabet abc = Alphabet::latin(3);
    auto r = lex_compare(FiniteWord::parse(abc, a), FiniteWord::parse(abc, b), order, 8);
    if (a < b) EXPECT_TRUE(r.is_less());
    if (a > b) EXPECT_TRUE(r.is_greater());
    if (a == b) EXPECT_TRUE(r.is_equal());
  }
}

TEST(UltimatelyPeriodic, CanonicalForm) {
  Alphabet ab = Alphabet::latin(2);
  UltimatelyPeriodicWord x(FiniteWord::parse(ab, "ab"), FiniteWord::parse(ab, "abab"));
  EXPECT_EQ(x.str(), "|ab");
  UltimatelyPeriodicWord y(FiniteWord::parse(ab, "aab"), FiniteWord::parse(ab, "ab"));
  EXPECT_EQ(y.str(), "a|ab");
  EXPECT_EQ(y.prefix(7).str(), "aababab");
  EXPECT_THROW(UltimatelyPeriodicWord(FiniteWord(ab), FiniteWord(ab)), std::invalid_argument);
}

TEST(UltimatelyPeriodic, CanonicalFormPreservesLetters) {
  std::mt19937 rng(5);
  Alphabet ab = Alphabet::latin(2);
  for (int i = 0; i < 300; ++i) {
    std::vector<Letter> u, v;
    for (std::size_t j = 0, n = rng() % 6; j < n; ++j) u.emplace_back(rng() % 2);
    for (std::size_t j = 0, n = 1 + rng() % 6; j < n; ++j) v.emplace_back(rng() % 2);
    FiniteWord uu(ab, u), vv(ab, v);
    UltimatelyPeriodicWord x(uu, vv);
    for (std::size_t k = 0; k < 40; ++k) {
      Letter expect = k < u.size() ? u[k] : v[(k - u.size()) % v.size()];
      ASSERT_EQ(x.at(k), expect);
    }
    EXPECT_LE(x.period().size(), vv.size());
    EXPECT_LE(x.preperiod().size(), uu.size());
  }
}

TEST(InfiniteWord, PrefixMonotonicity) {
  for (auto word : {fibonacci01(), kbonacci(3), thue_morse(), epistandard(DirectiveWord::parse("aabc*"))}) {
    auto big = word.prefix(700);
    for (std::size_t m : {0u, 1u, 10u, 99u, 350u, 699u}) EXPECT_TRUE(big.has_prefix(word.prefix(m)));
  }
}

TEST(InfiniteWord, ShiftPrefixCoherence) {
  auto f = fibonacci01();
  EXPECT_EQ(shift(f, 1).prefix(7).str(), "1001010");
  EXPECT_EQ(shift(f, 0).prefix(50), f.prefix(50));
  for (auto word : {fibonacci01(), kbonacci(4), thue_morse(), parse::word_source("periodic:ab|aab")}) {
    for (std::size_t k : {1u, 3u, 17u, 100u}) {
      EXPECT_EQ(shift(word, k).prefix(60), word.prefix(60 + k).slice(k, 60));
    }
  }
}

TEST(InfiniteWord, ConcurrentPrefixesAgree) {
  auto t = kbonacci(3);
  std::vector<FiniteWord> seen(8, FiniteWord(t.alphabet()));
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    threads.emplace_back([&, i] { seen[i] = t.prefix(1000 + 500 * i); });
  }
  for (auto& th : threads) th.join();
  auto reference = kbonacci(3).prefix(5000);
  for (const auto& s : seen) EXPECT_TRUE(reference.has_prefix(s));
}

TEST(InfiniteWord, PeriodicFormSurvivesShift) {
  auto p = parse::word_source("periodic:ba|ab");
  ASSERT_TRUE(p.periodic_form());
  auto s = shift(p, 3);
  ASSERT_TRUE(s.periodic_form());
  EXPECT_EQ(s.periodic_form()->str(), "|ba");
}
