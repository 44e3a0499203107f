#include <sturmian/sturmian.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace sturmian;

namespace {

std::size_t totient(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

// Number of balanced binary words of length n.
std::size_t balanced_count(std::size_t n) {
  std::size_t total = 1;
  for (std::size_t k = 1; k <= n; ++k) total += (n - k + 1) * totient(k);
  return total;
}

}  // namespace

TEST(Enumerate, SpecExamples) {
  auto one = oracle::enumerate_balanced(1);
  EXPECT_EQ(one.size(), 2u);
  EXPECT_EQ(oracle::enumerate_balanced(2).size(), 4u);
  std::set<std::string> four;
  for (const auto& w : oracle::enumerate_balanced(4)) four.insert(w.str());
  EXPECT_EQ(four.size(), 14u);
  EXPECT_FALSE(four.count("0011"));
  EXPECT_FALSE(four.count("1100"));
  EXPECT_TRUE(four.count("0110"));
  EXPECT_TRUE(four.count("1001"));
  EXPECT_THROW(oracle::enumerate_balanced(17), std::invalid_argument);
}

TEST(Enumerate, CountsMatchFormulaAndBlockCondition) {
  for (std::size_t n = 1; n <= 14; ++n) {
    auto by_def = oracle::enumerate_balanced(n);
    auto by_block = oracle::enumerate_by_block_condition(n);
    EXPECT_EQ(by_def.size(), balanced_count(n)) << n;
    EXPECT_EQ(by_def, by_block) << n;
  }
}

TEST(Corpus, SpecExamples) {
  auto fib = oracle::episturmian_factor_corpus({{"fib", fibonacci_word()}}, 5);
  EXPECT_TRUE(fib.contains("aabab"));
  auto trib = oracle::episturmian_factor_corpus({{"trib", kbonacci(3)}}, 7);
  EXPECT_TRUE(trib.contains("abacaba"));
  auto fib3 = oracle::episturmian_factor_corpus({{"fib", fibonacci_word()}}, 3);
  EXPECT_FALSE(fib3.contains("aaa"));
}

TEST(Corpus, SoundAndBinaryComplete) {
  auto corpus = oracle::episturmian_factor_corpus(oracle::default_roster(), 6);
  for (const auto& [key, cw] : corpus.words) {
    EXPECT_TRUE(finite_episturmian_test(cw.word).episturmian) << key;
  }
  // Binary roster: every factor is balanced.
  auto binary = oracle::episturmian_factor_corpus({{"fib", fibonacci_word()}, {"epi:abb*", parse::word_source("epi:abb*")}}, 10);
  for (const auto& [key, cw] : binary.words) EXPECT_TRUE(is_balanced(cw.word)) << key;
}

TEST(Corpus, DumpIsSortedWithHeader) {
  auto corpus = oracle::episturmian_factor_corpus({{"fib", fibonacci_word()}}, 3);
  std::string dump = corpus.dump();
  EXPECT_EQ(dump.rfind("#", 0), 0u);
  EXPECT_NE(dump.find("subset of finite episturmian words"), std::string::npos);
  EXPECT_EQ(corpus.count(3), 4u);
  EXPECT_EQ(dump, oracle::episturmian_factor_corpus({{"fib", fibonacci_word()}}, 3).dump());
}

TEST(NaiveMinMax, SpecExamples) {
  auto ab = LexOrder::natural(2);
  auto [lo, hi] = oracle::naive_min_max(parse::word_source("periodic:abaab").prefix(50), 5, ab);
  EXPECT_EQ(lo.str(), "aabab");
  EXPECT_EQ(hi.str(), "babaa");
  auto [l1, h1] = oracle::naive_min_max(FiniteWord::parse(Alphabet::latin(3), "bcbcb"), 1, LexOrder::natural(3));
  EXPECT_EQ(l1.str(), "b");
  EXPECT_EQ(h1.str(), "c");
}

TEST(NaiveMinMax, AgreesWithExtremalModule) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    std::size_t size = 2 + rng() % 4;
    std::vector<Letter> letters;
    for (std::size_t j = 0, n = 1 + rng() % 80; j < n; ++j) letters.emplace_back(rng() % size);
    FiniteWord w(Alphabet::latin(size), letters);
    std::vector<Letter> seq;
    for (std::size_t j = 0; j < size; ++j) seq.emplace_back(j);
    std::shuffle(seq.begin(), seq.end(), rng);
    auto order = LexOrder::from_sequence(seq);
    std::size_t k = 1 + rng() % w.size();
    auto [lo, hi] = oracle::naive_min_max(w, k, order);
    EXPECT_EQ(lo, min_factor(w, k, order));
    EXPECT_EQ(hi, max_factor(w, k, order));
  }
}
