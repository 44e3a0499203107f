#include <sturmian/sturmian.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace sturmian;

namespace {

FiniteWord w(std::string_view s) { return FiniteWord::parse(s); }

std::set<std::string> substrings(const std::string& s, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) out.insert(s.substr(i, n));
  return out;
}

std::vector<InfiniteWord> sample_words() {
  return {fibonacci01(),
          kbonacci(3),
          kbonacci(4),
          thue_morse(),
          characteristic(QuadraticSurd(0, 1, 2, 1) - QuadraticSurd(Integer(1))),
          epistandard(DirectiveWord::parse("aabc*")),
          parse::word_source("periodic:ab|aab"),
          mechanical_lower(QuadraticSurd(Rational(3, 7)), QuadraticSurd(Rational(1, 5)))};
}

}  // namespace

TEST(Factors, SpecExamples) {
  auto f = factors(w("abaab"), 2);
  std::vector<std::string> got;
  for (const auto& x : f) got.push_back(x.str());
  EXPECT_EQ(got, (std::vector<std::string>{"aa", "ab", "ba"}));
  EXPECT_EQ(factors(fibonacci01(), 1, 20).size(), 2u);
  EXPECT_EQ(factors(kbonacci(3), 2, 30).size(), 5u);
  EXPECT_THROW(factors(w("ab"), 3), std::invalid_argument);
}

TEST(Factors, MatchSubstringEnumeration) {
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    std::string s;
    for (std::size_t j = 0, n = 1 + rng() % 30; j < n; ++j) s += static_cast<char>('a' + rng() % 3);
    FiniteWord x = FiniteWord::parse(Alphabet::latin(3), s);
    for (std::size_t n = 1; n <= s.size(); ++n) {
      auto expect = substrings(s, n);
      auto got = factors(x, n);
      ASSERT_EQ(got.size(), expect.size());
      for (const auto& g : got) EXPECT_TRUE(expect.count(g.str()));
    }
  }
}

TEST(Complexity, SpecExamples) {
  EXPECT_EQ(complexity(fibonacci01(), 3, 1000).values(), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(complexity(kbonacci(3), 3, 1000).values(), (std::vector<std::size_t>{3, 5, 7}));
  auto periodic = complexity(parse::word_source("periodic:ab"), 4, 100);
  EXPECT_EQ(periodic.values(), (std::vector<std::size_t>{2, 2, 2, 2}));
  EXPECT_TRUE(periodic.all_exact());
}

TEST(Complexity, ExactnessLabels) {
  auto fib = complexity(fibonacci01(), 20, 1000);
  EXPECT_TRUE(fib.all_exact());
  auto tm = complexity(thue_morse(), 5, 1000);
  EXPECT_FALSE(tm.entries[0].exact);
  auto starved = complexity(fibonacci01(), 20, 25);
  EXPECT_FALSE(starved.all_exact());
}

TEST(Complexity, Monotone) {
  for (const auto& word : sample_words()) {
    auto v = complexity(word, 25, 3000).values();
    for (std::size_t k = 1; k < v.size(); ++k) EXPECT_GE(v[k], v[k - 1]);
  }
}

TEST(Complexity, SturmianSlopesGiveKPlusOne) {
  std::vector<QuadraticSurd> slopes{fibonacci_slope(), parse::surd("sqrt(2)-1"), parse::surd("(sqrt(3)-1)/2"),
                                    parse::surd("(5-sqrt(7))/3")};
  for (const auto& a : slopes) {
    auto t = complexity(characteristic(a), 40, 20000);
    for (const auto& e : t.entries) {
      if (e.exact) EXPECT_EQ(e.p, e.k + 1) << a.str();
    }
    EXPECT_TRUE(t.all_exact()) << a.str();
  }
}

TEST(SpecialFactors, SpecExamples) {
  EXPECT_EQ(special_factors(fibonacci01().prefix(1000), 2, Side::Left).size(), 1u);
  EXPECT_TRUE(special_factors(parse::word_source("periodic:ab").prefix(100), 1, Side::Right).empty());
  auto trib = special_factors(kbonacci(3).prefix(1000), 1, Side::Left);
  ASSERT_EQ(trib.size(), 1u);
  EXPECT_EQ(trib[0].str(), "a");
}

TEST(SpecialFactors, ComplexityDifferenceMatchesExtensions) {
  for (const auto& word : sample_words()) {
    auto prefix = word.prefix(600);
    for (std::size_t n = 1; n < 15; ++n) {
      auto ext = extension_counts(prefix, n, Side::Right);
      std::size_t pn = factor_count(prefix.letters(), n);
      std::size_t pn1 = factor_count(prefix.letters(), n + 1);
      std::size_t dead = pn - ext.size();  // occurs only as the suffix
      std::size_t excess = 0;
      for (const auto& [f, c] : ext) excess += c - 1;
      EXPECT_EQ(pn1 + dead, pn + excess) << word.recipe().description << " n=" << n;
    }
  }
}

TEST(Balance, SpecExamples) {
  EXPECT_TRUE(is_balanced(w("aabab")));
  EXPECT_TRUE(is_balanced(fibonacci01().prefix(500)));
  auto v = balance_violation(w("0011"));
  ASSERT_TRUE(v);
  std::set<std::string> pair{v->first.str(), v->second.str()};
  EXPECT_EQ(pair, (std::set<std::string>{"00", "11"}));
  EXPECT_THROW(is_balanced(w("abc")), std::invalid_argument);
}

TEST(Balance, ZeroOneOneZeroIsBalanced) {
  // Every pair of equal-length factors of 0110 differs by at most one 1.
  EXPECT_TRUE(oracle::balanced_by_definition(w("0110")));
  EXPECT_TRUE(is_balanced(w("0110")));
  EXPECT_TRUE(block_condition(w("0110")));
}

TEST(BlockCondition, SpecExamples) {
  EXPECT_TRUE(block_condition(parse::word_source("periodic:aabab").prefix(100)));
  EXPECT_TRUE(block_condition(fibonacci01().prefix(300)));
  auto v = block_condition_violation(w("0011"));
  ASSERT_TRUE(v);
  EXPECT_TRUE(v->empty());
  auto u = block_condition_violation(w("00100111"));
  ASSERT_TRUE(u);
}

TEST(BlockCondition, EquivalentToBalanceUpTo14) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (const auto& x : oracle::all_binary_words(n)) {
      bool b = oracle::balanced_by_definition(x);
      ASSERT_EQ(is_balanced(x), b) << x.str();
      ASSERT_EQ(block_condition(x), b) << x.str();
    }
  }
}

TEST(Period, SpecExamples) {
  EXPECT_EQ(detect_period(w("abaababaababaab")), 5u);
  EXPECT_EQ(detect_period(w("aaaa")), 1u);
  auto form = classify_eventually_periodic(w("b" + std::string(50, 'a')));
  ASSERT_TRUE(form);
  EXPECT_EQ(form->preperiod().str(), "b");
  EXPECT_EQ(form->period().str(), "a");
  EXPECT_FALSE(classify_eventually_periodic(fibonacci01().prefix(2000)));
}

TEST(Period, MatchesDefinition) {
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    std::string s;
    for (std::size_t j = 0, n = 1 + rng() % 20; j < n; ++j) s += static_cast<char>('a' + rng() % 2);
    std::size_t expect = s.size();
    for (std::size_t p = 1; p < s.size(); ++p) {
      bool ok = true;
      for (std::size_t k = 0; k + p < s.size(); ++k) ok = ok && s[k] == s[k + p];
      if (ok) {
        expect = p;
        break;
      }
    }
    EXPECT_EQ(detect_period(FiniteWord::parse(Alphabet::latin(2), s)), expect) << s;
  }
}
