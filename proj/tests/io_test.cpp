#include <sturmian/sturmian.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace sturmian;

TEST(TextFormat, FiniteRoundTrip) {
  auto w = FiniteWord::parse(Alphabet::latin(3), "abcab");
  std::string text = io::write_text(w);
  EXPECT_EQ(text, "a,b,c\nabcab\n");
  auto back = io::read_text(text);
  ASSERT_TRUE(std::holds_alternative<FiniteWord>(back));
  EXPECT_EQ(std::get<FiniteWord>(back), w);
}

TEST(TextFormat, PeriodicRoundTrip) {
  Alphabet ab = Alphabet::latin(2);
  UltimatelyPeriodicWord u(FiniteWord::parse(ab, "b"), FiniteWord::parse(ab, "a"));
  std::string text = io::write_text(u);
  EXPECT_EQ(text, "a,b\nb|a\n");
  auto back = io::read_text(text);
  ASSERT_TRUE(std::holds_alternative<UltimatelyPeriodicWord>(back));
  EXPECT_EQ(std::get<UltimatelyPeriodicWord>(back), u);
}

TEST(TextFormat, MultiCharacterNames) {
  Alphabet names({"x0", "x1"});
  auto text = io::write_text(FiniteWord(names, {Letter(0), Letter(1)}));
  auto back = std::get<FiniteWord>(io::read_text(text));
  EXPECT_EQ(back.size(), 2u);
  EXPECT_EQ(back.alphabet().name(Letter(1)), "x1");
}

TEST(TextFormat, Errors) {
  EXPECT_THROW(io::read_text(""), std::invalid_argument);
  EXPECT_THROW(io::read_text("a,b\nabc\n"), std::invalid_argument);
  EXPECT_THROW(io::read_digit_file("1\n0\n"), std::invalid_argument);
  EXPECT_THROW(io::read_file("/nonexistent/word.txt"), std::invalid_argument);
}

TEST(DigitFile, Parse) {
  auto d = io::read_digit_file("2\n0100101001\n");
  EXPECT_EQ(d.base, 2u);
  EXPECT_EQ(std::get<FiniteWord>(d.digits).str(), "0100101001");
  auto p = io::read_digit_file("3\n0|12\n");
  EXPECT_EQ(std::get<UltimatelyPeriodicWord>(p.digits).str(), "0|12");
}

TEST(Json, ComplexityTable) {
  auto j = io::to_json(complexity(fibonacci01(), 3, 1000));
  EXPECT_EQ(j.dump(), R"([{"k":1,"p":2,"exact":true},{"k":2,"p":3,"exact":true},{"k":3,"p":4,"exact":true}])");
}

TEST(Json, VerdictLayout) {
  auto f = fibonacci01();
  auto good = io::to_json(check_sturmian_extremal(f, f, 20, 40));
  EXPECT_EQ(good["status"], "holds");
  EXPECT_EQ(good["K"], 20);
  EXPECT_EQ(good["L"], 40);
  EXPECT_TRUE(good["witness"].is_null());
  auto bad = io::to_json(check_sturmian_extremal(thue_morse(), f, 20, 40));
  EXPECT_EQ(bad["status"], "fails");
  for (const char* key : {"shift", "depth", "expected", "found"}) EXPECT_TRUE(bad["witness"].contains(key)) << key;
  std::vector<std::string> keys;
  for (auto it = bad.begin(); it != bad.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys[0], "check");
  EXPECT_EQ(keys[1], "status");
}

TEST(Json, CoveringAndDeterminism) {
  auto parts = fractional_parts(from_word(fibonacci01(), 2), 50, 64);
  auto a = io::to_json(min_covering_interval(parts, true)).dump();
  auto b = io::to_json(min_covering_interval(fractional_parts(from_word(fibonacci01(), 2), 50, 64), true)).dump();
  EXPECT_EQ(a, b);
  auto j = nlohmann::ordered_json::parse(a);
  EXPECT_TRUE(j["covering_length"].contains("lo"));
  EXPECT_TRUE(j["covering_length"].contains("hi"));
  EXPECT_TRUE(j.contains("interval"));
}

TEST(Json, RationalsInLowestTerms) {
  EXPECT_EQ(io::to_json(Rational(6, 8)), "3/4");
  EXPECT_EQ(io::to_json(RationalInterval(Rational(2, 4), Rational(1))).dump(), R"({"lo":"1/2","hi":"1"})");
}

TEST(Csv, FractionalParts) {
  auto parts = fractional_parts(digits_from_rational(Rational(1, 3), 2), 2, 2);
  EXPECT_EQ(io::to_csv(parts), "n,lo,hi\n0,1/4,1/2\n1,1/2,3/4\n");
}

TEST(WordSource, Forms) {
  EXPECT_EQ(parse::word_source("fib").prefix(8).str(), "01001010");
  EXPECT_EQ(parse::word_source("fib-ab").prefix(8).str(), "abaababa");
  EXPECT_EQ(parse::word_source("trib").prefix(7).str(), "abacaba");
  EXPECT_EQ(parse::word_source("tm").prefix(8).str(), "01101001");
  EXPECT_EQ(parse::word_source("mech:(3-1*sqrt(5))/2:same").prefix(8).str(), "01001010");
  EXPECT_EQ(parse::word_source("shift:1:fib").prefix(7).str(), "1001010");
  EXPECT_EQ(parse::word_source("cons:c:fib-ab").prefix(5).str(), "cabaa");
  EXPECT_EQ(parse::word_source("complement:fib").prefix(4).str(), "1011");
  EXPECT_EQ(parse::word_source("periodic:ab|c").prefix(5).str(), "abccc");
  EXPECT_EQ(parse::word_source("morph:a>ab,b>a:fib-ab").prefix(6).str(), "abaaba");
  EXPECT_EQ(parse::word_source("epi:abc*").prefix(7).str(), "abacaba");
  EXPECT_THROW(parse::word_source("nonsense"), std::invalid_argument);
  EXPECT_THROW(parse::word_source("shift:1"), std::invalid_argument);
}

TEST(WordSource, FromFile) {
  std::string path = ::testing::TempDir() + "word_source_test.txt";
  {
    std::ofstream out(path);
    out << "a,b\na|ab\n";
  }
  EXPECT_EQ(parse::word_source("file:" + path).prefix(5).str(), "aabab");
  {
    std::ofstream out(path);
    out << "a,b\naab\n";
  }
  EXPECT_EQ(parse::finite_word("file:" + path).str(), "aab");
  EXPECT_THROW(parse::word_source("file:" + path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST(FiniteWordSource, Forms) {
  EXPECT_EQ(parse::finite_word("prefix:5:trib").str(), "abaca");
  EXPECT_EQ(parse::finite_word("lit:0110").str(), "0110");
  EXPECT_EQ(parse::finite_word("aab").str(), "aab");
}
