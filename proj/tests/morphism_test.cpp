#include <sturmian/sturmian.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace sturmian;

TEST(Morphism, PsiOnFibonacci) {
  Alphabet ab = Alphabet::latin(2);
  auto image = psi(ab, Letter(0)).apply(fibonacci_word());
  EXPECT_EQ(image.prefix(19).str(), "aabaaabaabaaabaaaba");
}

TEST(Morphism, PsiCOnCF) {
  auto cf = parse::word_source("cons:c:fib-ab");
  ASSERT_EQ(cf.alphabet().size(), 3u);
  auto image = psi(cf.alphabet(), cf.alphabet().letter("c")).apply(cf);
  EXPECT_EQ(image.prefix(17).str(), "ccacbcacacbcacbca");
}

TEST(Morphism, PhiIsPsiATheta) {
  Alphabet ab = Alphabet::latin(2);
  auto composed = compose(psi(ab, Letter(0)), theta(ab, Letter(0), Letter(1)));
  auto phi = fibonacci_morphism(ab);
  EXPECT_EQ(phi.image(Letter(0)).str(), "ab");
  EXPECT_EQ(phi.image(Letter(1)).str(), "a");
  EXPECT_EQ(composed, phi);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& x : oracle::all_binary_words(n)) {
      FiniteWord y(ab, x.vector());
      EXPECT_EQ(composed.apply(y), phi.apply(y));
    }
  }
}

TEST(Morphism, ComposeLaw) {
  Alphabet abc = Alphabet::latin(3);
  std::mt19937 rng(6);
  auto random_morphism = [&] {
    std::vector<FiniteWord> images;
    for (int i = 0; i < 3; ++i) {
      std::vector<Letter> img;
      for (std::size_t j = 0, n = 1 + rng() % 3; j < n; ++j) img.emplace_back(rng() % 3);
      images.emplace_back(abc, img);
    }
    return Morphism(abc, images);
  };
  for (int i = 0; i < 200; ++i) {
    auto m1 = random_morphism(), m2 = random_morphism();
    std::vector<Letter> x;
    for (std::size_t j = 0, n = rng() % 10; j < n; ++j) x.emplace_back(rng() % 3);
    FiniteWord wx(abc, x);
    EXPECT_EQ(compose(m1, m2).apply(wx), m1.apply(m2.apply(wx)));
  }
}

TEST(Morphism, InfiniteImageMatchesFiniteImage) {
  Alphabet ab = Alphabet::latin(2);
  auto m = parse::morphism(ab, "a>aba,b>b");
  auto f = fibonacci_word();
  auto image = m.apply(f).prefix(500);
  EXPECT_TRUE(m.apply(f.prefix(500)).has_prefix(image));
}

TEST(Morphism, PeriodicFormIsMapped) {
  auto p = parse::word_source("periodic:a|ab");
  auto image = parse::morphism(Alphabet::latin(2), "a>ab,b>a").apply(p);
  ASSERT_TRUE(image.periodic_form());
  EXPECT_EQ(image.prefix(30), image.periodic_form()->prefix(30));
}

TEST(Morphism, Errors) {
  Alphabet ab = Alphabet::latin(2);
  EXPECT_THROW(psi(ab, Letter(0)).apply(FiniteWord(Alphabet::latin(3))), std::invalid_argument);
  auto erasing = Morphism(ab, {FiniteWord(ab), FiniteWord::parse(ab, "a")});
  EXPECT_TRUE(erasing.erasing());
  EXPECT_THROW(erasing.apply(fibonacci_word()), std::invalid_argument);
  EXPECT_THROW(parse::morphism(ab, "a>ab,a>b"), std::invalid_argument);
  EXPECT_THROW(parse::morphism(ab, "ab"), std::invalid_argument);
}

TEST(Morphism, Str) {
  Alphabet ab = Alphabet::latin(2);
  EXPECT_EQ(fibonacci_morphism(ab).str(), "a>ab,b>a");
  EXPECT_EQ(fibonacci_morphism_tilde(ab).str(), "a>ba,b>a");
  EXPECT_EQ(exchange(ab).str(), "a>b,b>a");
}
