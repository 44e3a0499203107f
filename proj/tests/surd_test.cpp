#include <sturmian/sturmian.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace sturmian;
using Float = boost::multiprecision::cpp_bin_float_100;

namespace {

Float value(long long p, long long q, long long d, long long r) {
  return (Float(p) + Float(q) * boost::multiprecision::sqrt(Float(d))) / Float(r);
}

bool square_free(long long d) {
  for (long long k = 2; k * k <= d; ++k) {
    if (d % (k * k) == 0) return false;
  }
  return true;
}

}  // namespace

TEST(Surd, SpecExamples) {
  EXPECT_EQ(QuadraticSurd(3, -1, 5, 2).floor(), 0);
  EXPECT_EQ(QuadraticSurd(Rational(7, 2)).floor(), 3);
  EXPECT_EQ(QuadraticSurd::compare(QuadraticSurd(1, 1, 5, 2), QuadraticSurd(Rational(8, 5))),
            std::strong_ordering::greater);
}

TEST(Surd, Validation) {
  EXPECT_THROW(QuadraticSurd(1, 1, 4, 1), std::invalid_argument);
  EXPECT_THROW(QuadraticSurd(1, 1, 12, 1), std::invalid_argument);
  EXPECT_THROW(QuadraticSurd(1, 1, 5, 0), std::invalid_argument);
  EXPECT_THROW(QuadraticSurd(1, 1, -5, 1), std::invalid_argument);
}

TEST(Surd, CanonicalForm) {
  QuadraticSurd x(2, 2, 5, 4);
  EXPECT_EQ(x.p(), 1);
  EXPECT_EQ(x.q(), 1);
  EXPECT_EQ(x.r(), 2);
  QuadraticSurd y(1, 1, 5, -2);
  EXPECT_EQ(y.r(), 2);
  EXPECT_EQ(y.p(), -1);
  QuadraticSurd z(1, 3, 1, 2);
  EXPECT_TRUE(z.is_rational());
  EXPECT_EQ(*z.as_rational(), Rational(2));
  EXPECT_EQ(QuadraticSurd(3, -1, 5, 2).str(), "(3-1*sqrt(5))/2");
}

TEST(Surd, FloorMatchesHighPrecision) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long long> coeff(-500, 500), rad(2, 2000), den(1, 60);
  int checked = 0;
  while (checked < 3000) {
    long long p = coeff(rng), q = coeff(rng), d = rad(rng), r = den(rng);
    if (!square_free(d)) continue;
    ++checked;
    QuadraticSurd x(p, q, d, r);
    Float v = value(p, q, d, r);
    EXPECT_EQ(x.floor(), Integer(boost::multiprecision::floor(v).convert_to<long long>())) << x.str();
    EXPECT_EQ(x.ceil(), Integer(boost::multiprecision::ceil(v).convert_to<long long>())) << x.str();
  }
}

TEST(Surd, CompareMatchesHighPrecision) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> coeff(-50, 50), den(1, 20);
  const long long radicands[] = {2, 3, 5, 6, 7};
  for (int i = 0; i < 2000; ++i) {
    long long d1 = radicands[rng() % 5], d2 = radicands[rng() % 5];
    long long p1 = coeff(rng), q1 = coeff(rng), r1 = den(rng), p2 = coeff(rng), q2 = coeff(rng), r2 = den(rng);
    QuadraticSurd x(p1, q1, d1, r1), y(p2, q2, d2, r2);
    Float a = value(p1, q1, d1, r1), b = value(p2, q2, d2, r2);
    auto c = QuadraticSurd::compare(x, y);
    if (a < b) EXPECT_EQ(c, std::strong_ordering::less);
    if (a > b) EXPECT_EQ(c, std::strong_ordering::greater);
    if (a == b) EXPECT_EQ(c, std::strong_ordering::equal);
  }
}

TEST(Surd, FieldArithmetic) {
  QuadraticSurd phi(1, 1, 5, 2);
  EXPECT_EQ(phi * phi, phi + QuadraticSurd(Integer(1)));
  EXPECT_EQ(phi * phi.reciprocal(), QuadraticSurd(Integer(1)));
  EXPECT_EQ(phi.reciprocal(), phi - QuadraticSurd(Integer(1)));
  EXPECT_EQ((phi - phi).sign(), 0);
  EXPECT_THROW(QuadraticSurd(0, 1, 2, 1) + QuadraticSurd(0, 1, 3, 1), std::domain_error);
  EXPECT_THROW(QuadraticSurd(Integer(0)).reciprocal(), std::domain_error);
}

TEST(Surd, ContinuedFractions) {
  auto golden = QuadraticSurd(1, 1, 5, 2).continued_fraction(10);
  for (const auto& a : golden) EXPECT_EQ(a, 1);
  auto root2 = QuadraticSurd(0, 1, 2, 1).continued_fraction(8);
  EXPECT_EQ(root2[0], 1);
  for (std::size_t i = 1; i < root2.size(); ++i) EXPECT_EQ(root2[i], 2);
  auto rational = QuadraticSurd(Rational(7, 3)).continued_fraction(10);
  EXPECT_EQ(rational, (std::vector<Integer>{2, 3}));
}

TEST(Surd, EnclosureContainsValue) {
  QuadraticSurd x(3, -1, 5, 2);
  auto iv = x.enclosure(80);
  EXPECT_LE(iv.width(), Rational(1, 1) / Rational(ipow(2, 80)));
  Float v = value(3, -1, 5, 2);
  Float lo = Float(numerator(iv.lo())) / Float(denominator(iv.lo()));
  Float hi = Float(numerator(iv.hi())) / Float(denominator(iv.hi()));
  EXPECT_LE(lo, v);
  EXPECT_GE(hi, v);
}

TEST(Surd, ParseSyntaxes) {
  EXPECT_EQ(parse::surd("(3-1*sqrt(5))/2"), QuadraticSurd(3, -1, 5, 2));
  EXPECT_EQ(parse::surd("(3-sqrt(5))/2"), QuadraticSurd(3, -1, 5, 2));
  EXPECT_EQ(parse::surd("2/5"), QuadraticSurd(Rational(2, 5)));
  EXPECT_EQ(parse::surd("sqrt(2)-1"), QuadraticSurd(-1, 1, 2, 1));
  EXPECT_THROW(parse::surd("(1+sqrt(5)/2"), std::invalid_argument);
  EXPECT_THROW(parse::surd("sqrt(8)"), std::invalid_argument);
  EXPECT_THROW(parse::surd("(1+sqrt(5))/0"), std::invalid_argument);
}
