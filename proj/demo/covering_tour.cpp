// Fractional parts {xi 2^n} for Sturmian and random binary digits.

#include <sturmian/sturmian.hpp>

#include <iostream>
#include <random>

namespace {

void report(const char* label, const sturmian::DigitExpansion& xi) {
  using namespace sturmian;
  auto parts = fractional_parts(xi, 200, 256);
  auto cover = min_covering_interval(parts, true);
  std::cout << label << ": shortest arc ~ " << static_cast<double>(cover.nominal.length) << " starting at "
            << static_cast<double>(cover.nominal.lo) << '\n';
}

}  // namespace

int main() {
  using namespace sturmian;

  report("fibonacci digits", from_word(fibonacci01(), 2));
  report("1/3", digits_from_rational(Rational(1, 3), 2));

  std::mt19937 rng(7);
  std::vector<Letter> bits;
  for (int i = 0; i < 600; ++i) bits.emplace_back(rng() & 1);
  FiniteWord random(Alphabet::binary(), bits);
  report("random bits", from_word(InfiniteWord::from_periodic(UltimatelyPeriodicWord(random, FiniteWord(Alphabet::binary(), {Letter(0)}))), 2));

  auto r = veerman_interval(fibonacci_slope(), 64);
  std::cout << "r(1c) - r(0c) ~ " << static_cast<double>(r.difference.lo()) << '\n';
}
