// The Fibonacci word three ways, its factors, and the extremal inequality.

#include <sturmian/sturmian.hpp>

#include <iostream>

int main() {
  using namespace sturmian;

  auto mech = characteristic(fibonacci_slope());
  auto epi = epistandard(DirectiveWord::parse("ab*"));
  auto fixed = fibonacci_word();

  std::cout << "mechanical   " << mech.prefix(34).str() << '\n';
  std::cout << "epistandard  " << epi.prefix(34).str() << '\n';
  std::cout << "fixed point  " << fixed.prefix(34).str() << '\n';

  auto table = complexity(fixed, 8, 2000);
  std::cout << "p(k):";
  for (const auto& e : table.entries) std::cout << ' ' << e.p;
  std::cout << '\n';

  std::cout << "left special of length 5: ";
  for (const auto& f : special_factors(fixed.prefix(2000), 5, Side::Left)) std::cout << f.str() << ' ';
  std::cout << '\n';

  auto verdict = check_sturmian_extremal(shift(fixed, 7), fixed, 200, 400);
  std::cout << "a c <= T^k(T^7 f) <= b c: " << to_string(verdict.status) << " (K=" << verdict.K << ", L=" << verdict.L
            << ")\n";

  auto order = LexOrder::natural(2);
  std::cout << "min factor of length 10: " << min_factor(fixed.prefix(2000), 10, order).str() << '\n';
  std::cout << "max factor of length 10: " << max_factor(fixed.prefix(2000), 10, order).str() << '\n';
}
