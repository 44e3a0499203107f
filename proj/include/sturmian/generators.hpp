#pragma once

// Mechanical, epistandard, morphic, Thue-Morse, skew and periodic balanced words.

#include "analysis.hpp"
#include "morphism.hpp"
#include "surd.hpp"
#include "word.hpp"

#include <bit>
#include <memory>
#include <string>
#include <vector>

namespace sturmian {

namespace detail {

/// floor((A + B sqrt d) / R), R > 0.
inline Integer floor_surd(const Integer& A, const Integer& B, const Integer& d, const Integer& R) {
  Integer t = isqrt(B * B * d);
  Integer fb = B >= 0 ? t : (t * t == B * B * d ? Integer(-t) : Integer(-t - 1));
  return floor_div(A + fb, R);
}

/// Convergent denominators q_0 = 1, q_1 = a_1, ... of {alpha}, up to `limit`.
inline std::vector<Integer> convergent_denominators(const QuadraticSurd& alpha, const Integer& limit) {
  std::vector<Integer> q{1};
  QuadraticSurd x = alpha.frac();
  if (x.sign() == 0) return q;
  Integer q_prev = 0;  // q_{-1}
  x = x.reciprocal();
  while (q.back() <= limit) {
    Integer a = x.floor();
    Integer next = a * q.back() + q_prev;
    q_prev = q.back();
    q.push_back(next);
    QuadraticSurd rest = x - QuadraticSurd(a);
    if (rest.sign() == 0) break;
    x = rest.reciprocal();
  }
  return q;
}

}  // namespace detail

/// Recurrence window of every Sturmian word of slope alpha: each window of
/// length R(n) = n + q_{k+1} + q_k - 1, with q_k <= n < q_{k+1}, contains all
/// n + 1 factors of length n.
inline std::function<std::size_t(std::size_t)> sturmian_recurrence_window(const QuadraticSurd& alpha) {
  if (alpha.is_rational()) throw std::invalid_argument("recurrence window needs an irrational slope");
  auto q = std::make_shared<std::vector<Integer>>(detail::convergent_denominators(alpha, Integer(1) << 62));
  return [q](std::size_t n) -> std::size_t {
    const auto& qs = *q;
    for (std::size_t k = 0; k + 1 < qs.size(); ++k) {
      if (qs[k] <= n && n < qs[k + 1]) {
        return n + static_cast<std::size_t>(qs[k + 1]) + static_cast<std::size_t>(qs[k]) - 1;
      }
    }
    throw std::overflow_error("recurrence window out of range");
  };
}

namespace detail {

inline InfiniteWord mechanical(const QuadraticSurd& alpha, const QuadraticSurd& rho, bool upper) {
  if (alpha.sign() <= 0) throw std::invalid_argument("slope must be positive");
  if (!alpha.is_rational() && !rho.is_rational() && alpha.d() != rho.d()) {
    throw std::invalid_argument("slope and intercept must lie in the same quadratic field");
  }
  const Integer d = alpha.is_rational() ? rho.d() : alpha.d();
  const Integer fa = alpha.floor();
  // n alpha + rho = (n a1 + a0 + (n b1 + b0) sqrt d) / R
  const Integer R = alpha.r() * rho.r();
  const Integer a1 = alpha.p() * rho.r();
  const Integer b1 = alpha.q() * rho.r();
  const Integer a0 = rho.p() * alpha.r();
  const Integer b0 = rho.q() * alpha.r();
  auto value_floor = [=](std::size_t n) {
    Integer N(n);
    if (upper) return Integer(-floor_surd(-(N * a1 + a0), -(N * b1 + b0), d, R));  // ceiling
    return floor_surd(N * a1 + a0, N * b1 + b0, d, R);
  };
  auto fn = [value_floor, fa](std::size_t n) {
    std::vector<Letter> out;
    out.reserve(n);
    Integer prev = value_floor(0);
    for (std::size_t i = 0; i < n; ++i) {
      Integer next = value_floor(i + 1);
      out.emplace_back(next - prev == fa ? 0 : 1);
      prev = std::move(next);
    }
    return out;
  };

  Recipe recipe;
  recipe.kind = RecipeKind::Mechanical;
  recipe.description = std::string(upper ? "mech-upper:" : "mech:") + alpha.str() + ":" + rho.str();
  if (alpha.is_rational()) {
    std::size_t q = static_cast<std::size_t>(alpha.r());
    Alphabet binary = Alphabet::binary();
    recipe.periodic = UltimatelyPeriodicWord(FiniteWord(binary), FiniteWord(binary, fn(q)));
  } else {
    recipe.recurrence_window = sturmian_recurrence_window(alpha);
  }
  return InfiniteWord(Alphabet::binary(), std::move(recipe), fn);
}

}  // namespace detail

/// s_{alpha,rho}(n) = 0 iff floor((n+1)alpha + rho) - floor(n alpha + rho) = floor(alpha).
inline InfiniteWord mechanical_lower(const QuadraticSurd& alpha, const QuadraticSurd& rho) {
  return detail::mechanical(alpha, rho, false);
}

/// Ceiling variant s'_{alpha,rho}.
inline InfiniteWord mechanical_upper(const QuadraticSurd& alpha, const QuadraticSurd& rho) {
  return detail::mechanical(alpha, rho, true);
}

/// c_alpha = s_{alpha,alpha}. Rational slopes give the periodic balanced word.
inline InfiniteWord characteristic(const QuadraticSurd& alpha) { return mechanical_lower(alpha, alpha); }

/// Golden-ratio slope (3 - sqrt 5)/2.
inline QuadraticSurd fibonacci_slope() { return {3, -1, 5, 2}; }

/// Shortest palindrome having w as a prefix.
inline FiniteWord pal_closure(const FiniteWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return w;
  // Longest palindromic suffix: longest border of reverse(w) # w.
  std::vector<int> s;
  s.reserve(2 * n + 1);
  for (std::size_t i = n; i-- > 0;) s.push_back(w[i].index);
  s.push_back(-1);
  for (std::size_t i = 0; i < n; ++i) s.push_back(w[i].index);
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  std::size_t pal_suffix = border.back();
  std::vector<Letter> out = w.vector();
  for (std::size_t i = n - pal_suffix; i-- > 0;) out.push_back(w[i]);
  return FiniteWord(w.alphabet(), std::move(out));
}

/// Pal by repeated palindromic closure, straight from the definition.
inline FiniteWord iterated_pal_by_closure(const FiniteWord& directive) {
  FiniteWord pal(directive.alphabet());
  for (Letter x : directive.letters()) {
    pal.push_back(x);
    pal = pal_closure(pal);
  }
  return pal;
}

namespace detail {

/// Incremental Pal: Pal(wx) = Pal(w) x Pal(w) if x does not occur in w,
/// otherwise Pal(w) followed by Pal(w) with its prefix Pal(w1) removed,
/// where w1 precedes the last occurrence of x in w.
class PalBuilder {
 public:
  explicit PalBuilder(std::size_t alphabet_size) : last_(alphabet_size, npos) { lengths_.push_back(0); }

  void push(Letter x) {
    std::size_t step = lengths_.size() - 1;
    std::size_t old_len = word_.size();
    std::size_t from = 0;
    if (last_[x.index] == npos) {
      word_.push_back(x);
    } else {
      from = lengths_[last_[x.index]];
    }
    word_.reserve(word_.size() + old_len - from);
    for (std::size_t i = from; i < old_len; ++i) word_.push_back(word_[i]);
    last_[x.index] = step;
    lengths_.push_back(word_.size());
  }

  const std::vector<Letter>& word() const { return word_; }
  std::size_t steps() const { return lengths_.size() - 1; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Letter> word_;
  std::vector<std::size_t> lengths_;  // |Pal(x_1..x_i)|
  std::vector<std::size_t> last_;     // step index of the last occurrence of each letter
};

}  // namespace detail

inline FiniteWord iterated_pal(const FiniteWord& directive) {
  detail::PalBuilder b(directive.alphabet().size());
  for (Letter x : directive.letters()) b.push(x);
  return FiniteWord(directive.alphabet(), b.word());
}

/// Eventually periodic directive u v^omega, or a finite directive when v is empty.
class DirectiveWord {
 public:
  DirectiveWord(FiniteWord preperiod, FiniteWord cycle) : preperiod_(std::move(preperiod)), cycle_(std::move(cycle)) {
    if (!(preperiod_.alphabet() == cycle_.alphabet())) throw std::invalid_argument("directive parts over different alphabets");
  }

  static DirectiveWord finite(FiniteWord w) {
    Alphabet a = w.alphabet();
    return {std::move(w), FiniteWord(a)};
  }

  static DirectiveWord periodic(FiniteWord cycle) {
    Alphabet a = cycle.alphabet();
    return {FiniteWord(a), std::move(cycle)};
  }

  /// "abc*" = (abc)^omega, "ab|cd" = ab(cd)^omega, "abc" = finite.
  static DirectiveWord parse(const Alphabet& alphabet, std::string_view text) {
    if (!text.empty() && text.back() == '*') {
      auto body = text.substr(0, text.size() - 1);
      auto bar = body.find('|');
      if (bar != std::string_view::npos) {
        return {FiniteWord::parse(alphabet, body.substr(0, bar)), FiniteWord::parse(alphabet, body.substr(bar + 1))};
      }
      if (body.empty()) throw std::invalid_argument("empty directive cycle");
      return periodic(FiniteWord::parse(alphabet, body));
    }
    auto bar = text.find('|');
    if (bar != std::string_view::npos) {
      auto cycle = FiniteWord::parse(alphabet, text.substr(bar + 1));
      if (cycle.empty()) throw std::invalid_argument("empty directive cycle");
      return {FiniteWord::parse(alphabet, text.substr(0, bar)), cycle};
    }
    return finite(FiniteWord::parse(alphabet, text));
  }

  /// Alphabet inferred from the letters used, in sorted order.
  static DirectiveWord parse(std::string_view text) {
    std::vector<std::string> names;
    for (char c : text) {
      if (c == '*' || c == '|' || c == ' ') continue;
      std::string s(1, c);
      if (std::find(names.begin(), names.end(), s) == names.end()) names.push_back(s);
    }
    if (names.empty()) throw std::invalid_argument("empty directive");
    std::sort(names.begin(), names.end());
    return parse(Alphabet(std::move(names)), text);
  }

  const Alphabet& alphabet() const { return preperiod_.alphabet(); }
  const FiniteWord& preperiod() const { return preperiod_; }
  const FiniteWord& cycle() const { return cycle_; }
  bool is_infinite() const { return !cycle_.empty(); }

  std::optional<std::size_t> length() const {
    if (is_infinite()) return std::nullopt;
    return preperiod_.size();
  }

  Letter at(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    if (!is_infinite()) throw std::out_of_range("finite directive exhausted");
    return cycle_[(i - preperiod_.size()) % cycle_.size()];
  }

  FiniteWord prefix(std::size_t n) const {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return FiniteWord(alphabet(), std::move(out));
  }

  /// Letters occurring infinitely often.
  std::vector<Letter> recurrent_letters() const { return letters_of(cycle_.letters()); }

  std::string str() const {
    if (!is_infinite()) return preperiod_.str();
    if (preperiod_.empty()) return cycle_.str() + "*";
    return preperiod_.str() + "|" + cycle_.str();
  }

 private:
  FiniteWord preperiod_;
  FiniteWord cycle_;
};

/// Limit of Pal(x_1 ... x_n) along the directive.
inline InfiniteWord epistandard(const DirectiveWord& directive) {
  Recipe recipe;
  recipe.kind = RecipeKind::Epistandard;
  recipe.description = "epi:" + directive.str();
  const Alphabet& alphabet = directive.alphabet();

  auto recurrent = directive.recurrent_letters();
  if (directive.is_infinite() && recurrent.size() == 1) {
    // Eventually constant directive w x^omega gives a purely periodic word.
    detail::PalBuilder b(alphabet.size());
    for (Letter y : directive.preperiod().letters()) b.push(y);
    std::size_t before = b.word().size();
    b.push(recurrent.front());
    std::size_t period = b.word().size() - before;
    std::vector<Letter> v(b.word().begin(), b.word().begin() + static_cast<std::ptrdiff_t>(period));
    recipe.periodic = UltimatelyPeriodicWord(FiniteWord(alphabet), FiniteWord(alphabet, std::move(v)));
  }

  return InfiniteWord(alphabet, std::move(recipe), [directive](std::size_t n) {
    detail::PalBuilder b(directive.alphabet().size());
    std::size_t i = 0;
    while (b.word().size() < n) {
      if (auto len = directive.length(); len && i >= *len) {
        throw std::length_error("finite directive " + directive.str() + " exhausted before prefix length " +
                                std::to_string(n));
      }
      b.push(directive.at(i++));
    }
    std::vector<Letter> out(b.word().begin(), b.word().begin() + static_cast<std::ptrdiff_t>(n));
    return out;
  });
}

/// t(n) = parity of the binary digit sum of n, over {0, 1}.
inline InfiniteWord thue_morse() {
  Recipe recipe;
  recipe.kind = RecipeKind::ThueMorse;
  recipe.description = "thue-morse";
  return InfiniteWord(Alphabet::binary(), std::move(recipe), [](std::size_t n) {
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::popcount(i) & 1U);
    return out;
  });
}

/// mu(x^l y x^omega).
inline UltimatelyPeriodicWord skew_word(const Morphism& mu, Letter x, Letter y, std::size_t l) {
  const Alphabet& alphabet = mu.alphabet();
  if (alphabet.size() != 2) throw std::invalid_argument("skew word needs a binary alphabet");
  if (x == y) throw std::invalid_argument("skew word needs two distinct letters");
  if (mu.erasing()) throw std::invalid_argument("skew word needs a non-erasing morphism");
  std::vector<Letter> head(l, x);
  head.push_back(y);
  return {mu.apply(FiniteWord(alphabet, std::move(head))), mu.apply(FiniteWord(alphabet, {x}))};
}

/// (Pal(v) x y)^omega.
inline UltimatelyPeriodicWord periodic_balanced(const FiniteWord& v, Letter x, Letter y) {
  const Alphabet& alphabet = v.alphabet();
  if (alphabet.size() != 2) throw std::invalid_argument("periodic balanced word needs a binary alphabet");
  if (x == y) throw std::invalid_argument("periodic balanced word needs x != y");
  FiniteWord period = iterated_pal(v);
  period.push_back(x);
  period.push_back(y);
  return {FiniteWord(alphabet), std::move(period)};
}

/// Epistandard word directed by (a_1 ... a_k)^omega.
inline InfiniteWord kbonacci(std::size_t k) {
  if (k < 2 || k > 8) throw std::invalid_argument("k-bonacci needs 2 <= k <= 8");
  Alphabet alphabet = Alphabet::latin(k);
  std::vector<Letter> cycle;
  for (std::size_t i = 0; i < k; ++i) cycle.emplace_back(i);
  return epistandard(DirectiveWord::periodic(FiniteWord(alphabet, std::move(cycle))));
}

/// Fibonacci word over {a, b}.
inline InfiniteWord fibonacci_word() { return kbonacci(2); }

/// Fibonacci word over {0, 1} as the characteristic word of slope (3 - sqrt 5)/2.
inline InfiniteWord fibonacci01() { return characteristic(fibonacci_slope()); }

}  // namespace sturmian
