#pragma once

// Digit expansions, fractional parts {xi b^n} and their covering arcs.
// Reals are represented only through exact rational enclosures.

#include "analysis.hpp"
#include "extremal.hpp"
#include "generators.hpp"
#include "numeric.hpp"
#include "surd.hpp"
#include "verdict.hpp"
#include "word.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sturmian {

enum class DigitProvenance { FromRational, FromWord };

/// Base-b digits of a number in [0, 1), most significant first.
struct DigitExpansion {
  unsigned base = 2;
  InfiniteWord digits;
  DigitProvenance provenance = DigitProvenance::FromWord;
  std::optional<Rational> source;
};

/// Reads a word's letter indices as base-b digits.
inline DigitExpansion from_word(const InfiniteWord& w, unsigned base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  if (w.alphabet().size() > base) throw std::invalid_argument("word has more letters than the base has digits");
  return {base, w, DigitProvenance::FromWord, std::nullopt};
}

/// Greedy base-b expansion of a rational xi in (0, 1). Eventually periodic;
/// the periodic form is attached when the denominator is small enough for
/// remainder cycle detection.
inline DigitExpansion digits_from_rational(const Rational& xi, unsigned base) {
  if (base < 2 || base > 36) throw std::invalid_argument("base must be in 2..36");
  if (xi <= 0 || xi >= 1) throw std::invalid_argument("xi must lie in (0, 1), got " + to_string(xi));
  const Integer p = numerator(xi);
  const Integer q = denominator(xi);
  const Integer b(base);
  Alphabet alphabet = Alphabet::digits(base);
  Recipe recipe;
  recipe.kind = RecipeKind::UltimatelyPeriodic;
  recipe.description = "digits(" + to_string(xi) + ", base " + std::to_string(base) + ")";
  if (q <= 1'000'000) {
    std::map<Integer, std::size_t> seen;
    std::vector<Letter> digits;
    Integer r = p;
    while (!seen.count(r)) {
      seen.emplace(r, digits.size());
      r *= b;
      digits.emplace_back(static_cast<std::size_t>(r / q));
      r %= q;
    }
    std::size_t start = seen[r];
    std::vector<Letter> u(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
    std::vector<Letter> v(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
    recipe.periodic = UltimatelyPeriodicWord(FiniteWord(alphabet, std::move(u)), FiniteWord(alphabet, std::move(v)));
  }
  InfiniteWord w(alphabet, std::move(recipe), [p, q, b](std::size_t n) {
    std::vector<Letter> out;
    out.reserve(n);
    Integer r = p;
    for (std::size_t i = 0; i < n; ++i) {
      r *= b;
      out.emplace_back(static_cast<std::size_t>(r / q));
      r %= q;
    }
    return out;
  });
  return {base, std::move(w), DigitProvenance::FromRational, xi};
}

/// [sum d_i b^(-i-1), that + b^(-N)] for an N-digit prefix.
inline RationalInterval real_bounds_from_digits(const FiniteWord& digits, unsigned base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
  Integer acc = 0;
  for (Letter d : digits.letters()) {
    if (d.index >= base) throw std::invalid_argument("digit out of range for base");
    acc = acc * base + d.index;
  }
  Integer scale = ipow(Integer(base), static_cast<unsigned>(digits.size()));
  return {Rational(acc, scale), Rational(acc + 1, scale)};
}

/// Enclosures of {xi b^n} for n = 0..N-1, each of width b^-L.
inline std::vector<RationalInterval> fractional_parts(const DigitExpansion& d, std::size_t N, std::size_t L) {
  if (L == 0) throw std::invalid_argument("precision L must be positive");
  FiniteWord material = d.digits.prefix(N + L - 1);
  std::vector<RationalInterval> out;
  out.reserve(N);
  for (std::size_t n = 0; n < N; ++n) out.push_back(real_bounds_from_digits(material.slice(n, L), d.base));
  return out;
}

/// Sorted, deduplicated points of [0, 1).
class TorusPointSet {
 public:
  explicit TorusPointSet(std::vector<Rational> points) : points_(std::move(points)) {
    for (const auto& x : points_) {
      if (x < 0 || x >= 1) throw std::invalid_argument("torus point outside [0, 1): " + to_string(x));
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  const std::vector<Rational>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Rational> points_;
};

struct Covering {
  Rational length;
  /// Covering arc [lo, hi]; hi >= 1 means the arc wraps through 0.
  Rational lo;
  Rational hi;
};

/// Shortest closed arc (or interval, if not circular) containing every point:
/// the complement of the largest gap.
inline Covering min_covering_interval(const TorusPointSet& ps, bool circular = true) {
  const auto& p = ps.points();
  if (p.empty()) throw std::invalid_argument("covering of an empty point set");
  Covering best{p.back() - p.front(), p.front(), p.back()};
  if (!circular) return best;
  Rational wrap_gap = Rational(1) - p.back() + p.front();
  Rational largest = wrap_gap;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational gap = p[i + 1] - p[i];
    if (gap > largest) {
      largest = gap;
      best = {Rational(1) - gap, p[i + 1], p[i] + 1};
    }
  }
  return best;
}

struct CoveringBounds {
  /// The true covering length lies in [lo, hi].
  Rational lo;
  Rational hi;
  /// Covering of the left endpoints.
  Covering nominal;
  Rational width;
};

/// Covering length of points known only up to enclosures. Moving every
/// point by at most w moves the covering length by at most w.
inline CoveringBounds min_covering_interval(const std::vector<RationalInterval>& intervals, bool circular = true) {
  if (intervals.empty()) throw std::invalid_argument("covering of an empty interval list");
  std::vector<Rational> left;
  Rational w = 0;
  for (const auto& iv : intervals) {
    left.push_back(frac(iv.lo()));
    w = std::max(w, iv.width());
  }
  Covering c = min_covering_interval(TorusPointSet(left), circular);
  Rational lo = std::max(Rational(0), c.length - w);
  Rational hi = std::min(Rational(1), c.length + w);
  return {lo, hi, c, w};
}

// Bugeaud-Dubickas classification.

struct ClassificationReport {
  unsigned base = 2;
  std::size_t length = 0;
  std::vector<unsigned> values;
  bool adjacent = false;
  std::optional<unsigned> k;
  std::optional<bool> balanced;
  std::optional<UltimatelyPeriodicWord> periodic;
  std::string verdict;
  std::string interval_kind;
  std::optional<std::size_t> characteristic_shift;
};

struct ClassifyBounds {
  std::size_t shifts = 32;
  std::size_t K = 100;
  std::size_t L = 200;
};

/// Digits use exactly {k, k+1}; the induced binary word is balanced; no
/// periodicity certificate. The semi-open refinement needs some shift j >= 1
/// to pass the bounded characteristic test, else it stays undetermined.
inline ClassificationReport bugeaud_dubickas_classify(const FiniteWord& digits, unsigned base,
                                                      ClassifyBounds bounds = {}) {
  if (digits.size() < 2) throw std::invalid_argument("classification needs at least two digits");
  ClassificationReport r;
  r.base = base;
  r.length = digits.size();
  for (Letter x : letters_of(digits.letters())) {
    if (x.index >= base) throw std::invalid_argument("digit out of range for base");
    r.values.push_back(x.index);
  }
  r.adjacent = r.values.size() == 2 && r.values[1] == r.values[0] + 1;
  if (!r.adjacent) {
    r.verdict = "excluded";
    r.interval_kind = "none";
    return r;
  }
  r.k = r.values[0];
  Alphabet binary = Alphabet::binary();
  std::vector<Letter> induced;
  for (Letter x : digits.letters()) induced.emplace_back(x.index - *r.k);
  FiniteWord word(binary, induced);
  r.balanced = is_balanced(word);
  if (!*r.balanced) {
    r.verdict = "excluded";
    r.interval_kind = "none";
    return r;
  }
  r.periodic = classify_eventually_periodic(word);
  if (r.periodic) {
    r.verdict = "periodic balanced";
    r.interval_kind = "closed";
    return r;
  }
  r.verdict = "consistent with Sturmian on {" + std::to_string(*r.k) + "," + std::to_string(*r.k + 1) + "}";
  r.interval_kind = "undetermined at bounds";
  auto as_infinite = InfiniteWord::from_periodic(
      UltimatelyPeriodicWord(word, FiniteWord(binary, {Letter(0)})), "digits");
  for (std::size_t j = 1; j <= bounds.shifts; ++j) {
    if (j + bounds.K + bounds.L + 1 > word.size()) break;
    auto t = shift(as_infinite, j);
    if (check_sturmian_extremal(t, t, bounds.K, bounds.L).holds()) {
      r.characteristic_shift = j;
      r.interval_kind = "semi-open";
      break;
    }
  }
  return r;
}

// Self-Sturmian numbers and the sets Gamma, Gamma~.

/// s = 1u with u characteristic Sturmian starting with 1, at bounds.
inline BoundedVerdict self_sturmian_test(const InfiniteWord& s, std::size_t K, std::size_t L) {
  detail::require_binary(s.alphabet(), "self-Sturmian test");
  BoundedVerdict v{"self-sturmian", VerdictStatus::Holds, K, L};
  auto head = s.prefix(2);
  for (std::size_t i = 0; i < 2; ++i) {
    if (head[i] != Letter(1)) {
      v.fail({0, i, "s begins with 11", head.prefix(i + 1).str(), {}});
      return v;
    }
  }
  if (const auto& p = s.periodic_form()) {
    v.fail({0, 0, "aperiodic", "ultimately periodic " + p->str(), "Sturmian words are aperiodic"});
    return v;
  }
  auto u = shift(s, 1);
  BoundedVerdict inner = check_sturmian_extremal(u, u, K, L);
  inner.check = v.check;
  return inner;
}

struct GammaTildeResult {
  bool member = true;
  /// The orbit closed up within K steps, so the answer covers every k.
  bool exact = false;
  std::optional<std::size_t> violating_k;
  std::size_t checked = 0;
};

/// 1 - x <= {2^k x} <= x for k = 0..K, exact once the orbit cycles.
inline GammaTildeResult gamma_tilde_member(const Rational& x, std::size_t K) {
  if (x < 0 || x > 1) throw std::invalid_argument("x must lie in [0, 1]");
  const Integer q = denominator(x);
  Integer p = numerator(x) % q;  // {x}
  const Rational lo = Rational(1) - x;
  std::set<Integer> seen;
  GammaTildeResult r;
  for (std::size_t k = 0; k <= K; ++k) {
    if (!seen.insert(p).second) {
      r.exact = true;
      break;
    }
    Rational y(p, q);
    ++r.checked;
    if (y < lo || y > x) {
      r.member = false;
      r.exact = true;
      r.violating_k = k;
      return r;
    }
    p = (p * 2) % q;
  }
  return r;
}

/// sum_{n < N} t_n 2^-n plus the tail bound 2^(-N+1).
inline RationalInterval thue_morse_constant(std::size_t N) {
  if (N == 0) throw std::invalid_argument("N must be positive");
  auto t = thue_morse().prefix(N);
  Integer acc = 0;
  for (std::size_t n = 0; n < N; ++n) acc = acc * 2 + t[n].index;
  // acc / 2^(N-1) = sum t_n 2^-n
  Integer scale = ipow(2, static_cast<unsigned>(N - 1));
  Rational lo(acc, scale);
  return {lo, lo + Rational(Integer(1), scale)};
}

struct VeermanResult {
  RationalInterval r0;
  RationalInterval r1;
  std::size_t L = 0;
  /// Enclosure of r1 - r0.
  RationalInterval difference;
  Rational midpoint_difference;
};

/// Binary enclosures of r(0 c_alpha) and r(1 c_alpha) from L digits.
inline VeermanResult veerman_interval(const QuadraticSurd& alpha, std::size_t L) {
  if (alpha.is_rational()) throw std::invalid_argument("Veerman endpoints need an irrational slope");
  if (alpha.sign() <= 0 || alpha >= QuadraticSurd(1)) throw std::invalid_argument("slope must lie in (0, 1)");
  if (L < 2) throw std::invalid_argument("L must be at least 2");
  auto c = characteristic(alpha);
  auto zero = prepend(Letter(0), c).prefix(L);
  auto one = prepend(Letter(1), c).prefix(L);
  auto r0 = real_bounds_from_digits(zero, 2);
  auto r1 = real_bounds_from_digits(one, 2);
  return {r0, r1, L, RationalInterval(r1.lo() - r0.hi(), r1.hi() - r0.lo()), r1.midpoint() - r0.midpoint()};
}

}  // namespace sturmian
