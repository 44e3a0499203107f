#pragma once

// Factor sets, complexity, special factors, balance and periodicity.

#include "word.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sturmian {

namespace detail {

inline std::string key(std::span<const Letter> w) {
  std::string s(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = static_cast<char>(w[i].index);
  return s;
}

inline FiniteWord from_key(const Alphabet& alphabet, const std::string& k) {
  std::vector<Letter> letters;
  letters.reserve(k.size());
  for (char c : k) letters.emplace_back(static_cast<unsigned char>(c));
  return FiniteWord(alphabet, std::move(letters));
}

inline void require_binary(const Alphabet& alphabet, const char* what) {
  if (alphabet.size() != 2) throw std::invalid_argument(std::string(what) + " requires a binary alphabet");
}

}  // namespace detail

/// k-fold circular shift.
inline FiniteWord shift(const FiniteWord& w, std::size_t k) {
  if (w.empty()) throw std::invalid_argument("circular shift of the empty word");
  std::vector<Letter> v = w.vector();
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % v.size()), v.end());
  return FiniteWord(w.alphabet(), std::move(v));
}

inline FiniteWord reversal(const FiniteWord& w) {
  std::vector<Letter> v = w.vector();
  std::reverse(v.begin(), v.end());
  return FiniteWord(w.alphabet(), std::move(v));
}

inline bool is_palindrome(std::span<const Letter> w) { return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin()); }
inline bool is_palindrome(const FiniteWord& w) { return is_palindrome(w.letters()); }

/// Letters occurring in w, in index order.
inline std::vector<Letter> letters_of(std::span<const Letter> w) {
  std::vector<bool> seen(Alphabet::kMaxSize, false);
  for (Letter x : w) seen[x.index] = true;
  std::vector<Letter> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.emplace_back(i);
  }
  return out;
}

/// Distinct length-n factors, sorted by letter index.
inline std::vector<FiniteWord> factors(const FiniteWord& w, std::size_t n) {
  if (n > w.size()) throw std::invalid_argument("factor length exceeds available material");
  std::set<std::string> keys;
  auto letters = w.letters();
  for (std::size_t i = 0; i + n <= letters.size(); ++i) keys.insert(detail::key(letters.subspan(i, n)));
  std::vector<FiniteWord> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(detail::from_key(w.alphabet(), k));
  return out;
}

/// Factors of length n of the prefix of length L.
inline std::vector<FiniteWord> factors(const InfiniteWord& w, std::size_t n, std::size_t L) {
  if (L < n) throw std::invalid_argument("prefix length shorter than factor length");
  return factors(w.prefix(L), n);
}

inline std::size_t factor_count(std::span<const Letter> w, std::size_t n) {
  if (n > w.size()) throw std::invalid_argument("factor length exceeds available material");
  std::unordered_set<std::string> keys;
  for (std::size_t i = 0; i + n <= w.size(); ++i) keys.insert(detail::key(w.subspan(i, n)));
  return keys.size();
}

struct ComplexityEntry {
  std::size_t k = 0;
  std::size_t p = 0;
  /// True when the construction certifies the prefix holds every factor of
  /// length k; otherwise p is a lower bound.
  bool exact = false;
};

struct ComplexityTable {
  std::size_t L = 0;
  std::vector<ComplexityEntry> entries;

  std::vector<std::size_t> values() const {
    std::vector<std::size_t> out;
    for (const auto& e : entries) out.push_back(e.p);
    return out;
  }

  bool all_exact() const {
    return std::all_of(entries.begin(), entries.end(), [](const ComplexityEntry& e) { return e.exact; });
  }
};

/// p(1..k_max) over a finite word; exact by definition.
inline ComplexityTable complexity(const FiniteWord& w, std::size_t k_max) {
  if (k_max > w.size()) throw std::invalid_argument("k_max exceeds word length");
  ComplexityTable t{w.size(), {}};
  for (std::size_t k = 1; k <= k_max; ++k) t.entries.push_back({k, factor_count(w.letters(), k), true});
  return t;
}

inline ComplexityTable complexity(const InfiniteWord& w, std::size_t k_max, std::size_t L) {
  if (L < k_max) throw std::invalid_argument("prefix length shorter than k_max");
  FiniteWord material = w.prefix(L);
  ComplexityTable t{L, {}};
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto need = w.exact_prefix_length(k);
    t.entries.push_back({k, factor_count(material.letters(), k), need && *need <= L});
  }
  return t;
}

enum class Side { Left, Right };

/// Length-n factors with at least two extensions on the given side, among
/// the factors visible in w.
inline std::vector<FiniteWord> special_factors(const FiniteWord& w, std::size_t n, Side side) {
  std::map<std::string, std::set<std::uint8_t>> ext;
  auto letters = w.letters();
  for (std::size_t i = 0; i + n + 1 <= letters.size(); ++i) {
    if (side == Side::Left) {
      ext[detail::key(letters.subspan(i + 1, n))].insert(letters[i].index);
    } else {
      ext[detail::key(letters.subspan(i, n))].insert(letters[i + n].index);
    }
  }
  std::vector<FiniteWord> out;
  for (const auto& [k, s] : ext) {
    if (s.size() >= 2) out.push_back(detail::from_key(w.alphabet(), k));
  }
  return out;
}

/// Number of distinct extensions of each length-n factor on one side.
inline std::map<FiniteWord, std::size_t> extension_counts(const FiniteWord& w, std::size_t n, Side side) {
  std::map<std::string, std::set<std::uint8_t>> ext;
  auto letters = w.letters();
  for (std::size_t i = 0; i + n + 1 <= letters.size(); ++i) {
    if (side == Side::Left) {
      ext[detail::key(letters.subspan(i + 1, n))].insert(letters[i].index);
    } else {
      ext[detail::key(letters.subspan(i, n))].insert(letters[i + n].index);
    }
  }
  std::map<FiniteWord, std::size_t> out;
  for (const auto& [k, s] : ext) out.emplace(detail::from_key(w.alphabet(), k), s.size());
  return out;
}

/// Two equal-length factors whose counts of the second letter differ by 2 or more.
inline std::optional<std::pair<FiniteWord, FiniteWord>> balance_violation(const FiniteWord& w) {
  detail::require_binary(w.alphabet(), "balance");
  const std::size_t n = w.size();
  std::vector<std::size_t> ones(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + w[i].index;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t lo_pos = 0;
    std::size_t hi_pos = 0;
    std::size_t lo = len + 1;
    std::size_t hi = 0;
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::size_t c = ones[i + len] - ones[i];
      if (c < lo) {
        lo = c;
        lo_pos = i;
      }
      if (c > hi) {
        hi = c;
        hi_pos = i;
      }
    }
    if (hi >= lo + 2) return std::make_pair(w.slice(lo_pos, len), w.slice(hi_pos, len));
  }
  return std::nullopt;
}

inline bool is_balanced(const FiniteWord& w) { return !balance_violation(w).has_value(); }

/// Inner word u with both 0u0 and 1u1 occurring, if any.
inline std::optional<FiniteWord> block_condition_violation(const FiniteWord& w) {
  detail::require_binary(w.alphabet(), "block condition");
  auto letters = w.letters();
  for (std::size_t len = 0; len + 2 <= letters.size(); ++len) {
    std::unordered_map<std::string, unsigned> seen;
    for (std::size_t i = 0; i + len + 2 <= letters.size(); ++i) {
      Letter first = letters[i];
      if (first != letters[i + len + 1]) continue;
      unsigned& mask = seen[detail::key(letters.subspan(i + 1, len))];
      mask |= 1U << first.index;
      if (mask == 3U) return w.slice(i + 1, len);
    }
  }
  return std::nullopt;
}

inline bool block_condition(const FiniteWord& w) { return !block_condition_violation(w).has_value(); }

/// Smallest p > 0 with w[i] = w[i+p] wherever both are defined.
inline std::size_t detect_period(const FiniteWord& w) {
  if (w.empty()) throw std::invalid_argument("period of the empty word");
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  return n - border[n - 1];
}

struct PeriodicityHeuristic {
  /// The periodic tail must repeat the period at least this many times.
  std::size_t min_repeats = 4;
  /// ... and cover at least this fraction of the prefix.
  double min_tail_fraction = 0.5;
};

/// A form u v^omega consistent with the whole prefix, with the shortest
/// period whose tail is long enough per the heuristic. Never a proof.
inline std::optional<UltimatelyPeriodicWord> classify_eventually_periodic(const FiniteWord& w,
                                                                         PeriodicityHeuristic h = {}) {
  const std::size_t n = w.size();
  if (n == 0 || h.min_repeats == 0) return std::nullopt;
  for (std::size_t p = 1; p * h.min_repeats <= n; ++p) {
    // Smallest s such that w[i] = w[i+p] for all s <= i < n-p.
    std::size_t s = n - p;
    while (s > 0 && w[s - 1] == w[s - 1 + p]) --s;
    std::size_t tail = n - s;
    if (tail >= p * h.min_repeats && static_cast<double>(tail) >= h.min_tail_fraction * static_cast<double>(n)) {
      return UltimatelyPeriodicWord(w.prefix(s), w.slice(s, p));
    }
  }
  return std::nullopt;
}

}  // namespace sturmian
