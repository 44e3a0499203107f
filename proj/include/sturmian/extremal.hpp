#pragma once

// Lexicographically extremal factors and the bounded characterization checks
// built on them.

#include "analysis.hpp"
#include "generators.hpp"
#include "verdict.hpp"
#include "word.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace sturmian {

struct AcceptablePair {
  Letter letter;
  LexOrder order;
};

inline LexOrder reversed(const LexOrder& order) {
  std::vector<Letter> seq;
  for (std::size_t r = order.size(); r-- > 0;) seq.push_back(order.at_rank(r));
  return LexOrder::from_sequence(seq);
}

/// Every order of `letters`, each paired with its minimum. Letters of the
/// alphabet outside `letters` are ranked last in index order.
inline std::vector<AcceptablePair> acceptable_pairs(std::size_t alphabet_size, std::vector<Letter> letters) {
  if (letters.empty()) throw std::invalid_argument("acceptable pairs of an empty letter set");
  if (letters.size() > 8) throw std::invalid_argument("acceptable pairs limited to 8 letters");
  std::sort(letters.begin(), letters.end());
  std::vector<Letter> rest;
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    if (!std::binary_search(letters.begin(), letters.end(), Letter(i))) rest.emplace_back(i);
  }
  std::vector<AcceptablePair> out;
  do {
    std::vector<Letter> seq = letters;
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.push_back({letters.front(), LexOrder::from_sequence(seq)});
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

inline std::vector<AcceptablePair> acceptable_pairs(const Alphabet& alphabet) {
  std::vector<Letter> all;
  for (std::size_t i = 0; i < alphabet.size(); ++i) all.emplace_back(i);
  return acceptable_pairs(alphabet.size(), std::move(all));
}

// Extremal factors.

/// Start of a minimal length-k window of w under the order.
inline std::size_t min_factor_position(std::span<const Letter> w, std::size_t k, const LexOrder& order) {
  if (k > w.size()) throw std::invalid_argument("factor length exceeds available material");
  std::size_t best = 0;
  for (std::size_t i = 1; i + k <= w.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Letter x = w[i + j];
      Letter y = w[best + j];
      if (x == y) continue;
      if (order.less(x, y)) best = i;
      break;
    }
  }
  return best;
}

inline FiniteWord min_factor(const FiniteWord& w, std::size_t k, const LexOrder& order) {
  return w.slice(min_factor_position(w.letters(), k, order), k);
}

inline FiniteWord max_factor(const FiniteWord& w, std::size_t k, const LexOrder& order) {
  return min_factor(w, k, reversed(order));
}

/// How much of an infinite word to scan when looking for extremal factors.
struct MaterialPolicy {
  std::size_t factor = 64;
  std::size_t floor = 4096;
};

struct Material {
  std::size_t length = 0;
  /// The prefix provably contains every factor of the requested length.
  bool exact = false;
};

inline Material material_for(const InfiniteWord& w, std::size_t k, MaterialPolicy policy = {}) {
  if (auto n = w.exact_prefix_length(k)) return {std::max(*n, k), true};
  return {std::max(policy.floor, policy.factor * k), false};
}

/// Prefix of length K of min(w).
inline FiniteWord min_word(const InfiniteWord& w, std::size_t K, const LexOrder& order, MaterialPolicy policy = {}) {
  if (K == 0) throw std::invalid_argument("min_word needs K >= 1");
  return min_factor(w.prefix(material_for(w, K, policy).length), K, order);
}

inline FiniteWord max_word(const InfiniteWord& w, std::size_t K, const LexOrder& order, MaterialPolicy policy = {}) {
  return min_word(w, K, reversed(order), policy);
}

/// min(w|k) for the largest k such that min(w|1), ..., min(w|k) form a
/// prefix chain. Once the chain breaks it cannot resume, so the scan stops.
inline FiniteWord min_finite(const FiniteWord& w, const LexOrder& order) {
  if (w.empty()) throw std::invalid_argument("min of the empty word");
  FiniteWord best = min_factor(w, 1, order);
  for (std::size_t k = 2; k <= w.size(); ++k) {
    FiniteWord next = min_factor(w, k, order);
    if (!next.has_prefix(best)) break;
    best = std::move(next);
  }
  return best;
}

inline FiniteWord max_finite(const FiniteWord& w, const LexOrder& order) {
  if (w.alphabet().size() != 2) throw std::invalid_argument("finite max is defined for binary alphabets only");
  return min_finite(w, reversed(order));
}

inline FiniteWord min_finite(const FiniteWord& w) { return min_finite(w, LexOrder::natural(w.alphabet().size())); }
inline FiniteWord max_finite(const FiniteWord& w) { return max_finite(w, LexOrder::natural(w.alphabet().size())); }

// Shift-orbit bounds.

namespace detail {

inline std::string render(const Alphabet& alphabet, std::span<const Letter> w) {
  return FiniteWord(alphabet, std::vector<Letter>(w.begin(), w.end())).str();
}

struct ShiftBound {
  std::vector<Letter> word;
  std::string name;
  bool strict = false;
};

/// lower <= T^k(s) <= upper (strict where flagged) for 0 <= k <= K at depth L.
inline void check_shift_bounds(BoundedVerdict& v, const Alphabet& alphabet, std::span<const Letter> s,
                               const std::string& s_name, std::size_t K, std::size_t L,
                               const std::optional<ShiftBound>& lower, const std::optional<ShiftBound>& upper,
                               const LexOrder& order) {
  for (std::size_t k = 0; k <= K && v.holds(); ++k) {
    auto window = s.subspan(k, L);
    std::string shifted = "T^" + std::to_string(k) + "(" + s_name + ")";
    auto judge = [&](std::span<const Letter> small, std::span<const Letter> big, const std::string& small_name,
                     const std::string& big_name, bool strict) {
      auto c = lex_compare(small, big, order, L);
      if (c.is_equal()) {
        ++v.undecided;
        v.all_decided_strict = false;
        return true;
      }
      if (c.is_greater()) {
        std::size_t n = c.depth + 1;
        v.fail({k, c.depth, small_name + (strict ? " < " : " <= ") + big_name,
                small_name + "|" + std::to_string(n) + " = " + render(alphabet, small.first(n)) + ", " + big_name +
                    "|" + std::to_string(n) + " = " + render(alphabet, big.first(n)),
                {}});
        return false;
      }
      return true;
    };
    if (lower && !judge(lower->word, window, lower->name, shifted, lower->strict)) return;
    if (upper && !judge(window, upper->word, shifted, upper->name, upper->strict)) return;
  }
}

inline std::vector<Letter> cons(Letter x, const InfiniteWord& w, std::size_t L) {
  std::vector<Letter> out{x};
  if (L > 1) {
    auto p = w.prefix(L - 1).vector();
    out.insert(out.end(), p.begin(), p.end());
  }
  out.resize(L);
  return out;
}

inline void require_binary(const InfiniteWord& w, const char* what) { require_binary(w.alphabet(), what); }

}  // namespace detail

/// 0u <= T^k(s) <= 1u for all k <= K, at depth L.
inline BoundedVerdict check_sturmian_extremal(const InfiniteWord& s, const InfiniteWord& u, std::size_t K,
                                              std::size_t L) {
  detail::require_binary(s, "Sturmian extremal check");
  detail::require_binary(u, "Sturmian extremal check");
  if (L == 0) throw std::invalid_argument("depth L must be positive");
  BoundedVerdict v{"sturmian-extremal", VerdictStatus::Holds, K, L};
  auto material = s.prefix(K + L).vector();
  detail::ShiftBound lower{detail::cons(Letter(0), u, L), "0u", false};
  detail::ShiftBound upper{detail::cons(Letter(1), u, L), "1u", false};
  detail::check_shift_bounds(v, s.alphabet(), material, "s", K, L, lower, upper, LexOrder::natural(2));
  return v;
}

/// complement(u) <= T^k(u) <= u.
inline BoundedVerdict gamma_membership(const InfiniteWord& u, std::size_t K, std::size_t L) {
  detail::require_binary(u, "gamma membership");
  if (L == 0) throw std::invalid_argument("depth L must be positive");
  BoundedVerdict v{"gamma", VerdictStatus::Holds, K, L};
  auto material = u.prefix(K + L).vector();
  std::vector<Letter> top(material.begin(), material.begin() + static_cast<std::ptrdiff_t>(L));
  std::vector<Letter> bottom = top;
  for (auto& x : bottom) x = Letter(1 - x.index);
  detail::check_shift_bounds(v, u.alphabet(), material, "u", K, L, detail::ShiftBound{bottom, "ū", false},
                             detail::ShiftBound{top, "u", false}, LexOrder::natural(2));
  return v;
}

/// x <= T^i(s) <= y.
inline BoundedVerdict sigma_xy_member(const InfiniteWord& s, const InfiniteWord& x, const InfiniteWord& y,
                                      std::size_t K, std::size_t L) {
  detail::require_binary(s, "sigma membership");
  if (L == 0) throw std::invalid_argument("depth L must be positive");
  BoundedVerdict v{"sigma-xy", VerdictStatus::Holds, K, L};
  auto material = s.prefix(K + L).vector();
  detail::check_shift_bounds(v, s.alphabet(), material, "s", K, L, detail::ShiftBound{x.prefix(L).vector(), "x", false},
                             detail::ShiftBound{y.prefix(L).vector(), "y", false}, LexOrder::natural(2));
  return v;
}

/// r <= T^i(r) < s and r < T^i(s) <= s.
inline BoundedVerdict allowed_pair_check(const InfiniteWord& r, const InfiniteWord& s, std::size_t K, std::size_t L) {
  detail::require_binary(r, "allowed pair check");
  detail::require_binary(s, "allowed pair check");
  if (L == 0) throw std::invalid_argument("depth L must be positive");
  auto order = LexOrder::natural(2);
  if (lex_compare(r, s, order, L).is_equal()) {
    throw std::invalid_argument("allowed pair needs r != s, but they agree through depth " + std::to_string(L));
  }
  BoundedVerdict v{"allowed-pair", VerdictStatus::Holds, K, L};
  auto rm = r.prefix(K + L).vector();
  auto sm = s.prefix(K + L).vector();
  std::vector<Letter> rp(rm.begin(), rm.begin() + static_cast<std::ptrdiff_t>(L));
  std::vector<Letter> sp(sm.begin(), sm.begin() + static_cast<std::ptrdiff_t>(L));
  detail::check_shift_bounds(v, r.alphabet(), rm, "r", K, L, detail::ShiftBound{rp, "r", false},
                             detail::ShiftBound{sp, "s", true}, order);
  if (v.holds()) {
    detail::check_shift_bounds(v, s.alphabet(), sm, "s", K, L, detail::ShiftBound{rp, "r", true},
                               detail::ShiftBound{sp, "s", false}, order);
  }
  return v;
}

// Epistandard inequality a s <= min(s).

struct PairVerdict {
  AcceptablePair pair;
  BoundedVerdict verdict;
};

struct EpistandardIneqReport {
  std::vector<PairVerdict> pairs;
  std::size_t K = 0;
  std::size_t L = 0;

  bool holds() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairVerdict& p) { return p.verdict.holds(); });
  }

  /// Every comparison of every pair was decided strictly within the bounds.
  bool decided_strict() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairVerdict& p) { return p.verdict.all_decided_strict; });
  }
};

/// For every acceptable pair (a, <): a s <= T^k(s) for k <= K at depth L.
inline EpistandardIneqReport check_epistandard_ineq(const InfiniteWord& s, std::size_t K, std::size_t L) {
  if (L == 0) throw std::invalid_argument("depth L must be positive");
  const Alphabet& alphabet = s.alphabet();
  if (alphabet.size() > 8) throw std::invalid_argument("epistandard inequality limited to 8 letters");
  auto material = s.prefix(K + L).vector();
  EpistandardIneqReport report{{}, K, L};
  for (const auto& pair : acceptable_pairs(alphabet)) {
    BoundedVerdict v{"epistandard-ineq " + pair.order.str(alphabet), VerdictStatus::Holds, K, L};
    std::string a = alphabet.name(pair.letter);
    detail::check_shift_bounds(v, alphabet, material, "s", K, L,
                               detail::ShiftBound{detail::cons(pair.letter, s, L), a + "s", false}, std::nullopt,
                               pair.order);
    report.pairs.push_back({pair, std::move(v)});
  }
  return report;
}

struct Attainment {
  Letter letter;
  std::size_t L = 0;
  std::size_t searched = 0;
  /// Smallest k < searched with T^k(s) agreeing with a s through depth L.
  std::optional<std::size_t> shift;
  bool attained() const { return shift.has_value(); }
};

/// Evidence that min(s) = a s under every order with minimum a: the prefix
/// a s|L occurs in s. Absence within the search budget is only evidence.
inline Attainment min_attainment(const InfiniteWord& s, Letter a, std::size_t L, std::size_t searched) {
  if (L == 0) throw std::invalid_argument("depth L must be positive");
  std::string pattern = detail::key(detail::cons(a, s, L));
  std::string text = detail::key(s.prefix(searched + L - 1).letters());
  Attainment out{a, L, searched, std::nullopt};
  auto pos = text.find(pattern);
  if (pos != std::string::npos) out.shift = pos;
  return out;
}

// Fine words.

/// min(t) = a s with one s for every acceptable pair over the letters of t.
/// Compares min-words to depth K.
inline BoundedVerdict fine_test(const InfiniteWord& t, std::size_t K, MaterialPolicy policy = {}) {
  if (K < 2) throw std::invalid_argument("fine test needs depth K >= 2");
  Material m = material_for(t, K, policy);
  FiniteWord material = t.prefix(m.length);
  const Alphabet& alphabet = t.alphabet();
  auto present = letters_of(material.letters());
  if (present.size() > 8) throw std::invalid_argument("fine test limited to 8 letters");
  BoundedVerdict v{"fine", VerdictStatus::Holds, K, m.length};
  v.detail = m.exact ? "material certified complete" : "material from prefix budget";
  std::optional<FiniteWord> tail;
  std::string reference_order;
  std::size_t index = 0;
  for (const auto& pair : acceptable_pairs(alphabet.size(), present)) {
    FiniteWord mw = min_factor(material, K, pair.order);
    std::string order_name = pair.order.str(alphabet);
    if (mw[0] != pair.letter) {
      v.fail({index, 0, "min(t) starts with " + alphabet.name(pair.letter) + " under " + order_name, mw.str(), {}});
      return v;
    }
    FiniteWord rest = mw.slice(1, K - 1);
    if (!tail) {
      tail = rest;
      reference_order = order_name;
    } else if (!(rest == *tail)) {
      std::size_t j = 0;
      while (rest[j] == (*tail)[j]) ++j;
      v.fail({index, j + 1, "s from " + reference_order + ": " + tail->prefix(j + 1).str(),
              "s from " + order_name + ": " + rest.prefix(j + 1).str(), {}});
      return v;
    }
    ++index;
  }
  return v;
}

// Finite words.

struct FiniteEpisturmianResult {
  bool episturmian = false;
  /// A word u with a u|(|m|-1) <= m for every pair, when one exists.
  std::optional<FiniteWord> certificate;
};

/// Exists u such that a u|(|m|-1) <= m = min(w) for every acceptable pair
/// over Alph(w). Depth-first search over the letters of u; the state after
/// j letters is the set of pairs still tied with their bound, so failed
/// states are memoized on (j, tied set).
inline FiniteEpisturmianResult finite_episturmian_test(const FiniteWord& w) {
  const Alphabet& alphabet = w.alphabet();
  if (w.empty()) return {true, FiniteWord(alphabet)};
  auto present = letters_of(w.letters());
  if (present.size() > 4) throw std::invalid_argument("finite episturmian test limited to 4 letters");
  auto pairs = acceptable_pairs(alphabet.size(), present);

  struct Bound {
    const LexOrder* order;
    std::vector<Letter> tail;  // m without its first letter
  };
  std::vector<Bound> bounds;
  std::size_t length = 0;
  for (const auto& p : pairs) {
    FiniteWord m = min_finite(w, p.order);
    // m starts with the minimum letter, so only the tail constrains u.
    if (m[0] != p.letter) return {false, std::nullopt};
    bounds.push_back({&p.order, std::vector<Letter>(m.vector().begin() + 1, m.vector().end())});
    length = std::max(length, m.size() - 1);
  }

  using Mask = std::uint32_t;
  std::set<std::pair<std::size_t, Mask>> dead;
  std::vector<Letter> u;
  Mask all = pairs.size() >= 32 ? ~Mask{0} : ((Mask{1} << pairs.size()) - 1);

  std::function<bool(std::size_t, Mask)> search = [&](std::size_t j, Mask tied) -> bool {
    Mask live = 0;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if ((tied >> i & 1U) && j < bounds[i].tail.size()) live |= Mask{1} << i;
    }
    if (live == 0) return true;
    if (dead.count({j, live})) return false;
    for (Letter x : present) {
      Mask next = 0;
      bool ok = true;
      for (std::size_t i = 0; i < bounds.size() && ok; ++i) {
        if (!(live >> i & 1U)) continue;
        Letter y = bounds[i].tail[j];
        if (x == y) {
          next |= Mask{1} << i;
        } else if (bounds[i].order->less(y, x)) {
          ok = false;
        }
      }
      if (!ok) continue;
      u.push_back(x);
      if (search(j + 1, next)) return true;
      u.pop_back();
    }
    dead.insert({j, live});
    return false;
  };

  if (!search(0, all)) return {false, std::nullopt};
  while (u.size() < length) u.push_back(present.front());
  return {true, FiniteWord(alphabet, std::move(u))};
}

/// u with a u a a prefix of min(w) and b u b a prefix of max(w), shortest first.
inline std::optional<FiniteWord> not_balanced_witness(const FiniteWord& w) {
  detail::require_binary(w.alphabet(), "unbalance witness");
  if (w.empty()) return std::nullopt;
  FiniteWord lo = min_finite(w);
  FiniteWord hi = max_finite(w);
  const Letter a(0), b(1);
  if (lo[0] != a || hi[0] != b) return std::nullopt;
  for (std::size_t l = 0; l + 2 <= std::min(lo.size(), hi.size()); ++l) {
    if (l > 0 && lo[l] != hi[l]) break;
    if (lo[l + 1] == a && hi[l + 1] == b) return lo.slice(1, l);
  }
  return std::nullopt;
}

// Local balance.

/// Every factor u with |u| <= n_max has a letter a such that each factor
/// x u y has x = a or y = a. With palindromes_only, only palindromic u.
inline BoundedVerdict local_balance_check(const FiniteWord& prefix, std::size_t n_max, bool palindromes_only = false) {
  const Alphabet& alphabet = prefix.alphabet();
  BoundedVerdict v{palindromes_only ? "local-balance-palindromic" : "local-balance", VerdictStatus::Holds, n_max,
                   prefix.size()};
  auto letters = prefix.letters();
  for (std::size_t n = 0; n <= n_max && n + 2 <= letters.size(); ++n) {
    std::map<std::string, std::set<std::pair<std::uint8_t, std::uint8_t>>> ext;
    for (std::size_t i = 0; i + n + 2 <= letters.size(); ++i) {
      auto inner = letters.subspan(i + 1, n);
      if (palindromes_only && !is_palindrome(inner)) continue;
      ext[detail::key(inner)].insert({letters[i].index, letters[i + n + 1].index});
    }
    for (const auto& [k, pairs] : ext) {
      bool found = false;
      for (std::size_t a = 0; a < alphabet.size() && !found; ++a) {
        found = std::all_of(pairs.begin(), pairs.end(), [a](const auto& xy) { return xy.first == a || xy.second == a; });
      }
      if (!found) {
        FiniteWord u = detail::from_key(alphabet, k);
        std::string seen;
        for (const auto& [x, y] : pairs) {
          if (!seen.empty()) seen += ' ';
          seen += alphabet.name(Letter(x)) + u.str() + alphabet.name(Letter(y));
        }
        v.fail({n, n, "a letter a with AuA ⊆ auA ∪ Aua for u = " + u.str(), seen, {}});
        return v;
      }
    }
  }
  return v;
}

inline BoundedVerdict local_balance_check(const InfiniteWord& t, std::size_t n_max, std::size_t L,
                                          bool palindromes_only = false) {
  return local_balance_check(t.prefix(L), n_max, palindromes_only);
}

// Gan's map phi, approximated by bounded search.

struct PhiCandidate {
  InfiniteWord word;
  std::string family;
  std::size_t P = 0;
  std::size_t K = 0;
  std::size_t L = 0;
  std::string label() const {
    return "candidate at bounds (P=" + std::to_string(P) + ", K=" + std::to_string(K) + ", L=" + std::to_string(L) + ")";
  }
};

/// Slopes whose words 1 c_alpha are tried as Sturmian candidates.
inline std::vector<QuadraticSurd> default_phi_slopes() {
  return {QuadraticSurd(-1, 1, 5, 2), QuadraticSurd(3, -1, 5, 2), QuadraticSurd(-1, 1, 2, 1),
          QuadraticSurd(2, -1, 2, 1), QuadraticSurd(-1, 1, 3, 2), QuadraticSurd(-1, 1, 3, 1)};
}

inline UltimatelyPeriodicWord max_rotation(const FiniteWord& period) {
  FiniteWord best = period;
  for (std::size_t r = 1; r < period.size(); ++r) {
    FiniteWord rot = shift(period, r);
    if (best < rot) best = rot;
  }
  return {FiniteWord(period.alphabet()), best};
}

/// Least candidate s with x <= T^i(s) <= s among 1^omega, 1 c_alpha for the
/// given slopes, and the shift-maximal rotations of (Pal(v) x y)^omega, |v| <= P.
inline PhiCandidate gan_phi_approx(const InfiniteWord& x, std::size_t P, std::size_t K, std::size_t L,
                                   const std::vector<QuadraticSurd>& slopes = default_phi_slopes()) {
  detail::require_binary(x, "phi approximation");
  const Alphabet binary = x.alphabet();
  auto ones = InfiniteWord::from_periodic(
      UltimatelyPeriodicWord(FiniteWord(binary), FiniteWord(binary, {Letter(1)})), "1^ω");
  if (x.at(0) == Letter(1)) return {ones, "constant", P, K, L};

  std::vector<std::pair<InfiniteWord, std::string>> candidates;
  candidates.emplace_back(ones, "constant");
  for (const auto& alpha : slopes) {
    candidates.emplace_back(relabel(prepend(Letter(1), characteristic(alpha)), binary), "sturmian 1c_" + alpha.str());
  }
  std::set<std::string> seen;
  for (std::size_t len = 0; len <= P; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::vector<Letter> v;
      for (std::size_t i = 0; i < len; ++i) v.emplace_back(bits >> (len - 1 - i) & 1U);
      for (std::size_t flip = 0; flip < 2; ++flip) {
        auto w = periodic_balanced(FiniteWord(binary, v), Letter(flip), Letter(1 - flip));
        auto rot = max_rotation(w.period());
        if (seen.insert(rot.str()).second) {
          candidates.emplace_back(InfiniteWord::from_periodic(rot), "periodic balanced (" + rot.period().str() + ")^ω");
        }
      }
    }
  }

  std::optional<std::size_t> best;
  auto order = LexOrder::natural(2);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& s = candidates[i].first;
    if (!sigma_xy_member(s, x, s, K, L).holds()) continue;
    if (!best || lex_compare(s, candidates[*best].first, order, L).is_less()) best = i;
  }
  return {candidates[*best].first, candidates[*best].second, P, K, L};
}

}  // namespace sturmian
