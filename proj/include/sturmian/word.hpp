#pragma once

// Finite and infinite words over small ordered alphabets.
//
// Letters are canonical indices 0..size-1; an Alphabet only carries display
// names. Infinite words are lazy: a pure prefix function plus a memo cache.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sturmian {

struct Letter {
  std::uint8_t index = 0;

  constexpr Letter() = default;
  constexpr explicit Letter(std::size_t i) : index(static_cast<std::uint8_t>(i)) {}

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 256;

  /// Binary alphabet {0, 1}.
  Alphabet() : Alphabet(std::vector<std::string>{"0", "1"}) {}

  explicit Alphabet(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    const auto& n = *names_;
    if (n.empty()) throw std::invalid_argument("alphabet must contain at least one letter");
    if (n.size() > kMaxSize) throw std::invalid_argument("alphabet too large");
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i].empty()) throw std::invalid_argument("empty letter name");
      for (std::size_t j = 0; j < i; ++j) {
        if (n[i] == n[j]) throw std::invalid_argument("duplicate letter name '" + n[i] + "'");
      }
    }
  }

  static Alphabet binary() { return Alphabet(); }

  /// {a, b, c, ...} with `size` letters.
  static Alphabet latin(std::size_t size) {
    if (size == 0 || size > 26) throw std::invalid_argument("latin alphabet size must be in 1..26");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(names));
  }

  /// {0, 1, ..., size-1}; used for base-b digit words.
  static Alphabet digits(std::size_t size) {
    if (size == 0 || size > 36) throw std::invalid_argument("digit alphabet size must be in 1..36");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i) {
      names.emplace_back(1, static_cast<char>(i < 10 ? '0' + i : 'a' + (i - 10)));
    }
    return Alphabet(std::move(names));
  }

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }

  const std::string& name(Letter x) const {
    if (x.index >= size()) throw std::out_of_range("letter outside alphabet");
    return (*names_)[x.index];
  }

  bool contains(Letter x) const { return x.index < size(); }

  bool single_char_names() const {
    return std::all_of(names_->begin(), names_->end(), [](const std::string& s) { return s.size() == 1; });
  }

  /// Binary alphabets named 0/1 also accept a/b and vice versa.
  std::optional<Letter> find(std::string_view name) const {
    const auto& n = *names_;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == name) return Letter(i);
    }
    if (n.size() == 2) {
      bool digits01 = n[0] == "0" && n[1] == "1";
      bool latin_ab = n[0] == "a" && n[1] == "b";
      if (digits01 && (name == "a" || name == "b")) return Letter(name == "a" ? 0 : 1);
      if (latin_ab && (name == "0" || name == "1")) return Letter(name == "0" ? 0 : 1);
    }
    return std::nullopt;
  }

  Letter letter(std::string_view name) const {
    if (auto x = find(name)) return *x;
    throw std::invalid_argument("letter '" + std::string(name) + "' not in alphabet");
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class FiniteWord {
 public:
  FiniteWord() = default;

  explicit FiniteWord(Alphabet alphabet, std::vector<Letter> letters = {})
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (Letter x : letters_) {
      if (!alphabet_.contains(x)) throw std::invalid_argument("letter outside alphabet");
    }
  }

  /// Parses a word body: concatenated names when every name is one
  /// character, otherwise whitespace-separated names.
  static FiniteWord parse(const Alphabet& alphabet, std::string_view body) {
    std::vector<Letter> letters;
    if (alphabet.single_char_names()) {
      for (char c : body) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        letters.push_back(alphabet.letter(std::string_view(&c, 1)));
      }
    } else {
      std::size_t i = 0;
      while (i < body.size()) {
        while (i < body.size() && (body[i] == ' ' || body[i] == ',')) ++i;
        std::size_t j = i;
        while (j < body.size() && body[j] != ' ' && body[j] != ',') ++j;
        if (j > i) letters.push_back(alphabet.letter(body.substr(i, j - i)));
        i = j;
      }
    }
    return FiniteWord(alphabet, std::move(letters));
  }

  /// Parses with an alphabet inferred from the distinct characters, sorted.
  /// A word over {0,1} or {a,b} (or a subset) gets the binary alphabet.
  static FiniteWord parse(std::string_view body) {
    std::vector<std::string> names;
    for (char c : body) {
      if (c == ' ') continue;
      std::string s(1, c);
      if (std::find(names.begin(), names.end(), s) == names.end()) names.push_back(s);
    }
    std::sort(names.begin(), names.end());
    auto subset_of = [&](std::initializer_list<const char*> allowed) {
      return std::all_of(names.begin(), names.end(), [&](const std::string& s) {
        return std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return s == a; });
      });
    };
    if (subset_of({"0", "1"})) return parse(Alphabet(std::vector<std::string>{"0", "1"}), body);
    if (subset_of({"a", "b"})) return parse(Alphabet(std::vector<std::string>{"a", "b"}), body);
    return parse(Alphabet(std::move(names)), body);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter at(std::size_t i) const { return letters_.at(i); }
  std::span<const Letter> letters() const { return letters_; }
  const std::vector<Letter>& vector() const { return letters_; }

  FiniteWord prefix(std::size_t n) const {
    if (n > size()) throw std::out_of_range("prefix longer than word");
    return slice(0, n);
  }

  FiniteWord slice(std::size_t pos, std::size_t n) const {
    if (pos > size() || n > size() - pos) throw std::out_of_range("slice outside word");
    return FiniteWord(alphabet_, std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + n));
  }

  bool has_prefix(const FiniteWord& p) const {
    return p.size() <= size() && std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
  }

  void push_back(Letter x) {
    if (!alphabet_.contains(x)) throw std::invalid_argument("letter outside alphabet");
    letters_.push_back(x);
  }

  FiniteWord& operator+=(const FiniteWord& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  friend FiniteWord operator+(FiniteWord a, const FiniteWord& b) { return a += b; }

  std::size_t count(Letter x) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
  }

  std::string str() const {
    std::string out;
    bool compact = alphabet_.single_char_names();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (!compact && i != 0) out += ' ';
      out += alphabet_.name(letters_[i]);
    }
    return out;
  }

  friend bool operator==(const FiniteWord& a, const FiniteWord& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const FiniteWord& a, const FiniteWord& b) { return a.letters_ <=> b.letters_; }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Total order on an alphabet, stored as a rank per letter.
class LexOrder {
 public:
  /// Natural order 0 < 1 < ... < size-1.
  static LexOrder natural(std::size_t size) {
    std::vector<std::uint8_t> ranks(size);
    std::iota(ranks.begin(), ranks.end(), std::uint8_t{0});
    return LexOrder(std::move(ranks));
  }

  /// Order listing letters from smallest to largest.
  static LexOrder from_sequence(std::span<const Letter> smallest_first) {
    std::vector<std::uint8_t> ranks(smallest_first.size(), 0);
    std::vector<bool> seen(smallest_first.size(), false);
    for (std::size_t r = 0; r < smallest_first.size(); ++r) {
      auto i = smallest_first[r].index;
      if (i >= ranks.size() || seen[i]) throw std::invalid_argument("order is not a permutation of the alphabet");
      seen[i] = true;
      ranks[i] = static_cast<std::uint8_t>(r);
    }
    return LexOrder(std::move(ranks));
  }

  /// Parses "b<a<c" against an alphabet.
  static LexOrder parse(const Alphabet& alphabet, std::string_view spec) {
    std::vector<Letter> seq;
    std::size_t i = 0;
    while (i <= spec.size()) {
      std::size_t j = spec.find('<', i);
      if (j == std::string_view::npos) j = spec.size();
      seq.push_back(alphabet.letter(spec.substr(i, j - i)));
      i = j + 1;
    }
    if (seq.size() != alphabet.size()) throw std::invalid_argument("order must list every letter exactly once");
    return from_sequence(seq);
  }

  std::size_t size() const { return ranks_.size(); }
  std::size_t rank(Letter x) const { return ranks_.at(x.index); }
  bool less(Letter x, Letter y) const { return ranks_[x.index] < ranks_[y.index]; }

  Letter at_rank(std::size_t r) const {
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      if (ranks_[i] == r) return Letter(i);
    }
    throw std::out_of_range("rank outside order");
  }

  Letter min_letter() const { return at_rank(0); }
  Letter max_letter() const { return at_rank(size() - 1); }

  std::string str(const Alphabet& alphabet) const {
    std::string out;
    for (std::size_t r = 0; r < size(); ++r) {
      if (r) out += '<';
      out += alphabet.name(at_rank(r));
    }
    return out;
  }

  friend bool operator==(const LexOrder&, const LexOrder&) = default;

 private:
  explicit LexOrder(std::vector<std::uint8_t> ranks) : ranks_(std::move(ranks)) {}
  std::vector<std::uint8_t> ranks_;
};

/// Result of a depth-bounded lexicographic comparison. `depth` is the index
/// of the first difference for Less/Greater, or the compared depth otherwise.
struct ComparisonOutcome {
  enum class Kind { Less, Greater, EqualThroughDepth };
  Kind kind = Kind::EqualThroughDepth;
  std::size_t depth = 0;

  bool is_less() const { return kind == Kind::Less; }
  bool is_greater() const { return kind == Kind::Greater; }
  bool is_equal() const { return kind == Kind::EqualThroughDepth; }

  friend bool operator==(const ComparisonOutcome&, const ComparisonOutcome&) = default;
};

inline ComparisonOutcome lex_compare(std::span<const Letter> u, std::span<const Letter> v, const LexOrder& order,
                                     std::size_t depth) {
  if (u.size() < depth || v.size() < depth) throw std::invalid_argument("lex_compare: words shorter than depth");
  for (std::size_t i = 0; i < depth; ++i) {
    if (u[i] == v[i]) continue;
    return {order.less(u[i], v[i]) ? ComparisonOutcome::Kind::Less : ComparisonOutcome::Kind::Greater, i};
  }
  return {ComparisonOutcome::Kind::EqualThroughDepth, depth};
}

inline ComparisonOutcome lex_compare(const FiniteWord& u, const FiniteWord& v, const LexOrder& order,
                                     std::size_t depth) {
  return lex_compare(u.letters(), v.letters(), order, depth);
}

/// u v^omega with v non-empty, kept in canonical form: v primitive and
/// u as short as possible.
class UltimatelyPeriodicWord {
 public:
  UltimatelyPeriodicWord(FiniteWord preperiod, FiniteWord period)
      : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("period must be non-empty");
    if (!(preperiod_.alphabet() == period_.alphabet()) && !preperiod_.empty()) {
      throw std::invalid_argument("preperiod and period over different alphabets");
    }
    canonicalize();
  }

  const FiniteWord& preperiod() const { return preperiod_; }
  const FiniteWord& period() const { return period_; }
  const Alphabet& alphabet() const { return period_.alphabet(); }
  bool purely_periodic() const { return preperiod_.empty(); }

  Letter at(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  FiniteWord prefix(std::size_t n) const {
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
    return FiniteWord(alphabet(), std::move(out));
  }

  UltimatelyPeriodicWord shifted(std::size_t k) const {
    if (k <= preperiod_.size()) {
      return {preperiod_.slice(k, preperiod_.size() - k), period_};
    }
    std::size_t r = (k - preperiod_.size()) % period_.size();
    std::vector<Letter> rotated;
    for (std::size_t i = 0; i < period_.size(); ++i) rotated.push_back(period_[(r + i) % period_.size()]);
    return {FiniteWord(alphabet()), FiniteWord(alphabet(), std::move(rotated))};
  }

  /// Text form "u|v".
  std::string str() const { return preperiod_.str() + "|" + period_.str(); }

  friend bool operator==(const UltimatelyPeriodicWord& a, const UltimatelyPeriodicWord& b) {
    return a.preperiod_ == b.preperiod_ && a.period_ == b.period_;
  }

 private:
  void canonicalize() {
    if (preperiod_.empty()) preperiod_ = FiniteWord(period_.alphabet());
    // Primitive root of the period.
    const std::size_t n = period_.size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p != 0) continue;
      bool ok = true;
      for (std::size_t i = p; i < n && ok; ++i) ok = period_[i] == period_[i - p];
      if (ok) {
        period_ = period_.prefix(p);
        break;
      }
    }
    // Absorb trailing preperiod letters into a rotated period.
    std::vector<Letter> u = preperiod_.vector();
    std::vector<Letter> v = period_.vector();
    while (!u.empty() && u.back() == v.back()) {
      u.pop_back();
      std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    }
    preperiod_ = FiniteWord(period_.alphabet(), std::move(u));
    period_ = FiniteWord(period_.alphabet(), std::move(v));
  }

  FiniteWord preperiod_;
  FiniteWord period_;
};

enum class RecipeKind { Mechanical, Epistandard, MorphicImage, UltimatelyPeriodic, ThueMorse, Derived, Custom };

inline std::string_view to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::Mechanical: return "mechanical";
    case RecipeKind::Epistandard: return "epistandard";
    case RecipeKind::MorphicImage: return "morphic-image";
    case RecipeKind::UltimatelyPeriodic: return "ultimately-periodic";
    case RecipeKind::ThueMorse: return "thue-morse";
    case RecipeKind::Derived: return "derived";
    case RecipeKind::Custom: return "custom";
  }
  return "unknown";
}

/// How an infinite word was built, plus what that construction certifies.
struct Recipe {
  RecipeKind kind = RecipeKind::Custom;
  std::string description;
  /// Known eventually periodic form, if the construction guarantees one.
  std::optional<UltimatelyPeriodicWord> periodic;
  /// For uniformly recurrent constructions with a known recurrence function:
  /// every window of this length contains every factor of length k.
  std::function<std::size_t(std::size_t)> recurrence_window;
};

class InfiniteWord {
 public:
  using PrefixFn = std::function<std::vector<Letter>(std::size_t)>;

  /// Hard cap on evaluated prefix length; guards against runaway requests.
  /// Overridden by the STURMIAN_PREFIX_CAP environment variable.
  static constexpr std::size_t kDefaultPrefixCap = std::size_t{1} << 26;

  static std::size_t prefix_cap() {
    static const std::size_t cap = [] {
      if (const char* env = std::getenv("STURMIAN_PREFIX_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
      }
      return kDefaultPrefixCap;
    }();
    return cap;
  }

  InfiniteWord(Alphabet alphabet, Recipe recipe, PrefixFn fn)
      : alphabet_(std::move(alphabet)),
        recipe_(std::make_shared<const Recipe>(std::move(recipe))),
        state_(std::make_shared<State>()) {
    state_->fn = std::move(fn);
  }

  static InfiniteWord from_periodic(const UltimatelyPeriodicWord& w, std::string description = {}) {
    Recipe recipe;
    recipe.kind = RecipeKind::UltimatelyPeriodic;
    recipe.description = description.empty() ? w.str() : std::move(description);
    recipe.periodic = w;
    return InfiniteWord(w.alphabet(), std::move(recipe), [w](std::size_t n) { return w.prefix(n).vector(); });
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const Recipe& recipe() const { return *recipe_; }
  const std::optional<UltimatelyPeriodicWord>& periodic_form() const { return recipe_->periodic; }

  /// Smallest prefix length whose length-k factors are exactly F_k of the
  /// whole word, when the construction certifies one.
  std::optional<std::size_t> exact_prefix_length(std::size_t k) const {
    if (const auto& p = recipe_->periodic) return p->preperiod().size() + p->period().size() + k - 1;
    if (recipe_->recurrence_window) return recipe_->recurrence_window(k);
    return std::nullopt;
  }

  FiniteWord prefix(std::size_t n) const {
    std::lock_guard lock(state_->mutex);
    ensure(n);
    return FiniteWord(alphabet_, std::vector<Letter>(state_->cache.begin(), state_->cache.begin() + n));
  }

  Letter at(std::size_t i) const {
    std::lock_guard lock(state_->mutex);
    ensure(i + 1);
    return state_->cache[i];
  }

  std::string str(std::size_t n) const { return prefix(n).str() + "..."; }

 private:
  struct State {
    std::mutex mutex;
    std::vector<Letter> cache;
    PrefixFn fn;
  };

  void ensure(std::size_t n) const {
    auto& cache = state_->cache;
    if (cache.size() >= n) return;
    const std::size_t cap = prefix_cap();
    if (n > cap) throw std::length_error("prefix request of " + std::to_string(n) + " exceeds evaluation cap");
    std::size_t target = std::max(n, std::min(2 * cache.size(), cap));
    std::vector<Letter> fresh = state_->fn(target);
    if (fresh.size() < target) throw std::logic_error("prefix generator returned too few letters");
    for (Letter x : fresh) {
      if (!alphabet_.contains(x)) throw std::logic_error("prefix generator produced a letter outside the alphabet");
    }
    cache = std::move(fresh);
  }

  Alphabet alphabet_;
  std::shared_ptr<const Recipe> recipe_;
  std::shared_ptr<State> state_;
};

inline ComparisonOutcome lex_compare(const InfiniteWord& u, const InfiniteWord& v, const LexOrder& order,
                                     std::size_t depth) {
  return lex_compare(u.prefix(depth).letters(), v.prefix(depth).letters(), order, depth);
}

inline ComparisonOutcome lex_compare(const FiniteWord& u, const InfiniteWord& v, const LexOrder& order,
                                     std::size_t depth) {
  return lex_compare(u.letters(), v.prefix(depth).letters(), order, depth);
}

inline ComparisonOutcome lex_compare(const InfiniteWord& u, const FiniteWord& v, const LexOrder& order,
                                     std::size_t depth) {
  return lex_compare(u.prefix(depth).letters(), v.letters(), order, depth);
}

// Derived infinite words.

/// T^k(w).
inline InfiniteWord shift(const InfiniteWord& w, std::size_t k) {
  if (k == 0) return w;
  Recipe recipe;
  recipe.kind = RecipeKind::Derived;
  recipe.description = "T^" + std::to_string(k) + "(" + w.recipe().description + ")";
  if (const auto& p = w.periodic_form()) {
    recipe.periodic = p->shifted(k);
  } else {
    // Shifts of a uniformly recurrent word keep its factor set.
    recipe.recurrence_window = w.recipe().recurrence_window;
  }
  return InfiniteWord(w.alphabet(), std::move(recipe), [w, k](std::size_t n) {
    auto p = w.prefix(n + k).vector();
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    return p;
  });
}

/// x·w, a finite word followed by an infinite one.
inline InfiniteWord prepend(const FiniteWord& x, const InfiniteWord& w) {
  if (!(x.alphabet().size() == w.alphabet().size())) throw std::invalid_argument("prepend: alphabet mismatch");
  Recipe recipe;
  recipe.kind = RecipeKind::Derived;
  recipe.description = x.str() + "·(" + w.recipe().description + ")";
  if (const auto& p = w.periodic_form()) recipe.periodic = UltimatelyPeriodicWord(x + p->preperiod(), p->period());
  return InfiniteWord(w.alphabet(), std::move(recipe), [x, w](std::size_t n) {
    std::vector<Letter> out = x.vector();
    if (out.size() >= n) {
      out.resize(n);
      return out;
    }
    auto tail = w.prefix(n - out.size()).vector();
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  });
}

inline InfiniteWord prepend(Letter x, const InfiniteWord& w) {
  return prepend(FiniteWord(w.alphabet(), {x}), w);
}

/// Same letters re-read over another alphabet, matched by index
/// (e.g. {a,b} -> {0,1}) or embedded into a larger alphabet by name.
inline InfiniteWord relabel(const InfiniteWord& w, const Alphabet& target) {
  std::vector<Letter> map(w.alphabet().size());
  bool by_index = target.size() == w.alphabet().size();
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (by_index) {
      map[i] = Letter(i);
    } else {
      map[i] = target.letter(w.alphabet().name(Letter(i)));
    }
  }
  Recipe recipe;
  recipe.kind = RecipeKind::Derived;
  recipe.description = w.recipe().description;
  recipe.recurrence_window = w.recipe().recurrence_window;
  auto remap = [map](std::vector<Letter> v) {
    for (auto& x : v) x = map[x.index];
    return v;
  };
  if (const auto& p = w.periodic_form()) {
    recipe.periodic = UltimatelyPeriodicWord(FiniteWord(target, remap(p->preperiod().vector())),
                                             FiniteWord(target, remap(p->period().vector())));
  }
  return InfiniteWord(target, std::move(recipe), [w, remap](std::size_t n) { return remap(w.prefix(n).vector()); });
}

/// Exchange of the two letters of a binary word.
inline InfiniteWord complement(const InfiniteWord& w) {
  if (w.alphabet().size() != 2) throw std::invalid_argument("complement requires a binary alphabet");
  Recipe recipe;
  recipe.kind = RecipeKind::Derived;
  recipe.description = "complement(" + w.recipe().description + ")";
  recipe.recurrence_window = w.recipe().recurrence_window;
  auto flip = [](std::vector<Letter> v) {
    for (auto& x : v) x = Letter(1 - x.index);
    return v;
  };
  if (const auto& p = w.periodic_form()) {
    recipe.periodic = UltimatelyPeriodicWord(FiniteWord(w.alphabet(), flip(p->preperiod().vector())),
                                             FiniteWord(w.alphabet(), flip(p->period().vector())));
  }
  return InfiniteWord(w.alphabet(), std::move(recipe), [w, flip](std::size_t n) { return flip(w.prefix(n).vector()); });
}

/// Word given letter by letter, e.g. pseudorandom test material.
inline InfiniteWord from_function(Alphabet alphabet, std::string description, std::function<Letter(std::size_t)> f) {
  Recipe recipe;
  recipe.kind = RecipeKind::Custom;
  recipe.description = std::move(description);
  return InfiniteWord(std::move(alphabet), std::move(recipe), [f = std::move(f)](std::size_t n) {
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
    return out;
  });
}

}  // namespace sturmian
