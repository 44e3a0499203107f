#pragma once

// Brute-force ground truth for the property tests.

#include "analysis.hpp"
#include "generators.hpp"
#include "word.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sturmian::oracle {

/// Every binary word of length n.
inline std::vector<FiniteWord> all_binary_words(std::size_t n) {
  if (n > 24) throw std::invalid_argument("too many words to enumerate");
  Alphabet binary = Alphabet::binary();
  std::vector<FiniteWord> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    std::vector<Letter> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(bits >> (n - 1 - i) & 1U);
    out.emplace_back(binary, std::move(v));
  }
  return out;
}

/// Pairwise test of every two equal-length factors.
inline bool balanced_by_definition(const FiniteWord& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      for (std::size_t j = i + 1; j + len <= n; ++j) {
        long ci = 0;
        long cj = 0;
        for (std::size_t t = 0; t < len; ++t) {
          ci += w[i + t].index;
          cj += w[j + t].index;
        }
        if (ci - cj > 1 || cj - ci > 1) return false;
      }
    }
  }
  return true;
}

/// Balanced binary words of length n, tested one by one against the definition.
inline std::vector<FiniteWord> enumerate_balanced(std::size_t n) {
  if (n > 16) throw std::invalid_argument("enumeration limited to n <= 16");
  std::vector<FiniteWord> out;
  for (auto& w : all_binary_words(n)) {
    if (balanced_by_definition(w)) out.push_back(std::move(w));
  }
  return out;
}

/// Same set through the block condition instead of factor counts.
inline std::vector<FiniteWord> enumerate_by_block_condition(std::size_t n) {
  if (n > 16) throw std::invalid_argument("enumeration limited to n <= 16");
  std::vector<FiniteWord> out;
  for (auto& w : all_binary_words(n)) {
    if (block_condition(w)) out.push_back(std::move(w));
  }
  return out;
}

struct CorpusWord {
  FiniteWord word;
  std::string source;
};

/// Union of factor sets of explicit epistandard and morphic words.
/// A subset of the finite episturmian words, never the whole set.
struct Corpus {
  std::size_t n_max = 0;
  std::size_t prefix_length = 0;
  std::vector<std::string> roster;
  std::map<std::string, CorpusWord> words;  // keyed by display string

  bool contains(const std::string& w) const { return words.count(w) != 0; }
  std::size_t size() const { return words.size(); }

  std::size_t count(std::size_t length) const {
    return static_cast<std::size_t>(std::count_if(words.begin(), words.end(), [length](const auto& kv) {
      return kv.second.word.size() == length;
    }));
  }

  /// Header with parameters and counts, then one word per line, sorted.
  std::string dump() const {
    std::ostringstream out;
    out << "# subset of finite episturmian words\n";
    out << "# roster:";
    for (const auto& r : roster) out << ' ' << r;
    out << "\n# n_max: " << n_max << "\n# prefix: " << prefix_length << "\n# count: " << words.size() << '\n';
    for (std::size_t n = 1; n <= n_max; ++n) out << "# length " << n << ": " << count(n) << '\n';
    for (const auto& [k, w] : words) out << k << '\n';
    return out.str();
  }
};

inline std::vector<std::pair<std::string, InfiniteWord>> default_roster() {
  return {
      {"fib", kbonacci(2)},
      {"trib", kbonacci(3)},
      {"kbonacci:4", kbonacci(4)},
      {"epi:aab*", epistandard(DirectiveWord::parse("aab*"))},
      {"epi:abb*", epistandard(DirectiveWord::parse("abb*"))},
      {"epi:aabc*", epistandard(DirectiveWord::parse("aabc*"))},
      {"epi:c|ab", epistandard(DirectiveWord::parse("c|ab"))},
  };
}

inline Corpus episturmian_factor_corpus(const std::vector<std::pair<std::string, InfiniteWord>>& roster,
                                        std::size_t n_max, std::size_t prefix_length = 4096) {
  Corpus c{n_max, prefix_length, {}, {}};
  for (const auto& [name, w] : roster) {
    c.roster.push_back(name);
    FiniteWord material = w.prefix(prefix_length);
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (auto& f : factors(material, n)) {
        std::string key = f.str();
        c.words.emplace(key, CorpusWord{std::move(f), name});
      }
    }
  }
  return c;
}

/// Extremal length-k factors by sorting the complete factor list.
inline std::pair<FiniteWord, FiniteWord> naive_min_max(const FiniteWord& material, std::size_t k, const LexOrder& order) {
  if (k == 0 || k > material.size()) throw std::invalid_argument("no factors of the requested length");
  std::vector<std::vector<Letter>> all;
  for (std::size_t i = 0; i + k <= material.size(); ++i) {
    all.emplace_back(material.vector().begin() + static_cast<std::ptrdiff_t>(i),
                     material.vector().begin() + static_cast<std::ptrdiff_t>(i + k));
  }
  std::sort(all.begin(), all.end(), [&order](const std::vector<Letter>& x, const std::vector<Letter>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [&order](Letter a, Letter b) { return order.less(a, b); });
  });
  return {FiniteWord(material.alphabet(), all.front()), FiniteWord(material.alphabet(), all.back())};
}

}  // namespace sturmian::oracle
