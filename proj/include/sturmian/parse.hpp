#pragma once

// Command-line syntaxes for surds, morphisms and word sources.

#include "generators.hpp"
#include "io.hpp"
#include "morphism.hpp"
#include "surd.hpp"
#include "word.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian::parse {

namespace detail {

inline std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

/// Sum of terms "n", "n*sqrt(d)", "sqrt(d)" with signs.
inline QuadraticSurd parse_numerator(const std::string& s, const std::string& whole) {
  if (s.empty()) throw std::invalid_argument("empty number in '" + whole + "'");
  Integer p = 0;
  Integer q = 0;
  Integer d = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("malformed surd '" + whole + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    auto root = term.find("sqrt(");
    if (root == std::string::npos) {
      p += sign * parse_integer(term);
    } else {
      if (term.back() != ')') throw std::invalid_argument("malformed sqrt in '" + whole + "'");
      Integer coeff = 1;
      if (root > 0) {
        if (term[root - 1] != '*') throw std::invalid_argument("expected '*' before sqrt in '" + whole + "'");
        coeff = parse_integer(term.substr(0, root - 1));
      }
      Integer radicand = parse_integer(term.substr(root + 5, term.size() - root - 6));
      if (d != 0 && d != radicand) throw std::invalid_argument("mixed radicands in '" + whole + "'");
      d = radicand;
      q += sign * coeff;
    }
    i = j;
  }
  return {p, q, d, 1};
}

}  // namespace detail

/// "p/q", "p", "(p+q*sqrt(d))/r", "p-sqrt(d)".
inline QuadraticSurd surd(std::string_view text) {
  std::string s = detail::strip(text);
  std::string whole(text);
  if (s.find("sqrt") == std::string::npos) return QuadraticSurd(parse_rational(s));
  if (!s.empty() && s.front() == '(') {
    // Find the parenthesis closing the numerator.
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parentheses in '" + whole + "'");
    QuadraticSurd num = detail::parse_numerator(s.substr(1, close - 1), whole);
    std::string rest = s.substr(close + 1);
    if (rest.empty()) return num;
    if (rest[0] != '/') throw std::invalid_argument("expected '/' after ')' in '" + whole + "'");
    Integer r = parse_integer(rest.substr(1));
    if (r == 0) throw std::invalid_argument("zero denominator in '" + whole + "'");
    return num / QuadraticSurd(r);
  }
  return detail::parse_numerator(s, whole);
}

/// "a>ab,b>a" over the given alphabet.
inline Morphism morphism(const Alphabet& alphabet, std::string_view text) {
  std::vector<std::optional<FiniteWord>> images(alphabet.size());
  std::string s = detail::strip(text);
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string rule = s.substr(i, j - i);
    auto arrow = rule.find('>');
    if (arrow == std::string::npos) throw std::invalid_argument("morphism rule '" + rule + "' lacks '>'");
    Letter x = alphabet.letter(rule.substr(0, arrow));
    if (images[x.index]) throw std::invalid_argument("letter mapped twice in morphism '" + s + "'");
    images[x.index] = FiniteWord::parse(alphabet, rule.substr(arrow + 1));
    i = j + 1;
  }
  std::vector<FiniteWord> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    out.push_back(images[k] ? *images[k] : FiniteWord(alphabet, {Letter(k)}));
  }
  return Morphism(alphabet, std::move(out), s);
}

/// Morphism with the alphabet read off its left-hand sides, sorted.
inline Morphism morphism(std::string_view text) {
  std::vector<std::string> names;
  std::string s = detail::strip(text);
  for (char c : s) {
    if (c == ',' || c == '>') continue;
    std::string n(1, c);
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  std::sort(names.begin(), names.end());
  return morphism(Alphabet(std::move(names)), text);
}

/// Letter names of w's alphabet plus `extra`, sorted; w relabelled by name.
inline InfiniteWord embed(const InfiniteWord& w, const std::vector<std::string>& extra) {
  std::vector<std::string> names = w.alphabet().names();
  for (const auto& e : extra) {
    if (!w.alphabet().find(e) && std::find(names.begin(), names.end(), e) == names.end()) names.push_back(e);
  }
  if (names.size() == w.alphabet().size()) return w;
  std::sort(names.begin(), names.end());
  return relabel(w, Alphabet(std::move(names)));
}

inline FiniteWord finite_word(std::string_view text);

/// Word sources:
///   fib, fib-ab, trib, kbonacci:k, thue-morse, mech:alpha:rho, upper:alpha:rho,
///   char:alpha, epi:directive, periodic:u|v, cons:x:src, shift:k:src,
///   morph:rules:src, embed:letters:src, complement:src, file:path
inline InfiniteWord word_source(std::string_view text) {
  std::string s(text);
  auto head_tail = [&](std::string_view rest) {
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("word source '" + s + "' is incomplete");
    return std::pair{std::string(rest.substr(0, colon)), std::string(rest.substr(colon + 1))};
  };
  auto starts = [&](std::string_view prefix) { return s.rfind(prefix, 0) == 0; };

  if (s == "fib") return fibonacci01();
  if (s == "fib-ab") return fibonacci_word();
  if (s == "trib") return kbonacci(3);
  if (s == "thue-morse" || s == "tm") return thue_morse();
  if (starts("kbonacci:")) return kbonacci(static_cast<std::size_t>(parse_integer(s.substr(9))));
  if (starts("mech:") || starts("upper:")) {
    bool upper = starts("upper:");
    auto [a, r] = head_tail(std::string_view(s).substr(upper ? 6 : 5));
    QuadraticSurd alpha = surd(a);
    QuadraticSurd rho = r == "same" ? alpha : surd(r);
    return upper ? mechanical_upper(alpha, rho) : mechanical_lower(alpha, rho);
  }
  if (starts("char:")) return characteristic(surd(s.substr(5)));
  if (starts("epi:")) return epistandard(DirectiveWord::parse(s.substr(4)));
  if (starts("periodic:")) {
    std::string body = s.substr(9);
    auto bar = body.find('|');
    FiniteWord whole = FiniteWord::parse(body.substr(0, bar == std::string::npos ? 0 : bar) +
                                         body.substr(bar == std::string::npos ? 0 : bar + 1));
    const Alphabet& alphabet = whole.alphabet();
    if (bar == std::string::npos) {
      return InfiniteWord::from_periodic(UltimatelyPeriodicWord(FiniteWord(alphabet), FiniteWord::parse(alphabet, body)));
    }
    return InfiniteWord::from_periodic(UltimatelyPeriodicWord(FiniteWord::parse(alphabet, body.substr(0, bar)),
                                                              FiniteWord::parse(alphabet, body.substr(bar + 1))));
  }
  if (starts("cons:")) {
    auto [x, rest] = head_tail(std::string_view(s).substr(5));
    FiniteWord head = FiniteWord::parse(x);
    InfiniteWord w = embed(word_source(rest), head.alphabet().names());
    return prepend(FiniteWord::parse(w.alphabet(), x), w);
  }
  if (starts("shift:")) {
    auto [k, rest] = head_tail(std::string_view(s).substr(6));
    return shift(word_source(rest), static_cast<std::size_t>(parse_integer(k)));
  }
  if (starts("morph:")) {
    auto [rules, rest] = head_tail(std::string_view(s).substr(6));
    Morphism loose = morphism(rules);
    InfiniteWord w = embed(word_source(rest), loose.alphabet().names());
    return morphism(w.alphabet(), rules).apply(w);
  }
  if (starts("embed:")) {
    auto [letters, rest] = head_tail(std::string_view(s).substr(6));
    std::vector<std::string> extra;
    for (char c : letters) extra.emplace_back(1, c);
    return embed(word_source(rest), extra);
  }
  if (starts("complement:")) return complement(word_source(s.substr(11)));
  if (starts("file:")) {
    auto parsed = io::read_text(io::read_file(s.substr(5)));
    if (auto* p = std::get_if<UltimatelyPeriodicWord>(&parsed)) return InfiniteWord::from_periodic(*p);
    throw std::invalid_argument("word file '" + s.substr(5) + "' holds a finite word; use u|v for infinite words");
  }
  throw std::invalid_argument("unknown word source '" + s + "'");
}

/// Finite words: a literal body, lit:body, prefix:n:source, or file:path.
inline FiniteWord finite_word(std::string_view text) {
  std::string s(text);
  if (s.rfind("lit:", 0) == 0) return FiniteWord::parse(s.substr(4));
  if (s.rfind("prefix:", 0) == 0) {
    std::string rest = s.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("prefix source needs prefix:n:source");
    return word_source(rest.substr(colon + 1)).prefix(static_cast<std::size_t>(parse_integer(rest.substr(0, colon))));
  }
  if (s.rfind("file:", 0) == 0) {
    auto parsed = io::read_text(io::read_file(s.substr(5)));
    if (auto* w = std::get_if<FiniteWord>(&parsed)) return *w;
    throw std::invalid_argument("word file '" + s.substr(5) + "' holds an infinite word");
  }
  return FiniteWord::parse(s);
}

}  // namespace sturmian::parse
