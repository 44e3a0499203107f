#pragma once

// Morphisms of the free monoid and the episturmian generators.

#include "word.hpp"

#include <string>
#include <vector>

namespace sturmian {

class Morphism {
 public:
  Morphism(Alphabet alphabet, std::vector<FiniteWord> images, std::string name = {})
      : alphabet_(std::move(alphabet)), images_(std::move(images)), name_(std::move(name)) {
    if (images_.size() != alphabet_.size()) throw std::invalid_argument("morphism needs one image per letter");
    for (const auto& img : images_) {
      if (!(img.alphabet() == alphabet_)) throw std::invalid_argument("morphism image over a different alphabet");
    }
  }

  static Morphism identity(const Alphabet& alphabet) {
    std::vector<FiniteWord> images;
    for (std::size_t i = 0; i < alphabet.size(); ++i) images.emplace_back(alphabet, std::vector<Letter>{Letter(i)});
    return Morphism(alphabet, std::move(images), "id");
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const FiniteWord& image(Letter x) const { return images_.at(x.index); }
  const std::string& name() const { return name_; }

  bool erasing() const {
    return std::any_of(images_.begin(), images_.end(), [](const FiniteWord& w) { return w.empty(); });
  }

  FiniteWord apply(const FiniteWord& w) const {
    check_alphabet(w.alphabet());
    std::vector<Letter> out;
    for (Letter x : w.letters()) {
      const auto& img = images_[x.index];
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    }
    return FiniteWord(alphabet_, std::move(out));
  }

  InfiniteWord apply(const InfiniteWord& w) const {
    check_alphabet(w.alphabet());
    if (erasing()) throw std::invalid_argument("erasing morphism applied to an infinite word");
    Recipe recipe;
    recipe.kind = RecipeKind::MorphicImage;
    recipe.description = (name_.empty() ? str() : name_) + "(" + w.recipe().description + ")";
    if (const auto& p = w.periodic_form()) recipe.periodic = UltimatelyPeriodicWord(apply(p->preperiod()), apply(p->period()));
    Morphism self = *this;
    return InfiniteWord(alphabet_, std::move(recipe), [self, w](std::size_t n) {
      // Each letter has a non-empty image, so n source letters suffice.
      std::vector<Letter> out;
      std::size_t i = 0;
      while (out.size() < n) {
        const auto& img = self.images_[w.at(i++).index];
        out.insert(out.end(), img.letters().begin(), img.letters().end());
      }
      out.resize(n);
      return out;
    });
  }

  /// m1 ∘ m2: apply(compose(m1, m2), w) == m1.apply(m2.apply(w)).
  friend Morphism compose(const Morphism& m1, const Morphism& m2) {
    m1.check_alphabet(m2.alphabet());
    std::vector<FiniteWord> images;
    for (const auto& img : m2.images_) images.push_back(m1.apply(img));
    std::string name = m1.name_.empty() || m2.name_.empty() ? std::string{} : m1.name_ + "∘" + m2.name_;
    return Morphism(m1.alphabet_, std::move(images), std::move(name));
  }

  /// "a>ab,b>a".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) out += ',';
      out += alphabet_.name(Letter(i)) + ">" + images_[i].str();
    }
    return out;
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  void check_alphabet(const Alphabet& other) const {
    if (!(other == alphabet_)) throw std::invalid_argument("morphism applied over a different alphabet");
  }

  Alphabet alphabet_;
  std::vector<FiniteWord> images_;
  std::string name_;
};

/// psi_a: a -> a, x -> ax.
inline Morphism psi(const Alphabet& alphabet, Letter a) {
  std::vector<FiniteWord> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    Letter x(i);
    images.emplace_back(alphabet, x == a ? std::vector<Letter>{a} : std::vector<Letter>{a, x});
  }
  return Morphism(alphabet, std::move(images), "psi_" + alphabet.name(a));
}

/// psi-bar_a: a -> a, x -> xa.
inline Morphism psi_bar(const Alphabet& alphabet, Letter a) {
  std::vector<FiniteWord> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    Letter x(i);
    images.emplace_back(alphabet, x == a ? std::vector<Letter>{a} : std::vector<Letter>{x, a});
  }
  return Morphism(alphabet, std::move(images), "psibar_" + alphabet.name(a));
}

/// theta_ab: exchanges a and b, fixes everything else.
inline Morphism theta(const Alphabet& alphabet, Letter a, Letter b) {
  std::vector<FiniteWord> images;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    Letter x(i);
    Letter y = x == a ? b : x == b ? a : x;
    images.emplace_back(alphabet, std::vector<Letter>{y});
  }
  return Morphism(alphabet, std::move(images), "theta_" + alphabet.name(a) + alphabet.name(b));
}

/// E: the letter exchange on a binary alphabet.
inline Morphism exchange(const Alphabet& alphabet) {
  if (alphabet.size() != 2) throw std::invalid_argument("E requires a binary alphabet");
  Morphism m = theta(alphabet, Letter(0), Letter(1));
  return Morphism(alphabet, {m.image(Letter(0)), m.image(Letter(1))}, "E");
}

/// phi: a -> ab, b -> a.
inline Morphism fibonacci_morphism(const Alphabet& alphabet) {
  if (alphabet.size() != 2) throw std::invalid_argument("phi requires a binary alphabet");
  Letter a(0), b(1);
  return Morphism(alphabet, {FiniteWord(alphabet, {a, b}), FiniteWord(alphabet, {a})}, "phi");
}

/// phi~: a -> ba, b -> a.
inline Morphism fibonacci_morphism_tilde(const Alphabet& alphabet) {
  if (alphabet.size() != 2) throw std::invalid_argument("phi~ requires a binary alphabet");
  Letter a(0), b(1);
  return Morphism(alphabet, {FiniteWord(alphabet, {b, a}), FiniteWord(alphabet, {a})}, "phitilde");
}

}  // namespace sturmian
