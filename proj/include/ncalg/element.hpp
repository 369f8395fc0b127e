#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ncalg/scalar.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// Element of a free algebra: finitely supported map Word -> Scalar, zeros pruned.
class FreeElement {
 public:
  using Terms = std::map<Word, Scalar, ShortlexLess>;

  FreeElement() = default;

  static FreeElement scalar(const Scalar& c) { return monomial(Word{}, c); }
  static FreeElement one() { return scalar(Scalar(1)); }
  static FreeElement monomial(const Word& w, const Scalar& c = Scalar(1)) {
    FreeElement f;
    f.add_term(w, c);
    return f;
  }
  static FreeElement letter(Letter l) { return monomial(Word{l}); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Length of the longest word in the support; 0 for the zero element.
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.length(); }

  /// Value when the element is a multiple of the unit (zero included).
  std::optional<Scalar> scalar_value() const {
    if (terms_.empty()) return Scalar();
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
  }
  bool is_scalar() const { return scalar_value().has_value(); }

  /// Largest letter id in the support, if any letter occurs.
  std::optional<Letter> max_letter() const {
    std::optional<Letter> best;
    for (const auto& [w, c] : terms_)
      if (!w.empty() && (!best || w.max_letter() > *best)) best = w.max_letter();
    return best;
  }

  FreeElement& operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FreeElement& operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  FreeElement& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator-(FreeElement a) { return a *= Scalar(-1); }
  friend FreeElement operator*(FreeElement a, const Scalar& s) { return a *= s; }
  friend FreeElement operator*(const Scalar& s, FreeElement a) { return a *= s; }

  friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    FreeElement out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    return out;
  }

  /// Left and right multiplication by words, used heavily by reduction.
  FreeElement sandwich(const Word& left, const Word& right) const {
    FreeElement out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(left * w * right, c);
    return out;
  }

  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

 private:
  Terms terms_;
};

/// Conjugate-linear antimultiplicative extension of a letter involution.
inline FreeElement apply_involution(const FreeElement& f, std::span<const Letter> involution) {
  FreeElement out;
  for (const auto& [w, c] : f) {
    std::vector<Letter> letters;
    letters.reserve(w.length());
    for (std::size_t k = w.length(); k-- > 0;) {
      if (w[k] >= involution.size()) throw ConfigError("letter outside involution domain");
      letters.push_back(involution[w[k]]);
    }
    out.add_term(Word(std::move(letters)), c.conj());
  }
  return out;
}

/// Linear multiplicative extension of a letter-to-letter map.
inline FreeElement relabel(const FreeElement& f, std::span<const Letter> map) {
  FreeElement out;
  for (const auto& [w, c] : f) {
    std::vector<Letter> letters;
    letters.reserve(w.length());
    for (Letter l : w) {
      if (l >= map.size()) throw ConfigError("letter outside relabel domain");
      letters.push_back(map[l]);
    }
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

/// Homomorphism sending letter l to images[l].
inline FreeElement substitute(const FreeElement& f, std::span<const FreeElement> images) {
  FreeElement out;
  for (const auto& [w, c] : f) {
    FreeElement term = FreeElement::scalar(c);
    for (Letter l : w) {
      if (l >= images.size()) throw ConfigError("letter outside substitution domain");
      term = term * images[l];
    }
    out += term;
  }
  return out;
}

/// Leading word and coefficient under `order`.
inline std::pair<Word, Scalar> leading(const TermOrder& order, const FreeElement& f) {
  if (f.is_zero()) throw NoLeadingTerm();
  if (order.is_identity()) {
    const auto& last = *f.terms().rbegin();
    return {last.first, last.second};
  }
  auto best = f.begin();
  for (auto it = f.begin(); it != f.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

}  // namespace ncalg
