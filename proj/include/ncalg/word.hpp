#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ncalg/errors.hpp"

namespace ncalg {

/// Index of a letter in a presentation's letter table.
using Letter = std::uint32_t;

/// A monomial of the free algebra: a finite letter sequence. The empty word is the unit.
class Word {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix_from(std::size_t pos) const { return subword(pos, length() - pos); }

  /// First position >= from where `needle` occurs, or npos.
  std::size_t find(const Word& needle, std::size_t from = 0) const {
    if (needle.length() > length()) return npos;
    if (needle.empty()) return from <= length() ? from : npos;
    auto it = std::search(letters_.begin() + static_cast<std::ptrdiff_t>(std::min(from, length())),
                          letters_.end(), needle.letters_.begin(), needle.letters_.end());
    return it == letters_.end() ? npos : static_cast<std::size_t>(it - letters_.begin());
  }
  bool contains(const Word& needle) const { return find(needle) != npos; }

  Word reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

  Letter max_letter() const {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.length() + b.length());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Deglex on raw letter ids. Storage order for element term maps.
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Admissible deglex order given by a rank on letters.
class TermOrder {
 public:
  TermOrder() = default;

  static TermOrder identity(std::size_t letters) {
    std::vector<std::size_t> rank(letters);
    for (std::size_t i = 0; i < letters; ++i) rank[i] = i;
    return TermOrder(std::move(rank));
  }

  /// `rank[l]` is the position of letter l; must be a permutation of 0..n-1.
  explicit TermOrder(std::vector<std::size_t> rank) : rank_(std::move(rank)) {
    std::vector<bool> seen(rank_.size(), false);
    identity_ = true;
    for (std::size_t i = 0; i < rank_.size(); ++i) {
      if (rank_[i] >= rank_.size() || seen[rank_[i]])
        throw ConfigError("symbol rank is not a permutation");
      seen[rank_[i]] = true;
      identity_ = identity_ && rank_[i] == i;
    }
  }

  std::size_t size() const noexcept { return rank_.size(); }
  bool is_identity() const noexcept { return identity_; }
  std::span<const std::size_t> ranks() const noexcept { return rank_; }

  std::size_t rank(Letter l) const {
    if (l >= rank_.size()) throw ConfigError("letter " + std::to_string(l) + " is not ranked");
    return rank_[l];
  }

  std::strong_ordering compare(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() <=> b.length();
    for (std::size_t i = 0; i < a.length(); ++i) {
      std::size_t ra = rank(a[i]);
      std::size_t rb = rank(b[i]);
      if (ra != rb) return ra <=> rb;
    }
    return std::strong_ordering::equal;
  }
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.rank_ == b.rank_; }

 private:
  std::vector<std::size_t> rank_;
  bool identity_ = true;
};

inline std::strong_ordering compare_words(const TermOrder& order, const Word& a, const Word& b) {
  return order.compare(a, b);
}

/// Comparator adaptor for ordered containers keyed by the term order.
struct OrderLess {
  const TermOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

}  // namespace ncalg
