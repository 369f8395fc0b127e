#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/element.hpp"

namespace ncalg {

enum class GeneratorKind { plain, self_adjoint, star_pair };

struct Generator {
  std::string name;
  GeneratorKind kind = GeneratorKind::plain;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct LetterInfo {
  std::size_t generator;
  bool starred;
  std::string name;
};

/// Unital algebra <generators | relators> with an optional involution.
///
/// Letters are laid out generator by generator; a star-paired generator
/// contributes its letter followed by its starred partner. The default term
/// order ranks letters in that layout. When the presentation carries an
/// involution its relator list is closed under star.
class Presentation {
 public:
  Presentation() = default;

  Presentation(std::string name, std::vector<Generator> generators,
               std::vector<FreeElement> relators, std::optional<TermOrder> order = std::nullopt,
               std::string star_suffix = "'")
      : name_(std::move(name)), generators_(std::move(generators)), star_suffix_(std::move(star_suffix)) {
    std::size_t plain = 0;
    for (const auto& g : generators_) plain += g.kind == GeneratorKind::plain ? 1 : 0;
    if (plain != 0 && plain != generators_.size())
      throw ConfigError("presentation '" + name_ + "' mixes plain and involutive generators");
    star_ = !generators_.empty() && plain == 0;

    for (std::size_t g = 0; g < generators_.size(); ++g) {
      const auto& gen = generators_[g];
      add_letter({g, false, gen.name});
      if (gen.kind == GeneratorKind::star_pair) add_letter({g, true, gen.name + star_suffix_});
    }
    if (star_) {
      involution_.resize(letters_.size());
      for (Letter l = 0; l < letters_.size(); ++l) {
        const auto& info = letters_[l];
        if (generators_[info.generator].kind == GeneratorKind::self_adjoint)
          involution_[l] = l;
        else
          involution_[l] = info.starred ? l - 1 : l + 1;
      }
    }

    order_ = order ? *order : TermOrder::identity(letters_.size());
    if (order_.size() != letters_.size())
      throw ConfigError("term order of '" + name_ + "' ranks " + std::to_string(order_.size()) +
                        " letters, presentation has " + std::to_string(letters_.size()));

    for (auto& r : relators) {
      if (r.is_zero()) throw ConfigError("zero relator in presentation '" + name_ + "'");
      check_letters(r);
      push_unique(std::move(r));
    }
    if (star_) {
      std::size_t n = relators_.size();
      for (std::size_t k = 0; k < n; ++k) push_unique(apply_involution(relators_[k], involution_));
    }
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<LetterInfo>& letters() const noexcept { return letters_; }
  std::size_t letter_count() const noexcept { return letters_.size(); }
  const std::vector<FreeElement>& relators() const noexcept { return relators_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::string& star_suffix() const noexcept { return star_suffix_; }
  bool is_star() const noexcept { return star_; }

  const std::string& letter_name(Letter l) const {
    if (l >= letters_.size()) throw ConfigError("letter out of range");
    return letters_[l].name;
  }

  std::optional<Letter> find_letter(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> find_generator(const std::string& name) const {
    for (std::size_t g = 0; g < generators_.size(); ++g)
      if (generators_[g].name == name) return g;
    return std::nullopt;
  }

  /// Letter of generator g, starred or not.
  Letter letter_of(std::size_t g, bool starred = false) const {
    for (Letter l = 0; l < letters_.size(); ++l)
      if (letters_[l].generator == g && letters_[l].starred == starred) return l;
    throw ConfigError("generator has no such letter");
  }

  std::span<const Letter> involution() const {
    if (!star_) throw PreconditionError("presentation '" + name_ + "' has no involution");
    return involution_;
  }

  FreeElement star(const FreeElement& f) const {
    check_letters(f);
    return apply_involution(f, involution());
  }

  FreeElement letter_element(const std::string& name) const {
    auto l = find_letter(name);
    if (!l) throw ConfigError("unknown letter '" + name + "' in '" + name_ + "'");
    return FreeElement::letter(*l);
  }

  void check_letters(const FreeElement& f) const {
    auto m = f.max_letter();
    if (m && *m >= letters_.size())
      throw ConfigError("element uses letters outside presentation '" + name_ + "'");
  }

  Presentation with_order(const TermOrder& order) const {
    return Presentation(name_, generators_, relators_, order, star_suffix_);
  }
  Presentation renamed(std::string name) const {
    Presentation p = *this;
    p.name_ = std::move(name);
    return p;
  }

  std::string render_word(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.length(); ++k) {
      if (k) out += '*';
      out += letter_name(w[k]);
    }
    return out;
  }

  /// Terms in descending term order, in the presentation language.
  std::string render(const FreeElement& f) const {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Word, Scalar>> terms(f.begin(), f.end());
    std::sort(terms.begin(), terms.end(),
              [this](const auto& a, const auto& b) { return order_.less(b.first, a.first); });
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms) {
      bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
      Scalar mag = negative ? -c : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      if (w.empty()) {
        out += mag.to_string();
      } else {
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += render_word(w);
      }
    }
    return out;
  }

 private:
  void add_letter(LetterInfo info) {
    if (by_name_.count(info.name))
      throw ConfigError("duplicate letter name '" + info.name + "' in '" + name_ + "'");
    by_name_.emplace(info.name, static_cast<Letter>(letters_.size()));
    letters_.push_back(std::move(info));
  }

  void push_unique(FreeElement r) {
    if (std::find(relators_.begin(), relators_.end(), r) == relators_.end())
      relators_.push_back(std::move(r));
  }

  std::string name_;
  std::vector<Generator> generators_;
  std::string star_suffix_ = "'";
  std::vector<LetterInfo> letters_;
  std::map<std::string, Letter> by_name_;
  std::vector<Letter> involution_;
  std::vector<FreeElement> relators_;
  TermOrder order_;
  bool star_ = false;
};

}  // namespace ncalg
