#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "ncalg/element.hpp"

namespace ncalg {

/// Monic rewrite rule lhs -> rhs; every word of rhs is smaller than lhs.
struct Rule {
  Word lhs;
  FreeElement rhs;
  std::uint64_t serial = 0;  // changes whenever the rule is created or rewritten

  /// The relator lhs - rhs this rule encodes.
  FreeElement relator() const { return FreeElement::monomial(lhs) - rhs; }
};

/// Overlap lhs_i = x*y, lhs_j = y*z with y nonempty, w = x*y*z.
struct CompositionRecord {
  std::size_t rule_i;
  std::size_t rule_j;
  Word x, y, z, w;
};

enum class CompletionStatus { complete, truncated };

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(TermOrder order, std::vector<Rule> rules, CompletionStatus status,
                std::size_t degree_bound)
      : order_(std::move(order)), rules_(std::move(rules)), status_(status), degree_bound_(degree_bound) {}

  const TermOrder& order() const noexcept { return order_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  CompletionStatus status() const noexcept { return status_; }
  std::size_t degree_bound() const noexcept { return degree_bound_; }
  std::size_t letter_count() const noexcept { return order_.size(); }
  bool is_complete() const noexcept { return status_ == CompletionStatus::complete; }

  /// Degree up to which canonical forms are certified; nullopt means unlimited.
  std::optional<std::size_t> trust_bound() const {
    if (is_complete()) return std::nullopt;
    return degree_bound_;
  }

  void require_trusted(std::size_t degree) const {
    if (!is_complete() && degree > degree_bound_) throw TrustBoundExceeded(degree, degree_bound_);
  }

 private:
  TermOrder order_;
  std::vector<Rule> rules_;
  CompletionStatus status_ = CompletionStatus::complete;
  std::size_t degree_bound_ = 0;
};

namespace detail {

inline void check_ranked(const TermOrder& order, const FreeElement& f) {
  auto m = f.max_letter();
  if (m && *m >= order.size())
    throw ConfigError("element uses letter " + std::to_string(*m) + " not ranked by the system");
}

/// Order-largest applicable lhs, leftmost occurrence. Rules sorted ascending.
inline std::optional<std::pair<std::size_t, std::size_t>> find_redex(const std::vector<Rule>& rules,
                                                                     const Word& w) {
  for (std::size_t k = rules.size(); k-- > 0;) {
    if (rules[k].lhs.length() > w.length()) continue;
    std::size_t pos = w.find(rules[k].lhs);
    if (pos != Word::npos) return std::make_pair(k, pos);
  }
  return std::nullopt;
}

using OrderedTerms = std::map<Word, Scalar, OrderLess>;

inline void accumulate(OrderedTerms& terms, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

inline FreeElement reduce_with(const std::vector<Rule>& rules, const TermOrder& order,
                               const FreeElement& f) {
  OrderedTerms work{OrderLess{&order}};
  for (const auto& [w, c] : f) accumulate(work, w, c);
  FreeElement out;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Word w = top->first;
    Scalar c = top->second;
    work.erase(top);
    auto redex = find_redex(rules, w);
    if (!redex) {
      out.add_term(w, c);
      continue;
    }
    const Rule& rule = rules[redex->first];
    Word left = w.prefix(redex->second);
    Word right = w.suffix_from(redex->second + rule.lhs.length());
    for (const auto& [u, d] : rule.rhs) accumulate(work, left * u * right, c * d);
  }
  if (out.degree() > f.degree())
    throw TheoremViolation("reduction increased degree; term order is not deglex-admissible");
  return out;
}

inline void sort_rules(std::vector<Rule>& rules, const TermOrder& order) {
  std::sort(rules.begin(), rules.end(),
            [&order](const Rule& a, const Rule& b) { return order.less(a.lhs, b.lhs); });
}

inline std::vector<CompositionRecord> compositions_of(const std::vector<Rule>& rules,
                                                      const TermOrder& order) {
  struct Keyed {
    CompositionRecord rec;
    std::size_t overlap;
  };
  std::vector<Keyed> found;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      std::size_t max_k = std::min(li.length(), lj.length());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) continue;
        Word x = li.prefix(li.length() - k);
        CompositionRecord rec{i, j, x, lj.prefix(k), lj.suffix_from(k), x * lj};
        found.push_back({std::move(rec), k});
      }
    }
  }
  std::sort(found.begin(), found.end(), [&order](const Keyed& a, const Keyed& b) {
    auto c = order.compare(a.rec.w, b.rec.w);
    if (c != 0) return c < 0;
    return std::tie(a.rec.rule_i, a.rec.rule_j, a.overlap) <
           std::tie(b.rec.rule_i, b.rec.rule_j, b.overlap);
  });
  std::vector<CompositionRecord> out;
  out.reserve(found.size());
  for (auto& k : found) out.push_back(std::move(k.rec));
  return out;
}

/// lc(g)*f*z - lc(f)*x*g for monic f = lhs_i - rhs_i, g = lhs_j - rhs_j.
inline FreeElement composition_value(const std::vector<Rule>& rules, const CompositionRecord& c) {
  const Rule& f = rules[c.rule_i];
  const Rule& g = rules[c.rule_j];
  return f.relator().sandwich(Word{}, c.z) - g.relator().sandwich(c.x, Word{});
}

/// Interreduced rule set under construction.
class Completer {
 public:
  explicit Completer(const TermOrder& order) : order_(order) {}

  const std::vector<Rule>& rules() const noexcept { return rules_; }

  void insert(const FreeElement& p) {
    std::deque<FreeElement> pending{p};
    while (!pending.empty()) {
      FreeElement q = reduce_with(rules_, order_, pending.front());
      pending.pop_front();
      if (q.is_zero()) continue;
      auto [lhs, lc] = leading(order_, q);
      q *= lc.inverse();
      Rule rule{lhs, FreeElement::monomial(lhs) - q, next_serial_++};

      std::vector<Rule> kept;
      for (auto& r : rules_) {
        if (r.lhs.contains(lhs))
          pending.push_back(r.relator());
        else
          kept.push_back(std::move(r));
      }
      kept.push_back(std::move(rule));
      rules_ = std::move(kept);
      sort_rules(rules_, order_);
      for (auto& r : rules_) {
        FreeElement rhs = reduce_with(rules_, order_, r.rhs);
        if (rhs != r.rhs) {
          r.rhs = std::move(rhs);
          r.serial = next_serial_++;
        }
      }
    }
  }

 private:
  TermOrder order_;
  std::vector<Rule> rules_;
  std::uint64_t next_serial_ = 1;
};

}  // namespace detail

/// Canonical form R_S(f) with respect to the current rules.
inline FreeElement reduce(const RewriteSystem& system, const FreeElement& f) {
  detail::check_ranked(system.order(), f);
  return detail::reduce_with(system.rules(), system.order(), f);
}

/// Rewrites a uniformly chosen redex (term and occurrence) until irreducible.
inline FreeElement reduce_randomized(const RewriteSystem& system, const FreeElement& f,
                                     std::mt19937_64& rng) {
  detail::check_ranked(system.order(), f);
  const auto& rules = system.rules();
  FreeElement cur = f;
  while (true) {
    struct Redex {
      Word word;
      std::size_t rule;
      std::size_t pos;
    };
    std::vector<Redex> redexes;
    for (const auto& [w, c] : cur)
      for (std::size_t k = 0; k < rules.size(); ++k)
        for (std::size_t pos = w.find(rules[k].lhs); pos != Word::npos; pos = w.find(rules[k].lhs, pos + 1))
          redexes.push_back({w, k, pos});
    if (redexes.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
    const Redex& r = redexes[pick(rng)];
    Scalar c = cur.coefficient(r.word);
    const Rule& rule = rules[r.rule];
    Word left = r.word.prefix(r.pos);
    Word right = r.word.suffix_from(r.pos + rule.lhs.length());
    cur.add_term(r.word, -c);
    cur += rule.rhs.sandwich(left, right) * c;
  }
}

inline std::vector<CompositionRecord> find_compositions(const RewriteSystem& system) {
  return detail::compositions_of(system.rules(), system.order());
}

inline FreeElement composition_result(const RewriteSystem& system, const CompositionRecord& c) {
  return detail::composition_value(system.rules(), c);
}

/// Degree-bounded Buchberger-Mora completion.
///
/// Compositions are processed smallest overlap word first. Overlaps longer
/// than `degree_bound` are never turned into rules; if any of them fails to
/// reduce to zero the result is marked truncated and certifies canonical forms
/// only up to `degree_bound`.
inline RewriteSystem complete(std::span<const FreeElement> relators, const TermOrder& order,
                              std::size_t degree_bound) {
  for (const auto& r : relators) {
    if (r.is_zero()) throw ConfigError("zero relator");
    detail::check_ranked(order, r);
    if (r.degree() > degree_bound)
      throw ConfigError("degree bound " + std::to_string(degree_bound) +
                        " is below relator degree " + std::to_string(r.degree()));
  }
  detail::Completer completer(order);
  for (const auto& r : relators) completer.insert(r);

  std::set<std::tuple<std::uint64_t, std::uint64_t, std::size_t>> resolved;
  std::vector<CompositionRecord> comps;
  while (true) {
    comps = detail::compositions_of(completer.rules(), order);
    bool added = false;
    for (const auto& c : comps) {
      if (c.w.length() > degree_bound) continue;
      const auto& rules = completer.rules();
      auto key = std::make_tuple(rules[c.rule_i].serial, rules[c.rule_j].serial, c.y.length());
      if (resolved.count(key)) continue;
      FreeElement res = detail::reduce_with(rules, order, detail::composition_value(rules, c));
      if (res.is_zero()) {
        resolved.insert(key);
        continue;
      }
      completer.insert(res);
      added = true;
      break;
    }
    if (!added) break;
  }

  CompletionStatus status = CompletionStatus::complete;
  for (const auto& c : comps) {
    if (c.w.length() <= degree_bound) continue;
    const auto& rules = completer.rules();
    if (!detail::reduce_with(rules, order, detail::composition_value(rules, c)).is_zero()) {
      status = CompletionStatus::truncated;
      break;
    }
  }
  return RewriteSystem(order, completer.rules(), status, degree_bound);
}

inline RewriteSystem complete(const std::vector<FreeElement>& relators, const TermOrder& order,
                              std::size_t degree_bound) {
  return complete(std::span<const FreeElement>(relators), order, degree_bound);
}

/// True when no lhs is a subword of another lhs.
inline bool is_minimal(const RewriteSystem& system) {
  const auto& rules = system.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j)
      if (i != j && rules[j].lhs.contains(rules[i].lhs)) return false;
  return true;
}

/// Words of length <= max_len avoiding every lhs, in deglex order: BW(S) truncated.
inline std::vector<Word> basis_words(const RewriteSystem& system, std::size_t max_len) {
  system.require_trusted(max_len);
  const auto& order = system.order();
  std::vector<Letter> alphabet(order.size());
  for (Letter l = 0; l < alphabet.size(); ++l) alphabet[order.rank(l)] = l;

  auto ends_with_lhs = [&system](const Word& w) {
    for (const auto& r : system.rules()) {
      std::size_t n = r.lhs.length();
      if (n <= w.length() && std::equal(r.lhs.begin(), r.lhs.end(), w.end() - static_cast<std::ptrdiff_t>(n)))
        return true;
    }
    return false;
  };

  std::vector<Word> out;
  std::vector<Word> layer;
  if (!ends_with_lhs(Word{})) layer.push_back(Word{});
  out = layer;
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter a : alphabet) {
        Word v = w * Word{a};
        if (!ends_with_lhs(v)) next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace ncalg
