#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ncalg/algebra.hpp"

namespace ncalg {

/// Forgets the involution: every letter becomes a plain generator of the same name.
inline Presentation underlying_plain(const Presentation& p) {
  if (!p.is_star()) return p;
  std::vector<Generator> gens;
  for (const auto& l : p.letters()) gens.push_back({l.name, GeneratorKind::plain});
  return Presentation(p.name(), std::move(gens), p.relators(), p.order());
}

/// Opposite algebra A*: fresh generators `<name>_op`, relator words reversed and
/// coefficients conjugated. Letter k of the result is phi(letter k).
inline Presentation opposite(const Presentation& p) {
  if (p.is_star()) throw PreconditionError("opposite expects a plain presentation");
  std::vector<Generator> gens;
  for (const auto& g : p.generators()) gens.push_back({g.name + "_op", GeneratorKind::plain});
  std::vector<Letter> id(p.letter_count());
  for (Letter l = 0; l < id.size(); ++l) id[l] = l;
  std::vector<FreeElement> rels;
  for (const auto& r : p.relators()) rels.push_back(apply_involution(r, id));
  return Presentation(p.name() + "_op", std::move(gens), std::move(rels), p.order());
}

/// D(A) = A * A* with the involution swapping the factors.
struct StarDouble {
  Presentation presentation;
  std::vector<Letter> embed_first;   // i: letter of A -> letter of D(A)
  std::vector<Letter> embed_second;  // j: letter of A* (= phi of A's letter) -> letter of D(A)
};

/// Letter k of A maps to 2k, its partner phi(k) to 2k+1; the order interleaves
/// the partners right after their base letter.
inline StarDouble star_double(const Presentation& p, const std::string& suffix = "'") {
  if (p.is_star()) throw PreconditionError("star_double expects a plain presentation");
  std::size_t n = p.letter_count();
  std::vector<Generator> gens;
  for (const auto& g : p.generators()) gens.push_back({g.name, GeneratorKind::star_pair});
  std::vector<Letter> first(n), second(n);
  std::vector<std::size_t> rank(2 * n);
  for (Letter k = 0; k < n; ++k) {
    first[k] = 2 * k;
    second[k] = 2 * k + 1;
    rank[2 * k] = 2 * p.order().rank(k);
    rank[2 * k + 1] = 2 * p.order().rank(k) + 1;
  }
  std::vector<FreeElement> rels;
  for (const auto& r : p.relators()) rels.push_back(relabel(r, first));
  Presentation d("D(" + p.name() + ")", std::move(gens), std::move(rels), TermOrder(std::move(rank)), suffix);
  return StarDouble{std::move(d), std::move(first), std::move(second)};
}

/// D(A) for a *-presentation A: double of the underlying algebra, partners marked `^`.
inline StarDouble double_of_star(const Presentation& a) {
  if (!a.is_star()) throw PreconditionError("double_of_star expects a *-presentation");
  return star_double(underlying_plain(a), "^");
}

inline Presentation with_generator_suffix(const Presentation& p, const std::string& suffix) {
  std::vector<Generator> gens = p.generators();
  for (auto& g : gens) g.name += suffix;
  return Presentation(p.name() + suffix, std::move(gens), p.relators(), p.order(), p.star_suffix());
}

enum class ProductKind { plain, star };

/// Free product: disjoint union of generators and relators, P1's letters ranked first.
inline Presentation free_product(const Presentation& p1, const Presentation& p2, ProductKind kind) {
  if (kind == ProductKind::plain && (p1.is_star() || p2.is_star()))
    return free_product(underlying_plain(p1), underlying_plain(p2), kind);
  bool trivial1 = p1.generators().empty();
  bool trivial2 = p2.generators().empty();
  if (kind == ProductKind::star && ((!p1.is_star() && !trivial1) || (!p2.is_star() && !trivial2)))
    throw PreconditionError("star free product needs two *-presentations");
  for (const auto& l : p2.letters())
    if (p1.find_letter(l.name))
      throw ConfigError("name clash '" + l.name + "' in free product; rename one factor");

  std::size_t n1 = p1.letter_count();
  std::vector<Generator> gens = p1.generators();
  gens.insert(gens.end(), p2.generators().begin(), p2.generators().end());
  std::vector<Letter> shift(p2.letter_count());
  for (Letter l = 0; l < shift.size(); ++l) shift[l] = static_cast<Letter>(n1 + l);
  std::vector<FreeElement> rels = p1.relators();
  for (const auto& r : p2.relators()) rels.push_back(relabel(r, shift));
  std::vector<std::size_t> rank;
  for (Letter l = 0; l < n1; ++l) rank.push_back(p1.order().rank(l));
  for (Letter l = 0; l < p2.letter_count(); ++l) rank.push_back(n1 + p2.order().rank(l));
  std::string sep = kind == ProductKind::star ? "(*)" : "*";
  std::string suffix = trivial1 ? p2.star_suffix() : p1.star_suffix();
  if (!trivial1 && !trivial2 && p1.star_suffix() != p2.star_suffix())
    throw ConfigError("free product factors use different star suffixes");
  return Presentation(p1.name() + sep + p2.name(), std::move(gens), std::move(rels),
                      TermOrder(std::move(rank)), suffix);
}

/// Alternating products of nonunit basis words of A and A*, total length <= bound,
/// written in the letters of D(A) and sorted by its order.
inline std::vector<Word> fock_basis(const Presentation& p, std::size_t bound, const std::string& suffix = "'") {
  if (p.is_star()) throw PreconditionError("fock_basis expects a plain presentation");
  Algebra a = complete_algebra(p, bound);
  Algebra b = complete_algebra(opposite(p), bound);
  a.system.require_trusted(bound);
  b.system.require_trusted(bound);
  StarDouble d = star_double(p, suffix);

  std::vector<Word> segs_a, segs_b;
  for (const auto& w : basis_words(a.system, bound))
    if (!w.empty()) segs_a.push_back(w);
  for (const auto& w : basis_words(b.system, bound))
    if (!w.empty()) segs_b.push_back(w);

  struct Partial {
    Word word;
    int last;  // -1 none, 0 first factor, 1 second factor
  };
  std::vector<Word> out{Word{}};
  std::vector<Partial> frontier{{Word{}, -1}};
  while (!frontier.empty()) {
    std::vector<Partial> next;
    for (const auto& part : frontier) {
      for (int factor = 0; factor < 2; ++factor) {
        if (factor == part.last) continue;
        const auto& segs = factor == 0 ? segs_a : segs_b;
        const auto& embed = factor == 0 ? d.embed_first : d.embed_second;
        for (const auto& s : segs) {
          if (part.word.length() + s.length() > bound) continue;
          std::vector<Letter> letters(part.word.begin(), part.word.end());
          for (Letter l : s) letters.push_back(embed[l]);
          Word w(std::move(letters));
          out.push_back(w);
          next.push_back({std::move(w), factor});
        }
      }
    }
    frontier = std::move(next);
  }
  const TermOrder& order = d.presentation.order();
  std::sort(out.begin(), out.end(), [&order](const Word& x, const Word& y) { return order.less(x, y); });
  return out;
}

/// A * A* for a *-algebra A with its two involutions and the swap psi.
///
/// sharp is the *-double involution a <-> phi(a); star is a -> a*,
/// phi(a) -> phi(a*), making A * A* the *-free product A (*) A; psi(a) = phi(a*),
/// psi(phi(a)) = a*.
struct TwoInvolutions {
  StarDouble dbl;
  std::vector<Letter> sharp;
  std::vector<Letter> star;
  std::vector<Letter> psi;
};

inline TwoInvolutions two_involutions(const Presentation& a) {
  StarDouble d = double_of_star(a);
  auto sigma = a.involution();
  std::size_t n = a.letter_count();
  std::vector<Letter> sharp(2 * n), star(2 * n), psi(2 * n);
  for (Letter k = 0; k < n; ++k) {
    sharp[2 * k] = 2 * k + 1;
    sharp[2 * k + 1] = 2 * k;
    star[2 * k] = 2 * sigma[k];
    star[2 * k + 1] = 2 * sigma[k] + 1;
    psi[2 * k] = 2 * sigma[k] + 1;
    psi[2 * k + 1] = 2 * sigma[k];
  }
  return TwoInvolutions{std::move(d), std::move(sharp), std::move(star), std::move(psi)};
}

inline FreeElement second_involution(const TwoInvolutions& ctx, const FreeElement& f) {
  return apply_involution(f, ctx.star);
}

inline FreeElement sharp_involution(const TwoInvolutions& ctx, const FreeElement& f) {
  return apply_involution(f, ctx.sharp);
}

inline FreeElement psi(const TwoInvolutions& ctx, const FreeElement& f) { return relabel(f, ctx.psi); }

/// Relator correspondence between D(D(A)) and D(A) (*) D(A*).
struct DoubleDoubleReport {
  Presentation double_double;
  Presentation product;
  std::vector<Letter> forward;   // letters of D(D(A)) -> letters of the product
  std::vector<Letter> backward;
  std::size_t relators_checked = 0;
  bool bijective = false;
  bool star_compatible = false;
  bool relators_preserved = false;
  std::optional<std::size_t> trust_bound;

  bool verified() const { return bijective && star_compatible && relators_preserved; }
};

inline DoubleDoubleReport double_double(const Presentation& p, std::size_t degree_bound = 8) {
  if (p.is_star()) throw PreconditionError("double_double expects a plain presentation");
  StarDouble d = star_double(p);
  StarDouble dd = star_double(underlying_plain(d.presentation), "^");
  StarDouble dop = star_double(opposite(p));
  Presentation product = free_product(d.presentation, dop.presentation, ProductKind::star);

  std::size_t n = p.letter_count();
  std::vector<Letter> fwd(4 * n), bwd(4 * n);
  for (Letter k = 0; k < n; ++k) {
    fwd[4 * k] = 2 * k;
    fwd[4 * k + 1] = 2 * k + 1;
    fwd[4 * k + 2] = static_cast<Letter>(2 * n + 2 * k);
    fwd[4 * k + 3] = static_cast<Letter>(2 * n + 2 * k + 1);
  }
  DoubleDoubleReport rep{dd.presentation, product, fwd, bwd, 0, false, false, false, std::nullopt};
  std::set<Letter> image(fwd.begin(), fwd.end());
  rep.bijective = image.size() == 4 * n;
  for (Letter l = 0; l < 4 * n; ++l) bwd[fwd[l]] = l;
  rep.backward = bwd;

  auto inv_dd = dd.presentation.involution();
  auto inv_pr = product.involution();
  rep.star_compatible = true;
  for (Letter l = 0; l < 4 * n; ++l) rep.star_compatible = rep.star_compatible && fwd[inv_dd[l]] == inv_pr[fwd[l]];

  Algebra left = complete_algebra(dd.presentation, degree_bound);
  Algebra right = complete_algebra(product, degree_bound);
  rep.relators_preserved = true;
  for (const auto& r : dd.presentation.relators()) {
    rep.relators_preserved = rep.relators_preserved && right.canonical(relabel(r, fwd)).is_zero();
    ++rep.relators_checked;
  }
  for (const auto& r : product.relators()) {
    rep.relators_preserved = rep.relators_preserved && left.canonical(relabel(r, bwd)).is_zero();
    ++rep.relators_checked;
  }
  if (!left.system.is_complete() || !right.system.is_complete()) rep.trust_bound = degree_bound;
  if (!rep.verified()) throw TheoremViolation("D(D(A)) correspondence failed for " + p.name());
  return rep;
}

}  // namespace ncalg
