#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncalg/constructions.hpp"
#include "ncalg/exact_rank.hpp"

namespace ncalg {

/// Algebra homomorphism given on letters; relator preservation is verified on construction.
class GeneratorMap {
 public:
  GeneratorMap(std::shared_ptr<const Algebra> source, std::shared_ptr<const Algebra> target,
               std::vector<FreeElement> images, std::string name = "map")
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), name_(std::move(name)) {
    if (images_.size() != source_->letter_count())
      throw ConfigError(name_ + ": expected " + std::to_string(source_->letter_count()) + " images");
    for (const auto& img : images_) target_->presentation.check_letters(img);
    for (const auto& r : source_->presentation.relators()) {
      if (!target_->canonical(apply(r)).is_zero())
        throw RelatorCheckError(name_ + ": relator " + source_->render(r) + " does not map to 0");
    }
    star_compatible_ = source_->presentation.is_star() && target_->presentation.is_star();
    if (star_compatible_) {
      auto inv = source_->presentation.involution();
      for (Letter l = 0; l < images_.size(); ++l) {
        if (!target_->equal(images_[inv[l]], target_->star(images_[l])))
          throw RelatorCheckError(name_ + ": image of " + source_->presentation.letter_name(l) +
                                  " is not star-compatible");
      }
    }
  }

  const Algebra& source() const noexcept { return *source_; }
  const Algebra& target() const noexcept { return *target_; }
  std::shared_ptr<const Algebra> source_ptr() const noexcept { return source_; }
  std::shared_ptr<const Algebra> target_ptr() const noexcept { return target_; }
  const std::vector<FreeElement>& images() const noexcept { return images_; }
  const std::string& name() const noexcept { return name_; }
  bool star_compatible() const noexcept { return star_compatible_; }

  FreeElement apply(const FreeElement& f) const {
    source_->presentation.check_letters(f);
    return substitute(f, images_);
  }
  FreeElement apply_canonical(const FreeElement& f) const { return target_->canonical(apply(f)); }

 private:
  std::shared_ptr<const Algebra> source_;
  std::shared_ptr<const Algebra> target_;
  std::vector<FreeElement> images_;
  std::string name_;
  bool star_compatible_ = false;
};

inline std::shared_ptr<const Algebra> make_algebra(const Presentation& p, std::size_t degree_bound) {
  return std::make_shared<const Algebra>(complete_algebra(p, degree_bound));
}

inline GeneratorMap identity_map(std::shared_ptr<const Algebra> alg) {
  std::vector<FreeElement> images;
  for (Letter l = 0; l < alg->letter_count(); ++l) images.push_back(FreeElement::letter(l));
  return GeneratorMap(alg, alg, std::move(images), "id");
}

/// second after first.
inline GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second) {
  if (first.target().letter_count() != second.source().letter_count())
    throw ConfigError("compose: target of the first map is not the source of the second");
  std::vector<FreeElement> images;
  for (const auto& img : first.images()) images.push_back(second.target().canonical(second.apply(img)));
  return GeneratorMap(first.source_ptr(), second.target_ptr(), std::move(images),
                      second.name() + "." + first.name());
}

/// rho * rho^* : D(A) -> D(B), x -> rho(x), x' -> star(rho(x)).
inline GeneratorMap induced_star_hom(const GeneratorMap& rho, std::size_t degree_bound) {
  const Presentation& a = rho.source().presentation;
  const Presentation& b = rho.target().presentation;
  if (a.is_star() || b.is_star()) throw PreconditionError("induced_star_hom expects plain algebras");
  StarDouble da = star_double(a);
  StarDouble db = star_double(b);
  auto src = make_algebra(da.presentation, degree_bound);
  auto dst = make_algebra(db.presentation, degree_bound);
  std::vector<FreeElement> images(da.presentation.letter_count());
  for (Letter k = 0; k < a.letter_count(); ++k) {
    FreeElement img = relabel(rho.images()[k], db.embed_first);
    images[da.embed_first[k]] = img;
    images[da.embed_second[k]] = db.presentation.star(img);
  }
  return GeneratorMap(src, dst, std::move(images), "D(" + rho.name() + ")");
}

/// <g, h | gh - 1, hg - 1>, the group algebra of Z with h the inverse of g.
inline Presentation group_algebra_z() {
  std::vector<FreeElement> rels{FreeElement::monomial(Word{0, 1}) - FreeElement::one(),
                                FreeElement::monomial(Word{1, 0}) - FreeElement::one()};
  return Presentation("CZ", {{"g"}, {"h"}}, std::move(rels));
}

/// <s | s^2 - 1>, the group algebra of Z_2.
inline Presentation group_algebra_z2() {
  return Presentation("CZ2", {{"s"}}, {FreeElement::monomial(Word{0, 0}) - FreeElement::one()});
}

/// gamma : D(A) -> A (*) D(C[Z]),
/// a -> h a g, phi(a) -> g' a* h'  (h plays g^{-1}, h' plays g*^{-1}).
struct GammaEmbedding {
  Presentation base;  // the *-algebra A
  StarDouble dbl;     // D(A)
  GeneratorMap map;
  Letter g, g_star, h, h_star;

  std::size_t base_letters() const { return base.letter_count(); }
};

inline GammaEmbedding gamma_embed(const Presentation& a, std::size_t degree_bound) {
  if (!a.is_star()) throw PreconditionError("gamma_embed needs a *-presentation");
  StarDouble d = double_of_star(a);
  StarDouble dz = star_double(group_algebra_z());
  Presentation target = free_product(a, dz.presentation, ProductKind::star);
  std::size_t n = a.letter_count();
  Letter g = static_cast<Letter>(n + dz.embed_first[0]);
  Letter gs = static_cast<Letter>(n + dz.embed_second[0]);
  Letter h = static_cast<Letter>(n + dz.embed_first[1]);
  Letter hs = static_cast<Letter>(n + dz.embed_second[1]);
  auto sigma = a.involution();
  std::vector<FreeElement> images(2 * n);
  for (Letter k = 0; k < n; ++k) {
    images[d.embed_first[k]] = FreeElement::monomial(Word{h, k, g});
    images[d.embed_second[k]] = FreeElement::monomial(Word{gs, sigma[k], hs});
  }
  auto src = make_algebra(d.presentation, degree_bound);
  auto dst = make_algebra(target, degree_bound);
  GeneratorMap map(src, dst, std::move(images), "gamma");
  return GammaEmbedding{a, std::move(d), std::move(map), g, gs, h, hs};
}

/// Parses canonical words of the form (h u g | g' w h')* back into D(A).
inline FreeElement gamma_inverse(const GammaEmbedding& ge, const FreeElement& image) {
  FreeElement canon = ge.map.target().canonical(image);
  std::size_t n = ge.base_letters();
  auto sigma = ge.base.involution();
  FreeElement out;
  for (const auto& [w, c] : canon) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    int last_block = -1;
    while (pos < w.length()) {
      Letter open = w[pos];
      bool first_factor = open == ge.h;
      if (!first_factor && open != ge.g_star)
        throw NotInImage("word " + ge.map.target().presentation.render_word(w) + " does not start a block");
      Letter close = first_factor ? ge.g : ge.h_star;
      int block = first_factor ? 0 : 1;
      if (block == last_block) throw NotInImage("two consecutive blocks from the same factor");
      std::size_t k = pos + 1;
      while (k < w.length() && w[k] < n) ++k;
      if (k == pos + 1 || k >= w.length() || w[k] != close)
        throw NotInImage("malformed block in " + ge.map.target().presentation.render_word(w));
      for (std::size_t t = pos + 1; t < k; ++t)
        letters.push_back(first_factor ? ge.dbl.embed_first[w[t]] : ge.dbl.embed_second[sigma[w[t]]]);
      pos = k + 1;
      last_block = block;
    }
    out.add_term(Word(std::move(letters)), c);
  }
  return ge.map.source().canonical(out);
}

/// D(C[Z]) -> D(C[Z2])1 (*) D(C[Z2])2 with g -> s1 s2, h -> s2 s1.
inline GeneratorMap z_embed(std::size_t degree_bound) {
  StarDouble dz = star_double(group_algebra_z());
  Presentation dz2 = star_double(group_algebra_z2()).presentation;
  Presentation target = free_product(with_generator_suffix(dz2, "1"), with_generator_suffix(dz2, "2"),
                                     ProductKind::star);
  Letter s1 = *target.find_letter("s1"), s1s = *target.find_letter("s1'");
  Letter s2 = *target.find_letter("s2"), s2s = *target.find_letter("s2'");
  std::vector<FreeElement> images(4);
  images[dz.embed_first[0]] = FreeElement::monomial(Word{s1, s2});
  images[dz.embed_second[0]] = FreeElement::monomial(Word{s2s, s1s});
  images[dz.embed_first[1]] = FreeElement::monomial(Word{s2, s1});
  images[dz.embed_second[1]] = FreeElement::monomial(Word{s1s, s2s});
  return GeneratorMap(make_algebra(dz.presentation, degree_bound), make_algebra(target, degree_bound),
                      std::move(images), "z");
}

/// D(A) -> A (*) D(C[Z2]) (*) D(C[Z2]): gamma followed by id_A (*) z.
inline GeneratorMap gamma_z2z2(const GammaEmbedding& ge, std::size_t degree_bound) {
  GeneratorMap z = z_embed(degree_bound);
  const Presentation& mid = ge.map.target().presentation;
  Presentation target = free_product(ge.base, z.target().presentation, ProductKind::star);
  std::size_t n = ge.base_letters();
  std::vector<FreeElement> images;
  for (Letter l = 0; l < n; ++l) images.push_back(FreeElement::letter(l));
  std::vector<Letter> shift(z.target().letter_count());
  for (Letter l = 0; l < shift.size(); ++l) shift[l] = static_cast<Letter>(n + l);
  for (Letter l = static_cast<Letter>(n); l < mid.letter_count(); ++l)
    images.push_back(relabel(z.images()[l - n], shift));
  GeneratorMap bridge(ge.map.target_ptr(), make_algebra(target, degree_bound), std::move(images), "id*z");
  return compose(ge.map, bridge);
}

struct InjectivityReport {
  std::size_t basis_words = 0;
  std::size_t rank = 0;
  std::size_t bound = 0;
  bool injective_at_bound() const { return rank == basis_words; }
};

/// Exact rank of the canonical images of all source basis words of length <= bound.
inline InjectivityReport injectivity_certificate(const GeneratorMap& map, std::size_t bound) {
  InjectivityReport rep;
  rep.bound = bound;
  SparseEliminator elim;
  for (const auto& w : basis_words(map.source().system, bound)) {
    ++rep.basis_words;
    elim.insert(map.apply_canonical(FreeElement::monomial(w)));
  }
  rep.rank = elim.rank();
  return rep;
}

}  // namespace ncalg
