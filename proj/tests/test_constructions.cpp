#include <gtest/gtest.h>

#include <map>

#include "ncalg/constructions.hpp"
#include "ncalg/embeddings.hpp"
#include "ncalg/random.hpp"

using namespace ncalg;

namespace {

FreeElement w(std::initializer_list<Letter> ls) { return FreeElement::monomial(Word(ls)); }
FreeElement one() { return FreeElement::one(); }

Presentation z2() { return Presentation("Z2", {{"x"}}, {w({0, 0}) - one()}); }
Presentation weyl() { return Presentation("A", {{"x"}, {"y"}}, {w({0, 1}) - w({1, 0}) - FreeElement::letter(0)}); }
Presentation free1() { return Presentation("F1", {{"x"}}, {}); }

// number of ways to write length n as alternating nonunit segments, a[k] and b[k]
// segment counts of length k in each factor
std::size_t alternating_count(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, std::size_t n) {
  // ending[f][m]: sequences of total length m whose last segment is from factor f
  std::vector<std::array<std::size_t, 2>> ending(n + 1, {0, 0});
  for (std::size_t m = 1; m <= n; ++m)
    for (int f = 0; f < 2; ++f) {
      const auto& seg = f == 0 ? a : b;
      for (std::size_t k = 1; k <= m && k < seg.size(); ++k)
        ending[m][f] += seg[k] * ((m == k ? 1 : 0) + ending[m - k][1 - f]);
    }
  return n == 0 ? 1 : ending[n][0] + ending[n][1];
}

std::vector<std::size_t> census(const RewriteSystem& s, std::size_t n) {
  std::vector<std::size_t> c(n + 1, 0);
  for (const auto& u : basis_words(s, n)) ++c[u.length()];
  return c;
}

}  // namespace

TEST(Opposite, PalindromicRelatorUnchanged) {
  Presentation op = opposite(z2());
  EXPECT_EQ(op.generators()[0].name, "x_op");
  ASSERT_EQ(op.relators().size(), 1u);
  EXPECT_EQ(op.relators()[0], w({0, 0}) - one());
}

TEST(Opposite, WordsReversed) {
  Presentation op = opposite(weyl());
  EXPECT_EQ(op.relators()[0], w({1, 0}) - w({0, 1}) - FreeElement::letter(0));
}

TEST(Opposite, CoefficientsConjugated) {
  Scalar c = Scalar(2) + Scalar::i();
  Presentation p("P", {{"x"}, {"y"}}, {FreeElement::monomial(Word{0, 1}, c) - one()});
  EXPECT_EQ(opposite(p).relators()[0], FreeElement::monomial(Word{1, 0}, c.conj()) - one());
}

TEST(Opposite, Involutive) {
  for (const auto& p : {z2(), weyl(), free1()}) EXPECT_EQ(opposite(opposite(p)).relators(), p.relators());
}

TEST(StarDouble, OfZ2) {
  StarDouble d = star_double(z2());
  const Presentation& p = d.presentation;
  ASSERT_EQ(p.letter_count(), 2u);
  EXPECT_EQ(p.letter_name(1), "x'");
  EXPECT_EQ(p.relators(), (std::vector<FreeElement>{w({0, 0}) - one(), w({1, 1}) - one()}));
  EXPECT_EQ(d.embed_first, (std::vector<Letter>{0}));
  EXPECT_EQ(d.embed_second, (std::vector<Letter>{1}));
}

TEST(StarDouble, OfFreeAlgebra) {
  StarDouble d = star_double(free1());
  EXPECT_EQ(d.presentation.letter_count(), 2u);
  EXPECT_TRUE(d.presentation.relators().empty());
  EXPECT_TRUE(d.presentation.is_star());
}

TEST(StarDouble, OfWeyl) {
  const Presentation p = star_double(weyl()).presentation;  // x x' y y'
  ASSERT_EQ(p.relators().size(), 2u);
  EXPECT_EQ(p.relators()[1], w({3, 1}) - w({1, 3}) - FreeElement::letter(1));
}

TEST(StarDouble, CompletionIsStarSymmetric) {
  for (const auto& base : {z2(), weyl(), free1()}) {
    Algebra a = complete_algebra(star_double(base).presentation, 8);
    for (const auto& r : a.system.rules()) EXPECT_TRUE(a.canonical(a.star(r.relator())).is_zero());
    for (const auto& r : a.presentation.relators()) EXPECT_TRUE(a.canonical(a.star(r)).is_zero());
  }
}

TEST(FreeProduct, WithTrivialAlgebra) {
  Presentation d = star_double(z2()).presentation;
  Presentation trivial("C", {}, {});
  Presentation p = free_product(d, trivial, ProductKind::star);
  EXPECT_EQ(p.letter_count(), d.letter_count());
  EXPECT_EQ(p.relators(), d.relators());
  EXPECT_TRUE(p.is_star());
}

TEST(FreeProduct, TwoDoublesOfZ2) {
  Presentation d = star_double(group_algebra_z2()).presentation;
  Presentation p = free_product(with_generator_suffix(d, "1"), with_generator_suffix(d, "2"), ProductKind::star);
  std::vector<std::string> names;
  for (Letter l = 0; l < p.letter_count(); ++l) names.push_back(p.letter_name(l));
  EXPECT_EQ(names, (std::vector<std::string>{"s1", "s1'", "s2", "s2'"}));
  EXPECT_EQ(p.relators().size(), 4u);
  EXPECT_TRUE(p.order().less(Word{1}, Word{2}));
}

TEST(FreeProduct, NameClashRejected) {
  EXPECT_THROW(free_product(z2(), z2(), ProductKind::plain), ConfigError);
  EXPECT_NO_THROW(free_product(with_generator_suffix(z2(), "1"), with_generator_suffix(z2(), "2"), ProductKind::plain));
}

TEST(FreeProduct, StarKindNeedsInvolutions) {
  EXPECT_THROW(free_product(z2(), with_generator_suffix(z2(), "2"), ProductKind::star), PreconditionError);
}

TEST(FreeProduct, CensusMatchesAlternatingDecomposition) {
  std::vector<std::pair<Presentation, Presentation>> pairs{
      {z2(), with_generator_suffix(z2(), "2")},
      {weyl(), with_generator_suffix(z2(), "2")},
      {free1(), with_generator_suffix(weyl(), "2")}};
  for (const auto& [p1, p2] : pairs) {
    auto a = census(complete_algebra(p1, 6).system, 6);
    auto b = census(complete_algebra(p2, 6).system, 6);
    auto ab = census(complete_algebra(free_product(p1, p2, ProductKind::plain), 6).system, 6);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(ab[n], alternating_count(a, b, n)) << "length " << n;
  }
}

TEST(Fock, DoubleOfFreeUpToTwo) {
  auto words = fock_basis(free1(), 2);
  std::vector<Word> expected{Word{}, Word{0}, Word{1}, Word{0, 0}, Word{0, 1}, Word{1, 0}, Word{1, 1}};
  EXPECT_EQ(words, expected);
}

TEST(Fock, BoundZero) { EXPECT_EQ(fock_basis(weyl(), 0), (std::vector<Word>{Word{}})); }

TEST(Fock, DoubleOfZ2UpToThree) {
  auto words = fock_basis(group_algebra_z2(), 3);
  EXPECT_EQ(words.size(), 7u);
  Algebra d = complete_algebra(star_double(group_algebra_z2()).presentation, 3);
  EXPECT_EQ(words, basis_words(d.system, 3));
}

TEST(Fock, AgreesWithDoubleBasis) {
  for (const auto& p : {z2(), weyl(), free1(), Presentation("F2", {{"x"}, {"y"}}, {})})
    for (std::size_t bound = 0; bound <= 6; ++bound) {
      Algebra d = complete_algebra(star_double(p).presentation, 6);
      EXPECT_EQ(fock_basis(p, bound), basis_words(d.system, bound)) << p.name() << " bound " << bound;
    }
}

TEST(TwoInvolutions, PsiOnGenerators) {
  TwoInvolutions ctx = two_involutions(star_double(group_algebra_z2()).presentation);
  // letters of A * A*: s, phi(s), s', phi(s')
  EXPECT_EQ(psi(ctx, one()), one());
  EXPECT_EQ(psi(ctx, FreeElement::letter(0)), FreeElement::letter(3));
  EXPECT_EQ(psi(ctx, FreeElement::letter(1)), FreeElement::letter(2));
}

TEST(TwoInvolutions, Identities) {
  TwoInvolutions ctx = two_involutions(star_double(group_algebra_z2()).presentation);
  Algebra alg = complete_algebra(ctx.dbl.presentation, 8);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    FreeElement f = random_element(rng, 4, 4, 5), g = random_element(rng, 4, 3, 3);
    EXPECT_EQ(psi(ctx, psi(ctx, f)), f);
    EXPECT_EQ(alg.canonical(psi(ctx, sharp_involution(ctx, f))), alg.canonical(second_involution(ctx, f)));
    EXPECT_EQ(alg.canonical(psi(ctx, second_involution(ctx, f))), alg.canonical(sharp_involution(ctx, f)));
    EXPECT_EQ(second_involution(ctx, second_involution(ctx, f)), f);
    EXPECT_EQ(sharp_involution(ctx, sharp_involution(ctx, f)), f);
    EXPECT_EQ(second_involution(ctx, f * g), second_involution(ctx, g) * second_involution(ctx, f));
  }
}

TEST(TwoInvolutions, MapsAreWellDefinedOnTheQuotient) {
  TwoInvolutions ctx = two_involutions(star_double(group_algebra_z2()).presentation);
  Algebra alg = complete_algebra(ctx.dbl.presentation, 8);
  for (const auto& r : alg.presentation.relators()) {
    EXPECT_TRUE(alg.canonical(psi(ctx, r)).is_zero());
    EXPECT_TRUE(alg.canonical(second_involution(ctx, r)).is_zero());
  }
}

TEST(TwoInvolutions, NeedsStarAlgebra) { EXPECT_THROW(two_involutions(z2()), PreconditionError); }

TEST(DoubleDouble, FreeAlgebra) {
  DoubleDoubleReport rep = double_double(free1());
  EXPECT_EQ(rep.double_double.letter_count(), 4u);
  EXPECT_EQ(rep.product.letter_count(), 4u);
  EXPECT_TRUE(rep.bijective);
  EXPECT_TRUE(rep.verified());
}

TEST(DoubleDouble, Z2) {
  DoubleDoubleReport rep = double_double(z2());
  EXPECT_EQ(rep.double_double.letter_count(), 4u);
  EXPECT_EQ(rep.double_double.relators().size(), 4u);
  EXPECT_EQ(rep.product.relators().size(), 4u);
  EXPECT_EQ(rep.relators_checked, 8u);
  EXPECT_TRUE(rep.verified());
}

TEST(DoubleDouble, Weyl) { EXPECT_TRUE(double_double(weyl()).verified()); }
