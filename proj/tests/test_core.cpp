#include <gtest/gtest.h>

#include "ncalg/presentation.hpp"
#include "ncalg/random.hpp"

using namespace ncalg;

namespace {

Presentation free_xy() { return Presentation("F", {{"x"}, {"y"}}, {}); }
Presentation star_xy() {
  return Presentation("S", {{"x", GeneratorKind::star_pair}, {"y", GeneratorKind::star_pair}}, {});
}
FreeElement w(std::initializer_list<Letter> ls) { return FreeElement::monomial(Word(ls)); }

}  // namespace

TEST(Scalar, ExactArithmetic) {
  Scalar a = Scalar::rational(3, 5) + Scalar::rational(4, 5) * Scalar::i();
  EXPECT_EQ(a.norm2(), Scalar(1));
  EXPECT_EQ(a * a.conj(), Scalar(1));
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ(a * a.inverse(), Scalar(1));
  EXPECT_EQ(Scalar::rational(2, 4), Scalar::rational(1, 2));
  EXPECT_THROW(Scalar().inverse(), ConfigError);
}

TEST(Scalar, Rendering) {
  EXPECT_EQ(Scalar::rational(3, 5).to_string(), "3/5");
  EXPECT_EQ((Scalar::rational(4, 5) * Scalar::i()).to_string(), "4/5 i");
  EXPECT_EQ((Scalar::rational(3, 5) + Scalar::rational(4, 5) * Scalar::i()).to_string(), "(3/5 + 4/5 i)");
  EXPECT_EQ((-Scalar::i()).to_string(), "-i");
}

TEST(Word, CompareDeglex) {
  TermOrder o = TermOrder::identity(2);  // x < y
  EXPECT_EQ(compare_words(o, Word{}, Word{0}), std::strong_ordering::less);
  EXPECT_EQ(compare_words(o, Word{0, 1}, Word{1, 0}), std::strong_ordering::less);
  EXPECT_EQ(compare_words(o, Word{0, 0, 0}, Word{1, 0}), std::strong_ordering::greater);
  EXPECT_EQ(compare_words(o, Word{1, 0}, Word{1, 0}), std::strong_ordering::equal);
}

TEST(Word, UnrankedSymbolIsConfigError) {
  TermOrder o = TermOrder::identity(2);
  EXPECT_THROW(compare_words(o, Word{0, 2}, Word{0, 1}), ConfigError);
  EXPECT_THROW(TermOrder({0, 0}), ConfigError);
}

TEST(Word, CustomRankOrder) {
  TermOrder o({1, 0});  // y < x
  EXPECT_TRUE(o.less(Word{1, 1}, Word{0, 1}));
  EXPECT_TRUE(o.less(Word{1}, Word{0}));
}

TEST(Word, OrderIsTotalAndAdmissible) {
  Rng rng(1);
  TermOrder o({2, 0, 1});
  for (int t = 0; t < 500; ++t) {
    Word a = random_word(rng, 3, 0, 4), b = random_word(rng, 3, 0, 4);
    Word c = random_word(rng, 3, 0, 3), d = random_word(rng, 3, 0, 3);
    auto ab = compare_words(o, a, b);
    EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
    EXPECT_EQ(compare_words(o, b, a), 0 <=> ab);
    if (ab == std::strong_ordering::less) {
      EXPECT_TRUE(o.less(c * a * d, c * b * d));
    }
  }
}

TEST(Element, ArithmeticExamples) {
  FreeElement x = FreeElement::letter(0), y = FreeElement::letter(1);
  FreeElement e = FreeElement::one();
  EXPECT_EQ(e * (x + y), x + y);
  // (x + y)(x - y) = x^2 - xy + yx - y^2
  FreeElement expected = w({0, 0}) - w({0, 1}) + w({1, 0}) - w({1, 1});
  EXPECT_EQ((x + y) * (x - y), expected);
  EXPECT_TRUE((FreeElement() * (x + y)).is_zero());
  EXPECT_EQ((x - x).size(), 0u);
}

TEST(Element, MixedPresentationsRejected) {
  Presentation p = free_xy();
  EXPECT_THROW(p.check_letters(FreeElement::letter(5)), ConfigError);
}

TEST(Element, StarExamples) {
  Presentation p = star_xy();  // letters x, x', y, y'
  EXPECT_EQ(p.star(FreeElement::one()), FreeElement::one());
  Scalar c = Scalar(2) + Scalar::i();
  FreeElement f = FreeElement::monomial(Word{0, 2}, c);  // (2+i) x y
  FreeElement expected = FreeElement::monomial(Word{3, 1}, c.conj());  // (2-i) y' x'
  EXPECT_EQ(p.star(f), expected);
  EXPECT_EQ(p.star(p.star(f)), f);
}

TEST(Element, StarLaws) {
  Presentation p = star_xy();
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    FreeElement f = random_element(rng, 4, 3), g = random_element(rng, 4, 3);
    Scalar l = random_scalar(rng);
    EXPECT_EQ(p.star(p.star(f)), f);
    EXPECT_EQ(p.star(f * g), p.star(g) * p.star(f));
    EXPECT_EQ(p.star(f * l), p.star(f) * l.conj());
  }
}

TEST(Element, RingLaws) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    FreeElement a = random_element(rng, 3, 2), b = random_element(rng, 3, 2), c = random_element(rng, 3, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(Element, LeadingExamples) {
  TermOrder o = TermOrder::identity(2);
  auto [w1, c1] = leading(o, w({0, 0}) + FreeElement::letter(1));
  EXPECT_EQ(w1, (Word{0, 0}));
  EXPECT_EQ(c1, Scalar(1));
  auto [w2, c2] = leading(o, w({0, 1}) * Scalar(3) - w({1, 0}));
  EXPECT_EQ(w2, (Word{1, 0}));
  EXPECT_EQ(c2, Scalar(-1));
  auto [w3, c3] = leading(o, FreeElement::scalar(5));
  EXPECT_TRUE(w3.empty());
  EXPECT_EQ(c3, Scalar(5));
  EXPECT_THROW(leading(o, FreeElement()), NoLeadingTerm);
}

TEST(Element, LeadingIsMultiplicativeInFreeAlgebra) {
  Rng rng(4);
  TermOrder o({1, 2, 0});
  for (int t = 0; t < 200; ++t) {
    FreeElement f = random_element(rng, 3, 3), g = random_element(rng, 3, 3);
    auto [wf, cf] = leading(o, f);
    auto [wg, cg] = leading(o, g);
    auto [wfg, cfg] = leading(o, f * g);
    EXPECT_EQ(wfg, wf * wg);
    EXPECT_EQ(cfg, cf * cg);
    EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
  }
}

TEST(Presentation, DefaultLayoutPutsPartnerAfterBase) {
  Presentation p = star_xy();
  ASSERT_EQ(p.letter_count(), 4u);
  EXPECT_EQ(p.letter_name(0), "x");
  EXPECT_EQ(p.letter_name(1), "x'");
  EXPECT_EQ(p.letter_name(2), "y");
  EXPECT_EQ(p.letter_name(3), "y'");
  EXPECT_TRUE(p.order().less(Word{1}, Word{2}));
}

TEST(Presentation, SelfAdjointLetterIsItsOwnStar) {
  Presentation p("P", {{"s", GeneratorKind::self_adjoint}}, {});
  EXPECT_EQ(p.letter_count(), 1u);
  EXPECT_EQ(p.star(w({0, 0})), w({0, 0}));
}

TEST(Presentation, RelatorsAreStarClosed) {
  Presentation p("P", {{"x", GeneratorKind::star_pair}}, {w({0, 0}) - FreeElement::one()});
  ASSERT_EQ(p.relators().size(), 2u);
  EXPECT_EQ(p.relators()[1], w({1, 1}) - FreeElement::one());
}

TEST(Presentation, Render) {
  Presentation p = free_xy();
  EXPECT_EQ(p.render(w({0, 0, 1}) - w({0, 0}) * Scalar(2)), "x*x*y - 2*x*x");
  EXPECT_EQ(p.render(FreeElement()), "0");
  EXPECT_EQ(p.render(-FreeElement::one()), "-1");
}
