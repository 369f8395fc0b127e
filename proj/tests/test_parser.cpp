#include <gtest/gtest.h>

#include "ncalg/parser.hpp"
#include "ncalg/random.hpp"

using namespace ncalg;

namespace {

FreeElement w(std::initializer_list<Letter> ls) { return FreeElement::monomial(Word(ls)); }

using Pos = std::pair<std::size_t, std::size_t>;

Pos error_position(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

AlgebraDecl random_decl(Rng& rng, int index) {
  static const char* pool[] = {"x", "y", "z", "a", "b", "u1", "v_2", "gen"};
  AlgebraDecl a;
  a.name = "R" + std::to_string(index);
  std::size_t n = 1 + rng() % 4;
  std::vector<std::string> names(std::begin(pool), std::end(pool));
  std::shuffle(names.begin(), names.end(), rng);
  int star = static_cast<int>(rng() % 3);
  if (star == 1) a.star = StarMode::none;
  if (star == 2) a.star = StarMode::automatic;
  for (std::size_t k = 0; k < n; ++k) {
    Annotation ann = Annotation::none;
    if (star != 1) {
      auto r = rng() % 4;
      if (r == 0) ann = Annotation::selfadjoint;
      if (r == 1) ann = Annotation::star_pair;
    }
    a.generators.push_back({names[k], ann});
  }
  Presentation sk = parse_detail::skeleton(a);
  if (rng() % 2) {
    std::vector<std::string> order;
    for (Letter l = 0; l < sk.letter_count(); ++l) order.push_back(sk.letter_name(l));
    std::shuffle(order.begin(), order.end(), rng);
    a.order = order;
  }
  std::size_t rels = rng() % 4;
  for (std::size_t k = 0; k < rels; ++k) {
    FreeElement f = random_element(rng, sk.letter_count(), 3, 4);
    a.relations.push_back(parse_detail::to_poly(sk, f));
  }
  return a;
}

}  // namespace

TEST(Parser, WeylAlgebra) {
  auto f = parse("algebra A { generators: x, y; relations: x*y - y*x - x; }");
  ASSERT_EQ(f.algebras.size(), 1u);
  Presentation p = build_presentation(f.algebras[0]);
  EXPECT_EQ(p.name(), "A");
  EXPECT_FALSE(p.is_star());
  ASSERT_EQ(p.relators().size(), 1u);
  EXPECT_EQ(p.relators()[0], w({0, 1}) - w({1, 0}) - FreeElement::letter(0));
}

TEST(Parser, EmptyRelationsGiveFreeAlgebra) {
  auto f = parse("algebra F { generators: x, y; relations: ; }");
  EXPECT_TRUE(build_presentation(f.algebras[0]).relators().empty());
  auto g = parse("algebra G { generators: x; }");
  EXPECT_TRUE(build_presentation(g.algebras[0]).relators().empty());
}

TEST(Parser, ComplexTimesStarred) {
  auto f = parse("algebra S { generators: x; star: auto; relations: (1/2 + 1/2 i)*x' - x; }");
  Presentation p = build_presentation(f.algebras[0]);
  ASSERT_TRUE(p.is_star());
  Scalar c = Scalar::rational(1, 2) + Scalar::rational(1, 2) * Scalar::i();
  EXPECT_EQ(p.relators()[0], FreeElement::letter(1) * c - FreeElement::letter(0));
}

TEST(Parser, ElementSyntax) {
  auto f = parse("algebra S { generators: x, s selfadjoint; star: auto; }");
  Presentation p = build_presentation(f.algebras[0]);
  EXPECT_EQ(p.letter_count(), 3u);
  EXPECT_EQ(parse_element(p, "x^2"), w({0, 0}));
  EXPECT_EQ(parse_element(p, "(x*s)'"), w({2, 1}));
  EXPECT_EQ(parse_element(p, "x/2 + 0.25*e"),
            FreeElement::letter(0) * Scalar::rational(1, 2) + FreeElement::scalar(Scalar::rational(1, 4)));
  EXPECT_EQ(parse_element(p, "i*s - -s"), FreeElement::letter(2) * (Scalar::i() + Scalar(1)));
  EXPECT_EQ(parse_element(p, "s'"), FreeElement::letter(2));
  EXPECT_EQ(parse_element(p, "010/04 + 0.050"), FreeElement::scalar(Scalar::rational(51, 20)));
  EXPECT_THROW(parse_element(p, "x/s"), Error);
}

TEST(Parser, OrderAndComments) {
  auto f = parse(
      "# two algebras\n"
      "algebra A { generators: x, y; order: y < x; relations: x*y - y*x; }  # trailing\n"
      "algebra B { generators: u; star: auto; order: u' < u; relations: u*u' - e; }\n");
  ASSERT_EQ(f.algebras.size(), 2u);
  Presentation a = build_presentation(*f.find("A"));
  EXPECT_EQ(a.order().rank(0), 1u);
  EXPECT_EQ(a.order().rank(1), 0u);
  Presentation b = build_presentation(*f.find("B"));
  EXPECT_EQ(b.order().rank(1), 0u);
  EXPECT_EQ(f.find("C"), nullptr);
}

TEST(Parser, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("algebra A { generators: x; relations: x*q; }"), Pos(1, 41));
  EXPECT_EQ(error_position("algebra A {\n  generators x;\n}"), Pos(2, 14));
  EXPECT_EQ(error_position("algebra A { generators: x; } $"), Pos(1, 30));
}

TEST(Parser, Rejections) {
  EXPECT_THROW(parse("algebra A { generators: x, x; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: x; } algebra A { generators: y; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: i; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: x; relations: x'; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: x selfadjoint; star: none; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: x, y; order: x; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: x; relations: x - x; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: x; relations: x/0; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: x; generators: y; }"), ParseError);
  EXPECT_THROW(parse("algebra A { generators: x; relations: x*; }"), ParseError);
}

TEST(Parser, PrintParseRoundTrip) {
  Rng rng(40);
  for (int t = 0; t < 100; ++t) {
    PresentationFile f;
    std::size_t count = 1 + rng() % 2;
    for (std::size_t k = 0; k < count; ++k) f.algebras.push_back(random_decl(rng, t * 10 + static_cast<int>(k)));
    std::string text = print(f);
    PresentationFile back = parse(text);
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(print(back), text);
  }
}

TEST(Parser, PresentationRoundTrip) {
  Presentation p("W", {{"x", GeneratorKind::star_pair}, {"s", GeneratorKind::self_adjoint}},
                 {w({0, 2}) - w({2, 0}) * Scalar::i()});
  Presentation q = build_presentation(parse(print(to_decl(p))).algebras[0]);
  EXPECT_EQ(q.relators(), p.relators());
  EXPECT_EQ(q.letter_count(), p.letter_count());
}
