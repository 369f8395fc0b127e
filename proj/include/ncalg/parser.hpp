#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/presentation.hpp"

namespace ncalg {

// ---------------------------------------------------------------------------
// abstract syntax

enum class Annotation { none, selfadjoint, star_pair };

struct GeneratorDecl {
  std::string name;
  Annotation annotation = Annotation::none;
  friend bool operator==(const GeneratorDecl&, const GeneratorDecl&) = default;
};

/// A symbol of a relation: generator name plus star flag (never set for self-adjoint generators).
struct Sym {
  std::string name;
  bool starred = false;
  friend auto operator<=>(const Sym&, const Sym&) = default;
};

/// Relations are stored expanded: monomial of symbols -> coefficient, no zero entries.
using Poly = std::map<std::vector<Sym>, Scalar>;

enum class StarMode { none, automatic };

struct AlgebraDecl {
  std::string name;
  std::vector<GeneratorDecl> generators;
  std::optional<StarMode> star;
  std::optional<std::vector<std::string>> order;  // letter names, ascending
  std::vector<Poly> relations;
  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct PresentationFile {
  std::vector<AlgebraDecl> algebras;
  friend bool operator==(const PresentationFile&, const PresentationFile&) = default;

  const AlgebraDecl* find(std::string_view name) const {
    for (const auto& a : algebras)
      if (a.name == name) return &a;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// lexer

namespace parse_detail {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1, column = 1;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
inline bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++pos) {
      if (src[pos] == '\n') { ++line; col = 1; }
      else ++col;
    }
  };
  while (pos < src.size()) {
    char c = src[pos];
    if (c == '#') {
      while (pos < src.size() && src[pos] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t start = pos;
    if (ident_start(c)) {
      std::size_t end = pos;
      while (end < src.size() && ident_char(src[end])) ++end;
      if (src.substr(pos, end - pos) == "star" && src.substr(end, 5) == "-pair") end += 5;
      t.kind = Tok::ident;
      t.text = std::string(src.substr(start, end - start));
      advance(end - pos);
    } else if (digit(c)) {
      std::size_t end = pos;
      while (end < src.size() && digit(src[end])) ++end;
      if (end + 1 < src.size() && src[end] == '.' && digit(src[end + 1])) {
        ++end;
        while (end < src.size() && digit(src[end])) ++end;
      } else if (end + 1 < src.size() && src[end] == '/' && digit(src[end + 1])) {
        ++end;
        while (end < src.size() && digit(src[end])) ++end;
      }
      t.kind = Tok::number;
      t.text = std::string(src.substr(start, end - start));
      advance(end - pos);
    } else if (std::string_view("{}:;,<+-*/^'()").find(c) != std::string_view::npos) {
      t.kind = Tok::punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

/// "3", "3/5" or "0.15" as an exact rational.
inline Scalar number_value(const Token& t) {
  const std::string& s = t.text;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class num(digits, 10), den(1);
    for (std::size_t k = dot + 1; k < s.size(); ++k) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  mpq_class q(s, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in " + s, t.line, t.column);
  q.canonicalize();
  return Scalar(q);
}

// expressions are kept as a tree until the alphabet is known

struct Expr {
  enum class Kind { number, name, unit, add, sub, neg, mul, div, pow, star } kind;
  Scalar value;
  std::string name;
  unsigned exponent = 0;
  std::unique_ptr<Expr> lhs, rhs;
  std::size_t line = 0, column = 0;
};
using ExprPtr = std::unique_ptr<Expr>;

inline ExprPtr make_expr(Expr::Kind k, const Token& at) {
  auto e = std::make_unique<Expr>();
  e->kind = k;
  e->line = at.line;
  e->column = at.column;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  PresentationFile file() {
    PresentationFile f;
    std::set<std::string> names;
    while (peek().kind != Tok::end) {
      const Token& at = peek();
      AlgebraDecl a = algebra();
      if (!names.insert(a.name).second) throw ParseError("duplicate algebra '" + a.name + "'", at.line, at.column);
      f.algebras.push_back(std::move(a));
    }
    return f;
  }

  ExprPtr lone_expression() {
    ExprPtr e = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().line, peek().column); }
  bool is_punct(const char* p) const { return peek().kind == Tok::punct && peek().text == p; }
  bool is_ident(const char* p) const { return peek().kind == Tok::ident && peek().text == p; }
  void expect_punct(const char* p) {
    if (!is_punct(p)) fail(std::string("expected '") + p + "'" + found());
    next();
  }
  std::string found() const {
    return peek().kind == Tok::end ? ", found end of input" : ", found '" + peek().text + "'";
  }
  std::string identifier(const char* what) {
    if (peek().kind != Tok::ident) fail(std::string("expected ") + what + found());
    return next().text;
  }

  AlgebraDecl algebra() {
    if (!is_ident("algebra")) fail("expected 'algebra'" + found());
    next();
    AlgebraDecl a;
    starts_.push_back(peek());
    a.name = identifier("algebra name");
    expect_punct("{");
    std::set<std::string> seen;
    std::vector<std::pair<ExprPtr, Token>> rels;
    while (!is_punct("}")) {
      if (peek().kind == Tok::end) fail("unterminated algebra block");
      Token key = peek();
      std::string section = identifier("section name");
      if (!seen.insert(section).second) throw ParseError("duplicate section '" + section + "'", key.line, key.column);
      expect_punct(":");
      if (section == "generators") {
        generators(a, key);
      } else if (section == "star") {
        std::string mode = identifier("'auto' or 'none'");
        if (mode == "auto") a.star = StarMode::automatic;
        else if (mode == "none") a.star = StarMode::none;
        else throw ParseError("star mode must be 'auto' or 'none'", key.line, key.column);
      } else if (section == "order") {
        std::vector<std::string> names{symbol_name()};
        while (is_punct("<")) {
          next();
          names.push_back(symbol_name());
        }
        a.order = std::move(names);
      } else if (section == "relations") {
        if (!is_punct(";")) {
          Token at = peek();
          rels.emplace_back(expr(), at);
          while (is_punct(",")) {
            next();
            at = peek();
            rels.emplace_back(expr(), at);
          }
        }
      } else {
        throw ParseError("unknown section '" + section + "'", key.line, key.column);
      }
      expect_punct(";");
    }
    next();
    pending_.emplace_back(std::move(rels));
    return a;
  }

  void generators(AlgebraDecl& a, const Token& key) {
    std::set<std::string> names;
    do {
      if (!a.generators.empty()) next();
      Token at = peek();
      GeneratorDecl g{identifier("generator name")};
      if (g.name == "i" || g.name == "e") throw ParseError("'" + g.name + "' is reserved", at.line, at.column);
      if (is_ident("selfadjoint")) { next(); g.annotation = Annotation::selfadjoint; }
      else if (is_ident("star-pair")) { next(); g.annotation = Annotation::star_pair; }
      if (!names.insert(g.name).second) throw ParseError("duplicate generator '" + g.name + "'", at.line, at.column);
      a.generators.push_back(std::move(g));
    } while (is_punct(","));
    (void)key;
  }

  std::string symbol_name() {
    std::string n = identifier("symbol");
    while (is_punct("'")) {
      next();
      n += "'";
    }
    return n;
  }

  ExprPtr expr() {
    ExprPtr lhs;
    if (is_punct("-") || is_punct("+")) {
      const Token& op = next();
      ExprPtr t = term();
      if (op.text == "-") {
        lhs = make_expr(Expr::Kind::neg, op);
        lhs->lhs = std::move(t);
      } else {
        lhs = std::move(t);
      }
    } else {
      lhs = term();
    }
    while (is_punct("+") || is_punct("-")) {
      const Token& op = next();
      ExprPtr e = make_expr(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op);
      e->lhs = std::move(lhs);
      e->rhs = term();
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is_punct("*") || is_punct("/")) {
      const Token& op = next();
      ExprPtr e = make_expr(op.text == "*" ? Expr::Kind::mul : Expr::Kind::div, op);
      e->lhs = std::move(lhs);
      e->rhs = unary();
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is_punct("-")) {
      const Token& op = next();
      ExprPtr e = make_expr(Expr::Kind::neg, op);
      e->lhs = unary();
      return e;
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    for (;;) {
      if (is_punct("^")) {
        const Token& op = next();
        if (peek().kind != Tok::number || peek().text.find_first_not_of("0123456789") != std::string::npos)
          fail("exponent must be a non-negative integer" + found());
        unsigned long ex = std::stoul(next().text);
        if (ex > 4096) throw ParseError("exponent too large", op.line, op.column);
        ExprPtr p = make_expr(Expr::Kind::pow, op);
        p->exponent = static_cast<unsigned>(ex);
        p->lhs = std::move(e);
        e = std::move(p);
      } else if (is_punct("'")) {
        const Token& op = next();
        ExprPtr s = make_expr(Expr::Kind::star, op);
        s->lhs = std::move(e);
        e = std::move(s);
      } else {
        return e;
      }
    }
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      ExprPtr e = make_expr(Expr::Kind::number, t);
      e->value = number_value(t);
      if (is_ident("i")) {
        next();
        e->value = e->value * Scalar::i();
      }
      return e;
    }
    if (t.kind == Tok::ident) {
      next();
      if (t.text == "i") {
        ExprPtr e = make_expr(Expr::Kind::number, t);
        e->value = Scalar::i();
        return e;
      }
      if (t.text == "e") return make_expr(Expr::Kind::unit, t);
      ExprPtr e = make_expr(Expr::Kind::name, t);
      e->name = t.text;
      return e;
    }
    if (is_punct("(")) {
      next();
      ExprPtr e = expr();
      expect_punct(")");
      return e;
    }
    fail("expected an expression" + found());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;

 public:
  std::vector<std::vector<std::pair<ExprPtr, Token>>> pending_;
  std::vector<Token> starts_;
};

inline FreeElement power(const FreeElement& f, unsigned n) {
  FreeElement out = FreeElement::one();
  for (unsigned k = 0; k < n; ++k) out = out * f;
  return out;
}

inline FreeElement evaluate(const Expr& e, const Presentation& p) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return FreeElement::scalar(e.value);
    case K::unit: return FreeElement::one();
    case K::name: {
      auto l = p.find_letter(e.name);
      if (!l) throw ParseError("unknown generator '" + e.name + "'", e.line, e.column);
      return FreeElement::letter(*l);
    }
    case K::add: return evaluate(*e.lhs, p) + evaluate(*e.rhs, p);
    case K::sub: return evaluate(*e.lhs, p) - evaluate(*e.rhs, p);
    case K::neg: return -evaluate(*e.lhs, p);
    case K::mul: return evaluate(*e.lhs, p) * evaluate(*e.rhs, p);
    case K::div: {
      FreeElement d = evaluate(*e.rhs, p);
      auto s = d.scalar_value();
      if (!d.is_scalar() || !s || s->is_zero())
        throw ParseError("divisor must be a nonzero scalar", e.line, e.column);
      return evaluate(*e.lhs, p) * s->inverse();
    }
    case K::pow: return power(evaluate(*e.lhs, p), e.exponent);
    case K::star:
      if (!p.is_star()) throw ParseError("'" + p.name() + "' has no involution", e.line, e.column);
      return p.star(evaluate(*e.lhs, p));
  }
  return {};
}

/// Presentation with the declared alphabet, star mode and order but no relators.
inline Presentation skeleton(const AlgebraDecl& a) {
  bool annotated = false;
  for (const auto& g : a.generators) annotated = annotated || g.annotation != Annotation::none;
  if (annotated && a.star == StarMode::none)
    throw ConfigError(a.name + ": generator annotations need 'star: auto'");
  bool star = a.star == StarMode::automatic || annotated;
  std::vector<Generator> gens;
  for (const auto& g : a.generators) {
    GeneratorKind k = GeneratorKind::plain;
    if (star) k = g.annotation == Annotation::selfadjoint ? GeneratorKind::self_adjoint : GeneratorKind::star_pair;
    gens.push_back({g.name, k});
  }
  Presentation base(a.name, gens, {});
  if (!a.order) return base;
  std::vector<std::size_t> rank(base.letter_count(), base.letter_count());
  std::size_t r = 0;
  for (const auto& n : *a.order) {
    auto l = base.find_letter(n);
    if (!l) throw ConfigError(a.name + ": order names unknown symbol '" + n + "'");
    if (rank[*l] != base.letter_count()) throw ConfigError(a.name + ": symbol '" + n + "' ranked twice");
    rank[*l] = r++;
  }
  if (r != base.letter_count()) {
    for (Letter l = 0; l < base.letter_count(); ++l)
      if (rank[l] == base.letter_count())
        throw ConfigError(a.name + ": order does not rank '" + base.letter_name(l) + "'");
  }
  return Presentation(a.name, gens, {}, TermOrder(std::move(rank)));
}

inline Poly to_poly(const Presentation& p, const FreeElement& f) {
  Poly out;
  for (const auto& [w, c] : f) {
    std::vector<Sym> m;
    for (Letter l : w) {
      const auto& info = p.letters()[l];
      m.push_back({p.generators()[info.generator].name, info.starred});
    }
    out.emplace(std::move(m), c);
  }
  return out;
}

inline FreeElement from_poly(const Presentation& p, const Poly& poly) {
  FreeElement out;
  for (const auto& [m, c] : poly) {
    std::vector<Letter> letters;
    for (const auto& s : m) {
      auto g = p.find_generator(s.name);
      if (!g) throw ConfigError(p.name() + ": unknown generator '" + s.name + "'");
      if (s.starred && p.generators()[*g].kind != GeneratorKind::star_pair)
        throw ConfigError(p.name() + ": '" + s.name + "' has no starred partner");
      letters.push_back(p.letter_of(*g, s.starred));
    }
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

}  // namespace parse_detail

/// Parses a presentation file. Relations are elaborated against each algebra's alphabet.
inline PresentationFile parse(std::string_view text) {
  parse_detail::Parser parser(text);
  PresentationFile f = parser.file();
  for (std::size_t k = 0; k < f.algebras.size(); ++k) {
    AlgebraDecl& a = f.algebras[k];
    Presentation sk = [&] {
      try {
        return parse_detail::skeleton(a);
      } catch (const ConfigError& e) {
        const auto& at = parser.starts_[k];
        throw ParseError(e.what(), at.line, at.column);
      }
    }();
    for (auto& [expr, at] : parser.pending_[k]) {
      FreeElement v = parse_detail::evaluate(*expr, sk);
      if (v.is_zero()) throw ParseError("relation is identically zero", at.line, at.column);
      a.relations.push_back(parse_detail::to_poly(sk, v));
    }
  }
  return f;
}

inline Presentation build_presentation(const AlgebraDecl& a) {
  Presentation sk = parse_detail::skeleton(a);
  std::vector<FreeElement> rels;
  for (const auto& r : a.relations) rels.push_back(parse_detail::from_poly(sk, r));
  return Presentation(a.name, sk.generators(), std::move(rels), sk.order());
}

/// An element written in the letters of `p`.
inline FreeElement parse_element(const Presentation& p, std::string_view text) {
  parse_detail::Parser parser(text);
  auto e = parser.lone_expression();
  return parse_detail::evaluate(*e, p);
}

inline std::string print_poly(const Poly& poly) {
  if (poly.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : poly) {
    bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    Scalar mag = negative ? -c : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) mono += '*';
      mono += m[k].name + (m[k].starred ? "'" : "");
    }
    if (m.empty())
      out += mag.to_string();
    else
      out += mag.is_one() ? mono : mag.to_string() + "*" + mono;
  }
  return out;
}

inline std::string print(const AlgebraDecl& a) {
  std::string out = "algebra " + a.name + " {\n  generators: ";
  for (std::size_t k = 0; k < a.generators.size(); ++k) {
    if (k) out += ", ";
    out += a.generators[k].name;
    if (a.generators[k].annotation == Annotation::selfadjoint) out += " selfadjoint";
    if (a.generators[k].annotation == Annotation::star_pair) out += " star-pair";
  }
  out += ";\n";
  if (a.star) out += std::string("  star: ") + (*a.star == StarMode::automatic ? "auto" : "none") + ";\n";
  if (a.order) {
    out += "  order: ";
    for (std::size_t k = 0; k < a.order->size(); ++k) out += (k ? " < " : "") + (*a.order)[k];
    out += ";\n";
  }
  out += "  relations:";
  for (std::size_t k = 0; k < a.relations.size(); ++k) out += (k ? ",\n    " : " ") + print_poly(a.relations[k]);
  out += ";\n}\n";
  return out;
}

inline std::string print(const PresentationFile& f) {
  std::string out;
  for (std::size_t k = 0; k < f.algebras.size(); ++k) out += (k ? "\n" : "") + print(f.algebras[k]);
  return out;
}

/// Declaration describing `p`; fails when a letter name is not expressible in the grammar.
inline AlgebraDecl to_decl(const Presentation& p) {
  AlgebraDecl a;
  a.name = p.name();
  auto valid = [](const std::string& s) {
    if (s.empty() || !parse_detail::ident_start(s[0]) || s == "i" || s == "e") return false;
    return std::all_of(s.begin(), s.end(), parse_detail::ident_char);
  };
  if (!valid(a.name)) a.name = "P";
  if (p.is_star() && p.star_suffix() != "'")
    throw ConfigError("'" + p.name() + "' uses the partner suffix '" + p.star_suffix() + "', not expressible");
  for (const auto& g : p.generators()) {
    if (!valid(g.name)) throw ConfigError("generator name '" + g.name + "' is not an identifier");
    Annotation ann = g.kind == GeneratorKind::self_adjoint ? Annotation::selfadjoint : Annotation::none;
    a.generators.push_back({g.name, ann});
  }
  if (p.is_star()) a.star = StarMode::automatic;
  if (!p.order().is_identity()) {
    std::vector<std::string> names(p.letter_count());
    for (Letter l = 0; l < p.letter_count(); ++l) names[p.order().rank(l)] = p.letter_name(l);
    a.order = std::move(names);
  }
  for (const auto& r : p.relators()) a.relations.push_back(parse_detail::to_poly(p, r));
  return a;
}

}  // namespace ncalg
