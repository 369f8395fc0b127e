#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ncalg/algebra.hpp"

namespace ncalg {

// Checkers for the positivity results on *-doubles. Each one asserts the
// theorem's conclusion on the instance it evaluates and throws
// TheoremViolation if the engine ever produces a counterexample.

struct SquareSumReport {
  bool is_zero = true;
  std::optional<std::size_t> degree;
  std::optional<Word> leading_word;
  FreeElement canonical;
};

namespace detail {

inline std::size_t canonical_degree(const Algebra& alg, const FreeElement& f) {
  return alg.canonical(f).degree();
}

}  // namespace detail

/// Canonical form of sum_i star(x_i) * x_i.
inline SquareSumReport sum_of_star_squares(const Algebra& alg, std::span<const FreeElement> xs) {
  std::size_t d = 0;
  bool any_nonzero = false;
  for (const auto& x : xs) {
    FreeElement cx = alg.canonical(x);
    if (cx.is_zero()) continue;
    any_nonzero = true;
    d = std::max(d, cx.degree());
  }
  alg.system.require_trusted(2 * d);

  FreeElement sum;
  for (const auto& x : xs) {
    FreeElement cx = alg.canonical(x);
    sum += alg.star(cx) * cx;
  }
  SquareSumReport rep;
  rep.canonical = alg.canonical(sum);
  rep.is_zero = rep.canonical.is_zero();
  if (!rep.is_zero) {
    rep.degree = rep.canonical.degree();
    rep.leading_word = leading(alg.system.order(), rep.canonical).first;
  }
  if (any_nonzero && (rep.is_zero || *rep.degree != 2 * d))
    throw TheoremViolation("sum of star squares has wrong degree; orderedness contract broken");
  if (!any_nonzero && !rep.is_zero) throw TheoremViolation("star squares of zeros are nonzero");
  return rep;
}

inline SquareSumReport sum_of_star_squares(const Algebra& alg, const std::vector<FreeElement>& xs) {
  return sum_of_star_squares(alg, std::span<const FreeElement>(xs));
}

/// Whether sum_j star(x_j) * x_j equals the unit.
inline bool boundedness_test(const Algebra& alg, std::span<const FreeElement> xs) {
  auto rep = sum_of_star_squares(alg, xs);
  bool is_unit = rep.canonical == FreeElement::one();
  if (is_unit) {
    mpq_class total = 0;
    for (const auto& x : xs) {
      auto s = alg.canonical(x).scalar_value();
      if (!s) throw TheoremViolation("non-scalar algebraically bounded element found");
      total += s->norm2();
    }
    if (total != 1) throw TheoremViolation("scalar moduli do not sum to one");
  }
  return is_unit;
}

inline bool boundedness_test(const Algebra& alg, const std::vector<FreeElement>& xs) {
  return boundedness_test(alg, std::span<const FreeElement>(xs));
}

/// For x in the first factor with star(x)x = star(y)y, the unit-modulus lambda with y = lambda*x.
inline std::optional<Scalar> modulus_match(const Algebra& alg, const FreeElement& x, const FreeElement& y) {
  FreeElement cx = alg.canonical(x);
  if (cx.is_scalar()) throw PreconditionError("modulus_match needs a non-scalar x");
  for (const auto& [w, c] : cx)
    for (Letter l : w)
      if (alg.presentation.letters()[l].starred)
        throw PreconditionError("x must lie in the first factor (no starred letters)");
  FreeElement cy = alg.canonical(y);
  alg.system.require_trusted(2 * std::max(cx.degree(), cy.degree()));
  FreeElement diff = alg.star(cx) * cx - alg.star(cy) * cy;
  if (!alg.canonical(diff).is_zero()) return std::nullopt;

  const auto& [w0, c0] = *cx.begin();
  Scalar lambda = cy.coefficient(w0) / c0;
  if (cy != cx * lambda) throw TheoremViolation("equal moduli without proportionality");
  if (lambda.norm2() != 1) throw TheoremViolation("proportionality constant is not unit-modulus");
  return lambda;
}

enum class IsometryKind { unitary, projection, partial_isometry, none };

inline const char* to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::unitary: return "unitary";
    case IsometryKind::projection: return "projection";
    case IsometryKind::partial_isometry: return "partial_isometry";
    case IsometryKind::none: return "none";
  }
  return "none";
}

struct IsometryReport {
  IsometryKind kind = IsometryKind::none;
  bool unitary = false;
  bool projection = false;
  bool partial_isometry = false;
};

inline IsometryReport isometry_classify(const Algebra& alg, const FreeElement& y) {
  FreeElement cy = alg.canonical(y);
  alg.system.require_trusted(3 * cy.degree());
  FreeElement ys = alg.star(cy);
  FreeElement one = FreeElement::one();
  IsometryReport rep;
  rep.unitary = alg.canonical(ys * cy) == one && alg.canonical(cy * ys) == one;
  rep.projection = alg.canonical(cy * cy) == cy && alg.canonical(ys) == cy;
  rep.partial_isometry = alg.canonical(cy * ys * cy) == cy;
  if (rep.unitary)
    rep.kind = IsometryKind::unitary;
  else if (rep.projection)
    rep.kind = IsometryKind::projection;
  else if (rep.partial_isometry)
    rep.kind = IsometryKind::partial_isometry;

  if (rep.kind != IsometryKind::none) {
    auto s = cy.scalar_value();
    if (!s) throw TheoremViolation("non-scalar " + std::string(to_string(rep.kind)) + " found");
    mpq_class m = s->norm2();
    if (rep.unitary && m != 1) throw TheoremViolation("unitary scalar without unit modulus");
    if (rep.projection && !(s->is_zero() || s->is_one())) throw TheoremViolation("projection scalar not 0 or 1");
    if (rep.partial_isometry && !(m == 0 || m == 1))
      throw TheoremViolation("partial isometry scalar of modulus other than 0 or 1");
  }
  return rep;
}

}  // namespace ncalg
