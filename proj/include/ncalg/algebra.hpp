#pragma once

#include <string>

#include "ncalg/presentation.hpp"
#include "ncalg/rewriting.hpp"

namespace ncalg {

/// A presentation together with its completed rewrite system.
struct Algebra {
  Presentation presentation;
  RewriteSystem system;

  /// Trust-gated canonical form.
  FreeElement canonical(const FreeElement& f) const {
    presentation.check_letters(f);
    system.require_trusted(f.degree());
    return reduce(system, f);
  }

  bool equal(const FreeElement& a, const FreeElement& b) const { return canonical(a - b).is_zero(); }

  FreeElement star(const FreeElement& f) const { return presentation.star(f); }
  std::string render(const FreeElement& f) const { return presentation.render(f); }
  std::size_t letter_count() const { return presentation.letter_count(); }
};

inline Algebra complete_algebra(const Presentation& p, std::size_t degree_bound) {
  std::size_t bound = degree_bound;
  for (const auto& r : p.relators()) bound = std::max(bound, r.degree());
  return Algebra{p, complete(p.relators(), p.order(), bound)};
}

}  // namespace ncalg
