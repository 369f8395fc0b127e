#pragma once

#include <map>

#include "ncalg/element.hpp"

namespace ncalg {

/// Incremental Gaussian elimination over Gaussian rationals on sparse vectors.
///
/// Vectors are FreeElements used as finitely supported coordinate maps; the
/// coordinate keys are arbitrary words.
class SparseEliminator {
 public:
  /// Adds v; returns true if it was independent of the vectors seen so far.
  bool insert(FreeElement v) {
    while (!v.is_zero()) {
      const auto& [lead, coef] = *v.terms().rbegin();
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        Word key = lead;
        v *= coef.inverse();
        pivots_.emplace(std::move(key), std::move(v));
        return true;
      }
      Scalar c = coef;
      v -= it->second * c;
    }
    return false;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<Word, FreeElement, ShortlexLess> pivots_;
};

}  // namespace ncalg
