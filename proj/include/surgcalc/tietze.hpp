#pragma once

#include "surgcalc/presentation.hpp"

namespace surgcalc {

struct TietzeResult {
  GroupPresentation presentation;
  bool budget_exhausted = false;
  /// Image of each original generator as a word over the final generators
  /// (identity for survivors, expansion for eliminated ones). Applying it to
  /// any word over the original generators rewrites it into the final
  /// presentation; a word whose image freely reduces to the empty word is
  /// certified trivial.
  std::vector<Word> images;

  Word rewrite(const Word& w) const;
};

/// Deterministic Tietze simplification.
///
/// Moves, applied greedily (shortest relator first) until fixpoint or budget:
///   - free/cyclic reduction, trivial-relator and duplicate removal
///     (duplicates up to rotation and inversion);
///   - commutation-aware cancellation: x B x^-1 -> B when [x, y] is among the
///     other relators for every letter y of B;
///   - elimination of a generator occurring exactly once in some relator;
///   - relator shortening by a strict-majority cyclic subword of another
///     relator.
/// All moves preserve the group up to isomorphism; abelian invariants are
/// preserved exactly.
TietzeResult tietze_simplify(const GroupPresentation& p, std::size_t budget = 10000);

}  // namespace surgcalc
