#pragma once

#include "surgcalc/presentation.hpp"

namespace surgcalc {

/// Plan for resolving the self-intersections of immersed relator curves on a
/// genus-k surface by bridge moves. Each relator gets an odd number of
/// bridges (one extra if the chord count is even); bridge handle indices
/// partition k+1..k' in relator order.
struct BridgePlan {
  struct PerRelator {
    long long intersection_count = 0;
    long long bridge_count = 0;  // odd
    long long first_bridge = 0;  // handle index g_i
    bool parity_fix = false;
  };

  long long base_genus = 0;   // k
  long long total_genus = 0;  // k'
  std::vector<PerRelator> relators;

  /// c(g) = min_i { g - g_i + 1 | g - g_i >= 0 } for k+1 <= g <= k'.
  long long c_of(long long g) const;
  /// Index (1-based) of the relator whose bridge block contains handle g.
  std::size_t relator_of(long long g) const;
};

/// Chord model for the self-intersection count of a relator curve: every
/// generator visited r times forces r-1 crossings inside its handle, so
/// intersection-count(w) = sum over generators of max(0, occurrences - 1).
/// Over-approximation is sound here: extra bridges only add killed
/// generators downstream.
long long chord_intersections(const Word& w, std::size_t ngens);

BridgePlan bridge_moves(const std::vector<Word>& relators, long long k);

}  // namespace surgcalc
