#pragma once

#include <cstdint>
#include <vector>

#include "surgcalc/int_matrix.hpp"
#include "surgcalc/presentation.hpp"

namespace surgcalc {

struct EnumBudget {
  std::size_t max_cosets = 200000;
  std::size_t max_definitions = 2000000;
};

/// Closed coset table of a finite enumeration: row per coset, 2k columns
/// (generator g acts by column 2g, its inverse by column 2g+1). Coset 0 is
/// the trivial-subgroup coset.
struct CosetTable {
  std::size_t ngens = 0;
  std::vector<std::vector<std::uint32_t>> row;

  std::size_t size() const { return row.size(); }
  std::uint32_t act(std::uint32_t c, int letter) const {
    int g = letter > 0 ? letter - 1 : -letter - 1;
    return row[c][2 * g + (letter > 0 ? 0 : 1)];
  }
  std::uint32_t trace(std::uint32_t c, const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) c = act(c, w.letter_at(i));
    return c;
  }
};

struct EnumOutcome {
  enum Tag { Finite, BudgetExceeded } tag = BudgetExceeded;
  std::size_t order = 0;   // valid when Finite
  CosetTable table;        // valid when Finite

  bool finite() const { return tag == Finite; }
};

/// HLT-style Todd-Coxeter enumeration over the trivial subgroup.
/// Finite(n) certifies the group order is exactly n; BudgetExceeded is not
/// evidence of infiniteness. Deterministic: new cosets are defined at the
/// first undefined table entry in row-major scan order.
EnumOutcome enumerate_cosets(const GroupPresentation& p,
                             const EnumBudget& budget = EnumBudget{});

/// Certifies pi_1 = Z_p x Z_q: enumeration must close with order p*q and the
/// abelian invariants must match the invariant-factor form of (p, q). A
/// finite group of order pq whose abelianization also has order pq is
/// abelian, so together these checks pin the isomorphism type.
bool certify_product_of_cyclics(const GroupPresentation& p, long long zp,
                                long long zq, const EnumBudget& budget = EnumBudget{});

/// Invariant-factor form of Z_p x Z_q (1-factors dropped).
std::vector<Int> cyclic_product_invariants(long long p, long long q);

}  // namespace surgcalc
