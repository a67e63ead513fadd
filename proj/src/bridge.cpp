#include "surgcalc/bridge.hpp"

namespace surgcalc {

long long BridgePlan::c_of(long long g) const {
  long long best = -1;
  for (const auto& r : relators) {
    if (g - r.first_bridge >= 0) {
      long long v = g - r.first_bridge + 1;
      if (best < 0 || v < best) best = v;
    }
  }
  if (best < 0) throw Error("c(g) undefined: no bridge block at or before g");
  return best;
}

std::size_t BridgePlan::relator_of(long long g) const {
  for (std::size_t i = 0; i < relators.size(); ++i) {
    long long lo = relators[i].first_bridge;
    long long hi = lo + relators[i].bridge_count - 1;
    if (g >= lo && g <= hi) return i;
  }
  throw Error("handle " + std::to_string(g) + " is not a bridge handle");
}

long long chord_intersections(const Word& w, std::size_t ngens) {
  long long total = 0;
  for (std::size_t g = 0; g < ngens; ++g) {
    long long occ = w.occurrences(static_cast<int>(g));
    if (occ > 1) total += occ - 1;
  }
  return total;
}

BridgePlan bridge_moves(const std::vector<Word>& relators, long long k) {
  BridgePlan plan;
  plan.base_genus = k;
  long long next = k + 1;
  for (const Word& r : relators) {
    if (r.empty()) throw Error("bridge_moves: relators must be nonempty");
    BridgePlan::PerRelator pr;
    pr.intersection_count = chord_intersections(r, static_cast<std::size_t>(k));
    pr.bridge_count = pr.intersection_count;
    if (pr.bridge_count % 2 == 0) {
      pr.bridge_count += 1;
      pr.parity_fix = true;
    }
    pr.first_bridge = next;
    next += pr.bridge_count;
    plan.relators.push_back(pr);
  }
  plan.total_genus = next - 1;
  return plan;
}

}  // namespace surgcalc
