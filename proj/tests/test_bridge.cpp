#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "surgcalc/bridge.hpp"
#include "surgcalc/dsl.hpp"

using namespace surgcalc;

TEST_CASE("chord counts") {
  GroupPresentation f3 = parse_presentation("<b1,b2,b3|>");
  Word w = parse_word("b1 b2 b3 b2 b1", f3);
  CHECK(chord_intersections(w, 3) == 2);
  CHECK(chord_intersections(parse_word("b1", f3), 3) == 0);
}

TEST_CASE("bridge plan on a single relator") {
  GroupPresentation f3 = parse_presentation("<b1,b2,b3|>");
  BridgePlan plan = bridge_moves({parse_word("b1 b2 b3 b2 b1", f3)}, 3);
  REQUIRE(plan.relators.size() == 1);
  CHECK(plan.relators[0].intersection_count == 2);
  CHECK(plan.relators[0].bridge_count == 3);  // parity fix
  CHECK(plan.relators[0].parity_fix);
  CHECK(plan.relators[0].first_bridge == 4);
  CHECK(plan.total_genus == 6);
  CHECK(plan.c_of(4) == 1);
  CHECK(plan.c_of(5) == 2);
  CHECK(plan.c_of(6) == 3);
}

TEST_CASE("no repeats still gets one bridge") {
  GroupPresentation f1 = parse_presentation("<b1|>");
  BridgePlan plan = bridge_moves({parse_word("b1", f1)}, 1);
  CHECK(plan.relators[0].intersection_count == 0);
  CHECK(plan.relators[0].bridge_count == 1);
  CHECK(plan.relators[0].parity_fix);
}

TEST_CASE("second relator blocks start after the first") {
  GroupPresentation f2 = parse_presentation("<b1,b2|>");
  BridgePlan plan =
      bridge_moves({parse_word("b1 b1", f2), parse_word("b2 b2 b2", f2)}, 2);
  CHECK(plan.relators[0].first_bridge == 3);
  CHECK(plan.relators[1].first_bridge ==
        3 + plan.relators[0].bridge_count);
  // c(g) at a block start is 1
  CHECK(plan.c_of(plan.relators[1].first_bridge) == 1);
}

TEST_CASE("bridge counts are odd and c matches its formula") {
  std::mt19937 rng(43);
  for (int t = 0; t < 200; ++t) {
    GroupPresentation p = oracles::random_presentation(rng, 4, 0, 0);
    int k = static_cast<int>(p.generator_count());
    std::vector<Word> rels;
    int m = static_cast<int>(rng() % 3) + 1;
    for (int i = 0; i < m; ++i) {
      Word w = oracles::random_word(rng, k, 8);
      if (w.empty()) w = Word::letter(0);
      rels.push_back(w);
    }
    BridgePlan plan = bridge_moves(rels, k);
    for (const auto& r : plan.relators) CHECK(r.bridge_count % 2 == 1);
    for (long long g = k + 1; g <= plan.total_genus; ++g) {
      // recompute c(g) from the quoted definition
      long long best = -1;
      for (const auto& r : plan.relators)
        if (g - r.first_bridge >= 0)
          best = best < 0 ? g - r.first_bridge + 1
                          : std::min(best, g - r.first_bridge + 1);
      CHECK(plan.c_of(g) == best);
    }
  }
}
