#include <doctest.h>

#include <fstream>
#include <sstream>

#include "surgcalc/catalog.hpp"
#include "surgcalc/constructions.hpp"

using namespace surgcalc;

TEST_CASE("builtin catalog passes its own checks") {
  CheckReport rep = check_catalog(builtin_catalog());
  for (const auto& item : rep.items) {
    INFO(item.name, " ", item.detail);
    CHECK(item.pass);
  }
}

TEST_CASE("shipped file round-trips byte-exactly") {
  std::ifstream in(SURGCALC_CATALOG_FILE);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  Catalog c = catalog_from_json(bytes);
  CHECK(catalog_to_json(c) == bytes);
  CHECK(catalog_to_json(builtin_catalog()) == bytes);
}

TEST_CASE("intersection pairing") {
  HClass h{{1, -1, 0, 0, 0, 0, -1, -1, 0, 0}};
  CHECK(h.square() == -2);
  HClass e3{{0, 0, 0, 1, 0, 0, 0, 0, 0, 0}};
  CHECK(e3.square() == -1);
  CHECK(h.dot(e3) == 0);
}

TEST_CASE("catalog lookups") {
  const Catalog& cat = builtin_catalog();
  CHECK(cat.has("E(1)"));
  CHECK_FALSE(cat.has("E(7)"));
  CHECK_THROWS_AS(cat.at("nope"), Error);
  CHECK_THROWS_AS(cat.at("E(1)").fibration("nope"), Error);
  ManifoldBlock e1 = cat.at("E(1)").materialize();
  CHECK(e1.e == 12);
  CHECK(e1.b_plus() == 1);
}

TEST_CASE("a doctored catalog fails the self-check") {
  Catalog cat = builtin_catalog();
  for (auto& b : cat.blocks)
    if (b.label == "E(1)") b.classes[0].c[0] = 2;  // break a component square
  CHECK_FALSE(check_catalog(cat).all_pass());
}

TEST_CASE("recipes check certificate feasibility against the catalog") {
  Catalog cat = builtin_catalog();
  for (auto& b : cat.blocks)
    if (b.label == "E(1)")
      for (auto& f : b.fibrations)
        if (f.name == "generic") f.fishtails_class_a = 1;
  CHECK_THROWS_AS(build_rbd_example("z4_c2", cat), Error);
}
