#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include <cstdlib>

#include "surgcalc/catalog.hpp"
#include "surgcalc/cli.hpp"

using surgcalc::cli::run;

namespace {
struct Result {
  int code;
  nlohmann::json payload;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "--json");
  auto rep = run(args, out, err);
  Result r{rep.exit_code, {}, err.str()};
  if (!rep.json.empty()) r.payload = nlohmann::json::parse(rep.json);
  return r;
}
}  // namespace

TEST_CASE("enumerate") {
  Result r = invoke({"enumerate", "<x|x^5>"});
  CHECK(r.code == 0);
  CHECK(r.payload["order"] == 5);
  Result big = invoke({"enumerate", "<x|>", "--max-cosets", "40"});
  CHECK(big.payload["budget_exceeded"] == true);
}

TEST_CASE("monodromy") {
  Result ok = invoke({"monodromy", "verify", "(a b)^6"});
  CHECK(ok.code == 0);
  CHECK(ok.payload["identity"] == true);
  CHECK(ok.payload["twist_count"] == 12);

  Result bad = invoke({"monodromy", "verify", "a"});
  CHECK(bad.code == 2);

  Result fib = invoke({"monodromy", "fiber", "(a^5)^(a b)"});
  CHECK(fib.payload["fiber"] == "necklace");
  CHECK(fib.payload["k"] == 5);
}

TEST_CASE("construct emits a dossier with stable claim ids") {
  Result r = invoke({"construct", "rbd", "z5_c2"});
  CHECK(r.code == 0);
  CHECK(r.payload["block"]["e"] == 10);
  CHECK(r.payload["block"]["sigma"] == -6);
  bool saw_order = false;
  for (const auto& c : r.payload["claims"])
    if (c["id"] == "rbd.z5_c2.pi1_order") saw_order = true;
  CHECK(saw_order);
}

TEST_CASE("errors use exit code 1") {
  CHECK(invoke({"abelianize", "<x | y>"}).code == 1);
  CHECK(invoke({"nosuch"}).code == 1);
  CHECK(invoke({"construct", "rbd", "zz"}).code == 1);
}

TEST_CASE("catalog commands") {
  Result list = invoke({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(list.payload["blocks"].size() >= 7);
  Result check = invoke({"catalog", "check"});
  CHECK(check.code == 0);
}

TEST_CASE("json payload round-trips through the parser") {
  Result r = invoke({"abelianize", "<x,y|x^2,y^3>"});
  CHECK(r.payload["free_rank"] == 0);
  CHECK(r.payload["torsion"][0] == 6);
  // same invocation, same bytes
  Result r2 = invoke({"abelianize", "<x,y|x^2,y^3>"});
  CHECK(r.payload == r2.payload);
}

TEST_CASE("failing claims surface as exit code 2") {
  // a doctored catalog makes a recipe claim fail without raising an error
  surgcalc::Catalog cat = surgcalc::builtin_catalog();
  for (auto& b : cat.blocks)
    if (b.label == "E(2)") b.e = 25;
  std::string path = "/tmp/surgcalc_doctored_catalog.json";
  surgcalc::save_catalog_file(cat, path);
  std::ostringstream out, err;
  auto rep = run({"--json", "--catalog", path, "construct", "rbd", "z2_c3_b3"},
                 out, err);
  CHECK(rep.exit_code == 2);
  auto j = nlohmann::json::parse(rep.json);
  bool saw_fail = false;
  for (const auto& c : j["claims"])
    if (c["status"] == "fail") saw_fail = true;
  CHECK(saw_fail);
}

TEST_CASE("catalog path from the environment") {
  surgcalc::Catalog cat = surgcalc::builtin_catalog();
  cat.blocks.erase(cat.blocks.begin());  // drop E(1): recognizably different
  std::string path = "/tmp/surgcalc_env_catalog.json";
  surgcalc::save_catalog_file(cat, path);
  setenv("SURGCALC_CATALOG", path.c_str(), 1);
  Result r = invoke({"catalog", "list"});
  unsetenv("SURGCALC_CATALOG");
  REQUIRE(r.code == 0);
  CHECK(r.payload["blocks"].size() == surgcalc::builtin_catalog().blocks.size() - 1);
}
