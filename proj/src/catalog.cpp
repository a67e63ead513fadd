#include "surgcalc/catalog.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "surgcalc/dsl.hpp"

namespace surgcalc {

using ordered_json = nlohmann::ordered_json;

EmbeddedSurfaceData CatalogSurface::materialize() const {
  EmbeddedSurfaceData s;
  s.genus = genus;
  s.self_intersection = self_int;
  s.complement_pi1 = parse_presentation(complement_pi1);
  for (const std::string& w : images)
    s.surface_images.push_back(parse_word(w, s.complement_pi1));
  s.meridian = parse_word(meridian, s.complement_pi1);
  s.validate();
  return s;
}

LagrangianTorusData CatalogTorus::materialize() const {
  LagrangianTorusData t;
  t.complement_pi1 = parse_presentation(complement_pi1);
  t.lambda_parallel = parse_word(lambda, t.complement_pi1);
  t.meridian = parse_word(mu, t.complement_pi1);
  return t;
}

ManifoldBlock CatalogBlock::materialize() const {
  ManifoldBlock b;
  b.label = label;
  b.e = e;
  b.sigma = sigma;
  b.pi1 = parse_presentation(pi1);
  return b;
}

const CatalogFibration& CatalogBlock::fibration(const std::string& name) const {
  for (const auto& f : fibrations)
    if (f.name == name) return f;
  throw Error("block '" + label + "' has no fibration '" + name + "'");
}

const FibrationProfile& CatalogBlock::profile(const std::string& name) const {
  for (const auto& p : profiles)
    if (p.name == name) return p;
  throw Error("block '" + label + "' has no fibration profile '" + name + "'");
}

const CatalogBlock& Catalog::at(const std::string& label) const {
  for (const auto& b : blocks)
    if (b.label == label) return b;
  throw Error("catalog has no block '" + label + "'");
}

bool Catalog::has(const std::string& label) const {
  for (const auto& b : blocks)
    if (b.label == label) return true;
  return false;
}

namespace {

HClass cls(std::initializer_list<long long> v) {
  HClass h;
  int i = 0;
  for (long long x : v) h.c[i++] = x;
  return h;
}

Catalog make_builtin() {
  Catalog cat;

  {
    CatalogBlock b;
    b.label = "E(1)";
    b.e = 12;
    b.sigma = -8;
    b.pi1 = "<  |  >";
    b.surfaces.push_back({1, 0, "<  |  >", {"", ""}, ""});  // regular fiber
    // I5 + seven fishtails, pencil through two base points (sections E3..E9)
    b.classes = {
        cls({1, -1, 0, 0, 0, 0, -1, -1, 0, 0}),   // H-E1-E6-E7
        cls({1, 0, -1, 0, 0, 0, 0, 0, -1, -1}),   // H-E2-E8-E9
        cls({0, 0, 1, 0, 0, -1, 0, 0, 0, 0}),     // E2-E5
        cls({1, -1, -1, -1, 0, 0, 0, 0, 0, 0}),   // H-E1-E2-E3
        cls({0, 1, 0, 0, -1, 0, 0, 0, 0, 0}),     // E1-E4
        cls({0, 0, 0, 1, 0, 0, 0, 0, 0, 0}),      // E3
        cls({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}),      // E4
        cls({0, 0, 0, 0, 0, 1, 0, 0, 0, 0}),      // E5
        cls({0, 0, 0, 0, 0, 0, 1, 0, 0, 0}),      // E6
        cls({0, 0, 0, 0, 0, 0, 0, 1, 0, 0}),      // E7
        cls({0, 0, 0, 0, 0, 0, 0, 0, 1, 0}),      // E8
        cls({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),      // E9
        // I5 from a 5-fold tangency at a nodal cubic (sections E5..E9)
        cls({0, 1, -1, 0, 0, 0, 0, 0, 0, 0}),                 // E1-E2
        cls({0, 0, 1, -1, 0, 0, 0, 0, 0, 0}),                 // E2-E3
        cls({0, 0, 0, 1, -1, 0, 0, 0, 0, 0}),                 // E3-E4
        cls({0, 0, 0, 0, 1, -1, 0, 0, 0, 0}),                 // E4-E5
        cls({3, -2, -1, -1, -1, 0, -1, -1, -1, -1}),          // 3H-2E1-E2-E3-E4-E6..E9
        // I4 variant (4-fold tangency), sections E4..E9
        cls({3, -2, -1, -1, 0, -1, -1, -1, -1, -1}),          // 3H-2E1-E2-E3-E5..E9
        cls({0, 1, 0, 0, 0, 0, 0, 0, 0, 0}),                  // E1
        cls({0, 0, 1, 0, 0, 0, 0, 0, 0, 0}),                  // E2
    };
    b.fibrations.push_back({"i5_lines", {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9, 10, 11}, 7, 0});
    b.fibrations.push_back({"i5_tangent", {12, 13, 14, 15, 16}, {7, 8, 9, 10, 11}, 7, 0});
    b.fibrations.push_back({"i4_tangent", {12, 13, 14, 17}, {6, 7, 8, 9, 10, 11}, 8, 0});
    b.fibrations.push_back(
        {"generic", {}, {18, 19, 5, 6, 7, 8, 9, 10, 11}, 12, 6});
    cat.blocks.push_back(b);
  }
  {
    CatalogBlock b;
    b.label = "E(2)";
    b.e = 24;
    b.sigma = -16;
    b.pi1 = "<  |  >";
    b.surfaces.push_back({1, 0, "<  |  >", {"", ""}, ""});
    b.profiles.push_back({"2I6_4I2_4I1", 6, -2, 2, 4, 4, 0, 2});
    b.profiles.push_back({"generic24", 8, -2, 0, 0, 24, 12, 0});
    cat.blocks.push_back(b);
  }
  {
    CatalogBlock b;
    b.label = "T2xS2";
    b.e = 0;
    b.sigma = 0;
    b.pi1 = "< c, d | [c,d] >";
    cat.blocks.push_back(b);
  }
  {
    CatalogBlock b;
    b.label = "Sigma2xT2";
    b.e = 0;
    b.sigma = 0;
    b.pi1 =
        "< a1, b1, a2, b2, c, d | [a1,b1] [a2,b2], [c,d], [a1,c], [a1,d], [b1,c], "
        "[b1,d], [a2,c], [a2,d], [b2,c], [b2,d] >";
    cat.blocks.push_back(b);
  }
  {
    CatalogBlock b;
    b.label = "T4#2CP2bar";
    b.e = 2;
    b.sigma = -2;
    b.pi1 = "< a, b, c, d | [a,b], [a,c], [a,d], [b,c], [b,d], [c,d] >";
    // genus-2 surface from the resolved (x x T2) u (T2 x y), twice blown up;
    // the meridian dies on an exceptional dual sphere
    b.surfaces.push_back({2, 0, "< a, b, c, d |  >", {"a", "b", "c", "d"}, ""});
    b.tori.push_back({"< a, b, c, d |  >", "d a d^-1", "[d,b^-1]"});
    b.tori.push_back({"< a, b, c, d |  >", "b", "[a^-1,d]"});
    cat.blocks.push_back(b);
  }
  {
    CatalogBlock b;
    b.label = "Z''(1,1)";
    b.e = 1;
    b.sigma = -1;
    b.pi1 =
        "< a1, a2, a3, a4 | [a1^-1,a4^-1] a3^-1, [a1,a3^-1] a4^-1, [a2,a3], "
        "[a2,a4], [a3,a4] >";
    b.surfaces.push_back(
        {2, 0,
         "< a1, a2, a3, a4 | [a1^-1,a4^-1] a3^-1, [a1,a3^-1] a4^-1, [a2,a3], "
         "[a2,a4] >",
         {"a1", "a2", "a3^2", "a4"},
         "[a3,a4]"});
    b.symbolic_generators = true;
    b.symbolic_normal_generator = "[a3,a4]";
    cat.blocks.push_back(b);
  }
  {
    CatalogBlock b;
    b.label = "T2xS2#4CP2bar";
    b.e = 4;
    b.sigma = -4;
    b.pi1 = "< xp, yp | [xp,yp] >";
    b.surfaces.push_back(
        {2, 0, "< xp, yp | [xp,yp] >", {"xp", "yp", "xp^-1", "yp^-1"}, ""});
    cat.blocks.push_back(b);
  }
  {
    CatalogBlock b;
    b.label = "T2xS2#3CP2bar";
    b.e = 3;
    b.sigma = -3;
    b.pi1 = "< x, y | [x,y] >";
    b.surfaces.push_back(
        {2, 0, "< x, y | [x,y] >", {"x", "y", "x^-2", "y^-1"}, ""});
    cat.blocks.push_back(b);
  }
  return cat;
}

ordered_json word_list(const std::vector<std::string>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

ordered_json to_json(const Catalog& c) {
  ordered_json root;
  root["format"] = "surgcalc-catalog-1";
  ordered_json blocks = ordered_json::array();
  for (const auto& b : c.blocks) {
    ordered_json jb;
    jb["label"] = b.label;
    jb["e"] = b.e;
    jb["sigma"] = b.sigma;
    jb["pi1"] = b.pi1;
    ordered_json surfaces = ordered_json::array();
    for (const auto& s : b.surfaces) {
      ordered_json js;
      js["genus"] = s.genus;
      js["self_int"] = s.self_int;
      js["complement_pi1"] = s.complement_pi1;
      js["images"] = word_list(s.images);
      js["meridian"] = s.meridian;
      surfaces.push_back(js);
    }
    jb["surfaces"] = surfaces;
    ordered_json tori = ordered_json::array();
    for (const auto& t : b.tori) {
      ordered_json jt;
      jt["complement_pi1"] = t.complement_pi1;
      jt["lambda"] = t.lambda;
      jt["mu"] = t.mu;
      tori.push_back(jt);
    }
    jb["tori"] = tori;
    ordered_json classes = ordered_json::array();
    for (const auto& h : b.classes) {
      ordered_json row = ordered_json::array();
      for (long long x : h.c) row.push_back(x);
      classes.push_back(row);
    }
    jb["classes"] = classes;
    ordered_json fibs = ordered_json::array();
    for (const auto& f : b.fibrations) {
      ordered_json jf;
      jf["name"] = f.name;
      jf["components"] = f.components;
      jf["sections"] = f.sections;
      jf["fishtails"] = f.fishtails;
      jf["fishtails_class_a"] = f.fishtails_class_a;
      fibs.push_back(jf);
    }
    jb["fibrations"] = fibs;
    ordered_json profs = ordered_json::array();
    for (const auto& p : b.profiles) {
      ordered_json jp;
      jp["name"] = p.name;
      jp["sections"] = p.sections;
      jp["section_square"] = p.section_square;
      jp["necklace_i6"] = p.necklace_i6;
      jp["necklace_i2"] = p.necklace_i2;
      jp["fishtails"] = p.fishtails;
      jp["fishtails_class_a"] = p.fishtails_class_a;
      jp["dual_minus2_per_section"] = p.dual_minus2_per_section;
      profs.push_back(jp);
    }
    jb["profiles"] = profs;
    jb["symbolic_generators"] = b.symbolic_generators;
    jb["symbolic_normal_generator"] = b.symbolic_normal_generator;
    blocks.push_back(jb);
  }
  root["blocks"] = blocks;
  return root;
}

Catalog from_json(const ordered_json& root) {
  if (!root.contains("format") || root["format"] != "surgcalc-catalog-1")
    throw Error("catalog: unknown format tag");
  Catalog c;
  for (const auto& jb : root.at("blocks")) {
    CatalogBlock b;
    b.label = jb.at("label").get<std::string>();
    b.e = jb.at("e").get<long long>();
    b.sigma = jb.at("sigma").get<long long>();
    b.pi1 = jb.at("pi1").get<std::string>();
    for (const auto& js : jb.at("surfaces")) {
      CatalogSurface s;
      s.genus = js.at("genus").get<long long>();
      s.self_int = js.at("self_int").get<long long>();
      s.complement_pi1 = js.at("complement_pi1").get<std::string>();
      for (const auto& w : js.at("images")) s.images.push_back(w.get<std::string>());
      s.meridian = js.at("meridian").get<std::string>();
      b.surfaces.push_back(s);
    }
    for (const auto& jt : jb.at("tori")) {
      CatalogTorus t;
      t.complement_pi1 = jt.at("complement_pi1").get<std::string>();
      t.lambda = jt.at("lambda").get<std::string>();
      t.mu = jt.at("mu").get<std::string>();
      b.tori.push_back(t);
    }
    for (const auto& row : jb.at("classes")) {
      HClass h;
      int i = 0;
      for (const auto& x : row) h.c[i++] = x.get<long long>();
      b.classes.push_back(h);
    }
    for (const auto& jf : jb.at("fibrations")) {
      CatalogFibration f;
      f.name = jf.at("name").get<std::string>();
      for (const auto& x : jf.at("components")) f.components.push_back(x.get<std::size_t>());
      for (const auto& x : jf.at("sections")) f.sections.push_back(x.get<std::size_t>());
      f.fishtails = jf.at("fishtails").get<long long>();
      f.fishtails_class_a = jf.at("fishtails_class_a").get<long long>();
      b.fibrations.push_back(f);
    }
    for (const auto& jp : jb.at("profiles")) {
      FibrationProfile p;
      p.name = jp.at("name").get<std::string>();
      p.sections = jp.at("sections").get<long long>();
      p.section_square = jp.at("section_square").get<long long>();
      p.necklace_i6 = jp.at("necklace_i6").get<long long>();
      p.necklace_i2 = jp.at("necklace_i2").get<long long>();
      p.fishtails = jp.at("fishtails").get<long long>();
      p.fishtails_class_a = jp.at("fishtails_class_a").get<long long>();
      p.dual_minus2_per_section = jp.at("dual_minus2_per_section").get<long long>();
      b.profiles.push_back(p);
    }
    b.symbolic_generators = jb.at("symbolic_generators").get<bool>();
    b.symbolic_normal_generator = jb.at("symbolic_normal_generator").get<std::string>();
    c.blocks.push_back(b);
  }
  return c;
}

}  // namespace

const Catalog& builtin_catalog() {
  static const Catalog cat = make_builtin();
  return cat;
}

std::string catalog_to_json(const Catalog& c) { return to_json(c).dump(2) + "\n"; }

Catalog catalog_from_json(const std::string& text) {
  return from_json(ordered_json::parse(text));
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return catalog_from_json(ss.str());
}

void save_catalog_file(const Catalog& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write catalog file: " + path);
  out << catalog_to_json(c);
}

CheckReport check_catalog(const Catalog& c) {
  CheckReport rep;
  for (const auto& b : c.blocks) {
    // parse everything
    bool parses = true;
    std::string why;
    try {
      ManifoldBlock mb = b.materialize();
      for (const auto& s : b.surfaces) s.materialize();
      for (const auto& t : b.tori) t.materialize();
      if (b.symbolic_generators) {
        GroupPresentation p = parse_presentation(b.surfaces.at(0).complement_pi1);
        parse_word(b.symbolic_normal_generator, p);
      }
      (void)mb;
    } catch (const std::exception& ex) {
      parses = false;
      why = ex.what();
    }
    rep.add(b.label + ".parses", parses, why);

    // E(n) invariants
    if (b.label.size() >= 4 && b.label.rfind("E(", 0) == 0 && b.label.back() == ')') {
      long long n = std::stoll(b.label.substr(2, b.label.size() - 3));
      rep.add(b.label + ".euler_signature", b.e == 12 * n && b.sigma == -8 * n,
              "e=" + std::to_string(b.e) + " sigma=" + std::to_string(b.sigma));
    }

    for (const auto& f : b.fibrations) {
      std::string tag = b.label + "." + f.name;
      bool squares = true, cycle = true, incidence = true;
      for (std::size_t i : f.components)
        squares = squares && b.classes.at(i).square() == -2;
      for (std::size_t i : f.sections)
        squares = squares && b.classes.at(i).square() == -1;
      const std::size_t k = f.components.size();
      if (k >= 3) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i + 1; j < k; ++j) {
            long long d = b.classes.at(f.components[i]).dot(b.classes.at(f.components[j]));
            bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
            cycle = cycle && d == (adjacent ? 1 : 0);
          }
      }
      // each section meets exactly one component once; sections are disjoint
      for (std::size_t si = 0; si < f.sections.size(); ++si) {
        long long hits = 0;
        for (std::size_t ci : f.components) {
          long long d = b.classes.at(f.sections[si]).dot(b.classes.at(ci));
          if (d == 1)
            ++hits;
          else if (d != 0)
            incidence = false;
        }
        if (!f.components.empty() && hits != 1) incidence = false;
        for (std::size_t sj = si + 1; sj < f.sections.size(); ++sj)
          if (b.classes.at(f.sections[si]).dot(b.classes.at(f.sections[sj])) != 0)
            incidence = false;
      }
      // twist count of the fibration must be e = 12 per E(1)
      if (b.label == "E(1)") {
        long long total = static_cast<long long>(f.components.size()) + f.fishtails;
        rep.add(tag + ".twist_count_12", total == 12, std::to_string(total));
      }
      rep.add(tag + ".squares", squares);
      rep.add(tag + ".cycle", cycle);
      rep.add(tag + ".sections", incidence);
    }
  }
  return rep;
}

}  // namespace surgcalc
