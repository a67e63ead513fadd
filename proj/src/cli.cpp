#include "surgcalc/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "surgcalc/constructions.hpp"
#include "surgcalc/dsl.hpp"
#include "surgcalc/mcg.hpp"
#include "surgcalc/tietze.hpp"

namespace surgcalc::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    default: return "unchecked";
  }
}

ordered_json block_json(const ManifoldBlock& b) {
  ordered_json j;
  j["label"] = b.label;
  j["e"] = b.e;
  j["sigma"] = b.sigma;
  j["b1"] = b.b1();
  j["b2"] = b.b2();
  j["bplus"] = b.b_plus();
  j["bminus"] = b.b_minus();
  j["c1sq"] = b.c1_squared();
  if (b.chi_h_integral()) j["chi_h"] = b.chi_h();
  j["pi1"] = print_presentation(b.pi1);
  j["minimal"] = b.minimal.tag == Minimality::Yes  ? "yes(" + b.minimal.provenance + ")"
                 : b.minimal.tag == Minimality::No ? "no"
                                                   : "unknown";
  j["kodaira"] = to_string(b.kodaira);
  return j;
}

ordered_json dossier_json(const ConstructionDossier& d) {
  ordered_json j;
  j["block"] = block_json(d.block);
  ordered_json claims = ordered_json::array();
  for (const auto& c : d.claims) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["status"] = status_name(c.status);
    jc["evidence"] = c.evidence;
    claims.push_back(jc);
  }
  j["claims"] = claims;
  return j;
}

void render_human(const ordered_json& j, std::ostream& out, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_structured()) {
        out << pad << it.key() << ":\n";
        render_human(it.value(), out, indent + 2);
      } else {
        out << pad << it.key() << ": "
            << (it.value().is_string() ? it.value().get<std::string>()
                                       : it.value().dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_structured()) {
        out << pad << "-\n";
        render_human(item, out, indent + 2);
      } else {
        out << pad << "- "
            << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    }
  }
}

int dossier_exit(const ConstructionDossier& d) { return d.any_fail() ? 2 : 0; }

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

struct Ctx {
  bool json = false;
  std::string catalog_path;
  int jobs = 1;

  Catalog load() const {
    if (!catalog_path.empty()) return load_catalog_file(catalog_path);
    if (const char* env = std::getenv("SURGCALC_CATALOG"))
      return load_catalog_file(env);
    return builtin_catalog();
  }
};

}  // namespace

Report run(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"exact surgery calculus for symplectic 4-manifold constructions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Ctx ctx;
  app.add_flag("--json", ctx.json, "emit the machine-readable payload");
  app.add_option("--catalog", ctx.catalog_path,
                 "catalog file (default: $SURGCALC_CATALOG or built-in)");
  app.add_option("--jobs", ctx.jobs, "parallelism hint; output is deterministic");

  std::string pres_text, word_text, name;
  long long g = 1, p = 1, q = 1;
  int h = 2;
  std::string plist, qlist;
  std::size_t max_cosets = 200000;
  bool torus_z = false, more_generators = false;

  auto* abelianize = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  abelianize->add_option("presentation", pres_text)->required();

  auto* dft = app.add_subcommand("dft", "dual-finite-torsion test");
  dft->add_option("presentation", pres_text)->required();

  auto* enumerate = app.add_subcommand("enumerate", "coset enumeration over the trivial subgroup");
  enumerate->add_option("presentation", pres_text)->required();
  enumerate->add_option("--max-cosets", max_cosets);

  auto* monodromy = app.add_subcommand("monodromy", "torus mapping-class-group words");
  auto* verify = monodromy->add_subcommand("verify", "check an identity factorization");
  verify->add_option("word", word_text)->required();
  auto* fiber = monodromy->add_subcommand("fiber", "recognize a fiber segment");
  fiber->add_option("word", word_text)->required();
  monodromy->require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "size bounds for a fundamental group");
  bounds->add_option("presentation", pres_text)->required();

  auto* construct = app.add_subcommand("construct", "run a construction pipeline");
  construct->require_subcommand(1);
  auto* xg = construct->add_subcommand("xg", "torus sum over Sigma_g x T2");
  xg->add_option("genus", g)->required();
  xg->add_option("--p", plist)->required();
  xg->add_option("--q", qlist)->required();
  auto* xG = construct->add_subcommand("xG", "stratified arbitrary-group construction");
  xG->add_option("presentation", pres_text)->required();
  xG->add_flag("--more-generators", more_generators,
               "trailing free generators realized exactly");
  auto* xGp = construct->add_subcommand("xG-plus", "positive-c1^2 variant over Sigma_2 x Sigma_n");
  xGp->add_option("presentation", pres_text)->required();
  auto* xpq1 = construct->add_subcommand("xpq1", "Z_p x Z_q with c1^2 = 1");
  xpq1->add_option("p", p)->required();
  xpq1->add_option("q", q)->required();
  auto* xpq23 = construct->add_subcommand("xpq23", "Z_p x Z_q with c1^2 = 2 or 3");
  xpq23->add_option("hclass", h, "target c1^2, 2 or 3")->required();
  xpq23->add_option("p", p)->required();
  xpq23->add_option("q", q);
  xpq23->add_flag("--torus-z", torus_z, "single surgery: pi1 = Z x Z_p");
  auto* rbd = construct->add_subcommand("rbd", "rational blowdown recipe");
  rbd->add_option("name", name)->required();

  auto* catalog = app.add_subcommand("catalog", "building-block catalog");
  auto* cat_list = catalog->add_subcommand("list", "list blocks");
  auto* cat_check = catalog->add_subcommand("check", "self-check the catalog");
  catalog->require_subcommand(1);

  std::vector<std::string> argv = args;
  std::vector<const char*> cargv;
  cargv.push_back("surgcalc");
  for (const auto& a : argv) cargv.push_back(a.c_str());

  Report rep;
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    rep.exit_code = app.exit(e, os, os) == 0 ? 0 : 1;
    err << os.str();
    return rep;
  }

  ordered_json j;
  try {
    if (*abelianize) {
      GroupPresentation pr = parse_presentation(pres_text);
      AbelianInvariants ai = abelian_invariants(pr);
      j["command"] = "abelianize";
      j["presentation"] = print_presentation(pr);
      j["free_rank"] = ai.free_rank;
      ordered_json tor = ordered_json::array();
      for (const Int& t : ai.torsion) tor.push_back(t.convert_to<long long>());
      j["torsion"] = tor;
      j["group"] = ai.to_string();
    } else if (*dft) {
      GroupPresentation pr = parse_presentation(pres_text);
      j["command"] = "dft";
      j["presentation"] = print_presentation(pr);
      j["dual_finite_torsion"] = is_dual_finite_torsion(pr);
    } else if (*enumerate) {
      GroupPresentation pr = parse_presentation(pres_text);
      EnumOutcome e = enumerate_cosets(pr, {max_cosets, 20 * max_cosets});
      j["command"] = "enumerate";
      if (e.finite())
        j["order"] = e.order;
      else
        j["budget_exceeded"] = true;
    } else if (*verify) {
      MonodromyWord w = parse_monodromy(word_text);
      bool ok = is_identity_factorization(w);
      j["command"] = "monodromy verify";
      j["identity"] = ok;
      if (ok) j["twist_count"] = euler_number(w);
      if (!ok) rep.exit_code = 2;
    } else if (*fiber) {
      MonodromyWord w = parse_monodromy(word_text);
      FiberType f = recognize_fiber(w);
      j["command"] = "monodromy fiber";
      j["fiber"] = f.tag == FiberType::Fishtail   ? "fishtail"
                   : f.tag == FiberType::Necklace ? "necklace"
                                                  : "not_recognized";
      if (f.tag == FiberType::Necklace) j["k"] = f.k;
    } else if (*bounds) {
      GroupPresentation pr = parse_presentation(pres_text);
      SizeBoundsReport r = group_size_bounds(pr);
      j["command"] = "bounds";
      j["b1"] = r.b1;
      j["lower_bound"] = r.lower_bound;
      j["gompf_upper"] = r.gompf_upper;
      j["stratified_bound"] = r.stratified_bound;
      if (r.free_table) j["free_table"] = *r.free_table;
    } else if (*cat_list) {
      Catalog cat = ctx.load();
      j["command"] = "catalog list";
      ordered_json rows = ordered_json::array();
      for (const auto& b : cat.blocks) {
        ordered_json row;
        row["label"] = b.label;
        row["e"] = b.e;
        row["sigma"] = b.sigma;
        row["pi1"] = b.pi1;
        rows.push_back(row);
      }
      j["blocks"] = rows;
    } else if (*cat_check) {
      Catalog cat = ctx.load();
      CheckReport r = check_catalog(cat);
      j["command"] = "catalog check";
      ordered_json rows = ordered_json::array();
      for (const auto& item : r.items) {
        ordered_json row;
        row["name"] = item.name;
        row["status"] = item.pass ? "pass" : "fail";
        if (!item.detail.empty()) row["detail"] = item.detail;
        rows.push_back(row);
      }
      j["checks"] = rows;
      if (!r.all_pass()) rep.exit_code = 2;
    } else if (*construct) {
      Catalog cat = ctx.load();
      ConstructionDossier d;
      if (*xg) {
        d = build_Xg(g, parse_int_list(plist), parse_int_list(qlist), cat);
      } else if (*xG) {
        GroupPresentation pr = parse_presentation(pres_text);
        d = more_generators ? build_XG_moregen(pr, cat) : build_XG(pr, cat);
      } else if (*xGp) {
        d = build_XplusG(parse_presentation(pres_text), cat);
      } else if (*xpq1) {
        d = build_Xpq_c1(p, q, cat);
      } else if (*xpq23) {
        d = build_Xpq_c23(h, p, q, torus_z ? XpqMode::TorusZ : XpqMode::TorusTorus,
                          cat);
      } else if (*rbd) {
        d = build_rbd_example(name, cat);
      }
      j = dossier_json(d);
      j["command"] = "construct";
      rep.exit_code = dossier_exit(d);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    rep.exit_code = 1;
    return rep;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    rep.exit_code = 1;
    return rep;
  }

  rep.json = j.dump(2);
  if (ctx.json)
    out << rep.json << "\n";
  else
    render_human(j, out);
  return rep;
}

}  // namespace surgcalc::cli
