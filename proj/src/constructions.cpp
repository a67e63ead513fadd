#include "surgcalc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "surgcalc/dsl.hpp"
#include "surgcalc/hom.hpp"
#include "surgcalc/tietze.hpp"

namespace surgcalc {

namespace {

Word gen(int i) { return Word::letter(i); }
Word genpow(int i, long long e) { return Word::power_of(i, e); }
Word comm(const Word& u, const Word& v) { return Word::commutator(u, v); }

std::string join_params(const std::vector<long long>& p,
                        const std::vector<long long>& q) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i)
    os << (i ? "," : "") << p[i] << "," << q[i];
  return os.str();
}

void add_invariant_claims(ConstructionDossier& d, const std::string& prefix,
                          long long e, long long sigma) {
  std::ostringstream ev;
  ev << "(e,sigma) = (" << d.block.e << "," << d.block.sigma << ")";
  d.check(prefix + ".euler_signature", d.block.e == e && d.block.sigma == sigma,
          ev.str());
  d.check(prefix + ".c1sq",
          d.block.c1_squared() == 2 * e + 3 * sigma,
          "c1^2 = " + std::to_string(d.block.c1_squared()));
}

void add_geography_claim(ConstructionDossier& d, const std::string& prefix) {
  CheckReport rep = geography_check(d.block);
  d.check(prefix + ".geography", rep.all_pass());
}

}  // namespace

YgResult build_Yg(long long g, const std::vector<long long>& p,
                  const std::vector<long long>& q) {
  if (g < 1) throw Error("build_Yg: genus must be >= 1");
  if (p.size() != static_cast<std::size_t>(g) || q.size() != p.size())
    throw Error("build_Yg: need g surgery exponent pairs");
  for (long long x : p)
    if (x < 0) throw Error("build_Yg: exponents must be >= 0");
  for (long long x : q)
    if (x < 0) throw Error("build_Yg: exponents must be >= 0");

  std::vector<std::string> names;
  for (long long i = 1; i <= g; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  names.push_back("c");
  names.push_back("d");
  const int c = static_cast<int>(2 * g), d = c + 1;
  auto ai = [](long long i) { return static_cast<int>(2 * (i - 1)); };
  auto bi = [](long long i) { return static_cast<int>(2 * (i - 1) + 1); };

  std::vector<Word> rels;
  for (long long i = 1; i <= g; ++i) {
    rels.push_back(comm(gen(bi(i)).inverse(), gen(d).inverse()) *
                   genpow(ai(i), -p[i - 1]));
    rels.push_back(comm(gen(ai(i)).inverse(), gen(d)) * genpow(bi(i), -q[i - 1]));
    rels.push_back(comm(gen(ai(i)), gen(c)));
    rels.push_back(comm(gen(bi(i)), gen(c)));
  }
  rels.push_back(comm(gen(c), gen(d)));

  Word surface;
  for (long long i = 1; i <= g; ++i) surface = surface * comm(gen(ai(i)), gen(bi(i)));

  GroupPresentation complement(names, rels);
  std::vector<Word> closed_rels = rels;
  closed_rels.push_back(surface);

  YgResult out;
  out.block.label = "Y_" + std::to_string(g) + "(" + join_params(p, q) + ")";
  out.block.e = 0;
  out.block.sigma = 0;
  out.block.pi1 = GroupPresentation(names, closed_rels);
  out.block.minimal = Minimality::yes("luttinger surgery on minimal Sigma_g x T2");
  out.block.kodaira = Kodaira::One;
  out.torus.genus = 1;
  out.torus.self_intersection = 0;
  out.torus.complement_pi1 = complement;
  out.torus.surface_images = {gen(c), gen(d)};
  out.torus.meridian = surface;
  return out;
}

ConstructionDossier build_Xg(long long g, const std::vector<long long>& p,
                             const std::vector<long long>& q, const Catalog& cat) {
  YgResult yg = build_Yg(g, p, q);
  const CatalogBlock& e1 = cat.at("E(1)");
  ManifoldBlock e1b = e1.materialize();
  EmbeddedSurfaceData e1s = e1.surfaces.at(0).materialize();

  ConstructionDossier d;
  d.block = fiber_sum(yg.block, yg.torus, e1b, e1s, e1s.surface_images,
                      Minimality::yes("usher"),
                      "X_" + std::to_string(g) + "(" + join_params(p, q) + ")");
  d.block.kodaira = Kodaira::One;

  add_invariant_claims(d, "xg", 12, -8);

  long long b1 = d.block.b1();
  d.check("xg.bplus_bminus",
          d.block.b_plus() == b1 + 1 && d.block.b_minus() == b1 + 9,
          "b+ = " + std::to_string(d.block.b_plus()) +
              ", b- = " + std::to_string(d.block.b_minus()));

  bool all_p1 = true, all_q1 = true, all_q0 = true;
  for (long long x : p) all_p1 = all_p1 && x == 1;
  for (long long x : q) {
    all_q1 = all_q1 && x == 1;
    all_q0 = all_q0 && x == 0;
  }

  if (all_p1 && all_q1) {
    EnumOutcome e = enumerate_cosets(d.block.pi1, {1000, 100000});
    d.check("xg.pi1_trivial", e.finite() && e.order == 1,
            e.finite() ? "order " + std::to_string(e.order) : "budget exceeded");
  }
  if (all_p1 && all_q0) {
    TietzeResult tz = tietze_simplify(d.block.pi1);
    bool ok = tz.presentation.relator_count() == 0 &&
              tz.presentation.generator_count() == static_cast<std::size_t>(g);
    d.check("xg.pi1_free", ok,
            "simplified to " + print_presentation(tz.presentation));
  }
  if (all_p1) {
    // free product of Z (q_i = 0) and Z_{q_i}: compare H_1 both routes
    std::vector<std::string> names;
    std::vector<Word> rels;
    for (std::size_t i = 0; i < q.size(); ++i) {
      names.push_back("y" + std::to_string(i + 1));
      if (q[i] > 0) rels.push_back(genpow(static_cast<int>(i), q[i]));
    }
    GroupPresentation target(names, rels);
    d.check("xg.h1_free_product",
            abelian_invariants(d.block.pi1) == abelian_invariants(target),
            abelian_invariants(d.block.pi1).to_string());
    // full isomorphism claim only certified when a single finite factor remains
    long long nontrivial = 0;
    for (long long x : q)
      if (x != 1) ++nontrivial;
    if (nontrivial <= 1) {
      long long order = 1;
      for (long long x : q)
        if (x != 1) order = x;
      if (order >= 1) {
        EnumOutcome e = enumerate_cosets(d.block.pi1, {20000, 500000});
        d.check("xg.pi1_cyclic_order", e.finite() && e.order == static_cast<std::size_t>(order),
                e.finite() ? "order " + std::to_string(e.order) : "budget exceeded");
      }
    } else {
      d.unchecked("xg.pi1_free_product",
                  "free product with >= 2 nontrivial factors is infinite; claim "
                  "asserted at H_1 level only");
    }
  }
  add_geography_claim(d, "xg");
  return d;
}

namespace {

// Shared assembly for the stratified construction: handles for a_1..a_{k'},
// b_1..b_{k'}, the torus factor c, d, and one auxiliary generator per
// relator curve. with_dual_relations controls the [a_i^-1, d] = P_i(gamma')
// relations for the base handles i <= k.
struct XGAssembly {
  GroupPresentation complement;
  Word surface_relator;
  long long k = 0, kprime = 0;
  BridgePlan plan;
  std::vector<int> b_idx;    // 1-based handle -> generator index of b_i
  std::vector<int> gam_idx;  // 0-based relator -> generator index of gamma'_j
};

XGAssembly assemble_XG(const GroupPresentation& g, bool with_dual_relations) {
  XGAssembly a;
  a.k = static_cast<long long>(g.generator_count());
  const long long m = static_cast<long long>(g.relator_count());
  a.plan = bridge_moves(g.relators(), a.k);
  if (m == 0) a.plan.total_genus = a.k;
  a.kprime = a.plan.total_genus;

  std::vector<std::string> names;
  for (long long i = 1; i <= a.kprime; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  names.push_back("c");
  names.push_back("d");
  for (long long j = 1; j <= m; ++j) names.push_back("gam" + std::to_string(j));

  auto ai = [](long long i) { return static_cast<int>(2 * (i - 1)); };
  auto bi = [](long long i) { return static_cast<int>(2 * (i - 1) + 1); };
  const int c = static_cast<int>(2 * a.kprime), dd = c + 1;
  auto gam = [&](long long j) { return static_cast<int>(2 * a.kprime + 2 + (j - 1)); };

  a.b_idx.assign(static_cast<std::size_t>(a.kprime) + 1, -1);
  for (long long i = 1; i <= a.kprime; ++i) a.b_idx[i] = bi(i);
  for (long long j = 1; j <= m; ++j) a.gam_idx.push_back(gam(j));

  IntMatrix expo = exponent_matrix(g);

  std::vector<Word> rels;
  // base handles: p_i = 1, q_i = 0; the relator curves puncture the dual tori
  for (long long i = 1; i <= a.k; ++i) {
    rels.push_back(comm(gen(bi(i)).inverse(), gen(dd).inverse()) * gen(ai(i)).inverse());
    if (with_dual_relations) {
      Word pi_word;
      for (long long j = 1; j <= m; ++j) {
        long long e = expo(static_cast<std::size_t>(i - 1),
                           static_cast<std::size_t>(j - 1))
                          .convert_to<long long>();
        pi_word = pi_word * genpow(gam(j), e);
      }
      rels.push_back(comm(gen(ai(i)).inverse(), gen(dd)) * pi_word.inverse());
    }
  }
  // bridge handles
  for (long long h = a.k + 1; h <= a.kprime; ++h) {
    long long j = static_cast<long long>(a.plan.relator_of(h)) + 1;
    long long s = a.plan.c_of(h) % 2 == 0 ? 1 : -1;  // (-1)^{c(g)}
    rels.push_back(comm(gen(bi(h)).inverse(), gen(dd).inverse()) * gen(ai(h)).inverse());
    rels.push_back(comm(gen(ai(h)).inverse(), gen(dd)) *
                   (gen(gam(j)) * genpow(bi(h), s)).inverse());
  }
  // torus-factor commutators and [c,d]
  for (long long i = 1; i <= a.kprime; ++i) {
    rels.push_back(comm(gen(ai(i)), gen(c)));
    rels.push_back(comm(gen(bi(i)), gen(c)));
  }
  rels.push_back(comm(gen(c), gen(dd)));
  // defining words of the relator curves: gamma'_j = l_j(b) * bridge block
  for (long long j = 1; j <= m; ++j) {
    std::vector<int> to_b(g.generator_count());
    for (std::size_t t = 0; t < g.generator_count(); ++t)
      to_b[t] = bi(static_cast<long long>(t) + 1);
    Word w = g.relators()[j - 1].remapped(to_b);
    const auto& pr = a.plan.relators[j - 1];
    for (long long t = 0; t < pr.bridge_count; ++t)
      w = w * gen(bi(pr.first_bridge + t));
    rels.push_back(gen(gam(j)).inverse() * w);
  }

  a.complement = GroupPresentation(names, rels);
  for (long long i = 1; i <= a.kprime; ++i)
    a.surface_relator = a.surface_relator * comm(gen(ai(i)), gen(bi(i)));
  return a;
}

ConstructionDossier finish_XG(const GroupPresentation& g, const XGAssembly& a,
                              const Catalog& cat, const std::string& prefix,
                              const std::string& label, long long b1_ref,
                              bool gamma_claims) {
  const CatalogBlock& e1 = cat.at("E(1)");
  ManifoldBlock e1b = e1.materialize();
  EmbeddedSurfaceData e1s = e1.surfaces.at(0).materialize();

  ManifoldBlock yg;
  yg.label = "Y(" + label + ")";
  yg.e = 0;
  yg.sigma = 0;
  std::vector<Word> closed = a.complement.relators();
  closed.push_back(a.surface_relator);
  yg.pi1 = GroupPresentation(a.complement.generator_names(), closed);
  yg.minimal = Minimality::yes("luttinger surgery on minimal Sigma_k' x T2");
  yg.kodaira = Kodaira::One;

  EmbeddedSurfaceData torus;
  torus.genus = 1;
  torus.self_intersection = 0;
  torus.complement_pi1 = a.complement;
  torus.surface_images = {gen(static_cast<int>(2 * a.kprime)),
                          gen(static_cast<int>(2 * a.kprime + 1))};
  torus.meridian = a.surface_relator;

  ConstructionDossier d;
  d.block = fiber_sum(yg, torus, e1b, e1s, e1s.surface_images,
                      Minimality::yes("usher"), label);
  d.block.kodaira = Kodaira::One;

  bool dft = is_dual_finite_torsion(g);
  if (dft)
    d.pass(prefix + ".dual_finite_torsion");
  else
    d.unchecked(prefix + ".dual_finite_torsion",
                "hypothesis not satisfied: exponent matrix rank < relator count");

  add_invariant_claims(d, prefix, 12, -8);

  long long b1r = d.block.b1();
  std::string b1ev = "b1(G) = " + std::to_string(b1_ref) +
                     ", b1(result) = " + std::to_string(b1r);
  if (dft) {
    d.check(prefix + ".b1_matches", b1r == b1_ref, b1ev);
    d.check(prefix + ".bplus", d.block.b_plus() == b1_ref + 1,
            "b+ = " + std::to_string(d.block.b_plus()));
  } else {
    d.unchecked(prefix + ".b1_matches", b1ev);
    d.unchecked(prefix + ".bplus", "hypothesis unmet");
  }

  IntMatrix expo = exponent_matrix(d.block.pi1);
  if (gamma_claims) {
    // each gamma'_j has finite order in H_1 of the result
    bool all_torsion = true;
    for (int gi : a.gam_idx) {
      std::vector<Int> v(d.block.pi1.generator_count(), 0);
      v[gi] = 1;
      all_torsion = all_torsion && finite_order_in_cokernel(expo, v);
    }
    if (dft)
      d.check(prefix + ".gamma_torsion", all_torsion,
              std::to_string(a.gam_idx.size()) + " auxiliary generators");
    else
      d.unchecked(prefix + ".gamma_torsion", "hypothesis unmet");
  }

  // abelianized consequence: l_j(b) = 1 in H_1 of the result
  bool conseq = true;
  for (const Word& l : g.relators()) {
    std::vector<int> to_b(g.generator_count());
    for (std::size_t t = 0; t < g.generator_count(); ++t)
      to_b[t] = a.b_idx[static_cast<long long>(t) + 1];
    Word w = l.remapped(to_b);
    conseq = conseq &&
             in_column_lattice(expo, exponent_vector(w, d.block.pi1.generator_count()));
  }
  d.check(prefix + ".relator_consequences", conseq);

  if (gamma_claims) {
    // surjection onto G: b_i -> x_i, everything else -> 1
    std::vector<Word> images(d.block.pi1.generator_count());
    for (long long i = 1; i <= a.k; ++i)
      images[a.b_idx[i]] = gen(static_cast<int>(i - 1));
    GroupHom hom(d.block.pi1, g, images);
    HomCheck hc = check_hom(hom, {50000, 500000});
    d.check(prefix + ".hom_check", hc != HomCheck::Failed,
            hc == HomCheck::Certified ? "certified by enumeration" : "abelian level");
  }

  d.unchecked(prefix + ".dual_relation_convention",
              "P_i(gamma') = prod_j gamma'_j^{E_ij}, E = exponent matrix of the input "
              "presentation (row = generator, column = relator)");

  add_geography_claim(d, prefix);
  return d;
}

}  // namespace

ConstructionDossier build_XG(const GroupPresentation& g, const Catalog& cat) {
  XGAssembly a = assemble_XG(g, true);
  long long b1g = static_cast<long long>(abelian_invariants(g).free_rank);
  return finish_XG(g, a, cat, "xG", "X(G)", b1g, true);
}

ConstructionDossier build_XG_moregen(const GroupPresentation& g, const Catalog& cat) {
  const long long total = static_cast<long long>(g.generator_count());
  const long long m = static_cast<long long>(g.relator_count());
  const long long k = total - m;
  if (k < 0)
    throw Error("build_XG_moregen: more relators than generators");
  for (const Word& r : g.relators())
    if (r.max_gen() >= k)
      throw Error("build_XG_moregen: relators must only involve the first " +
                  std::to_string(k) + " generators");

  if (m == 0) {
    // pure free group: the plain construction with unit/zero exponents
    std::vector<long long> p(static_cast<std::size_t>(k), 1),
        q(static_cast<std::size_t>(k), 0);
    ConstructionDossier d = build_Xg(k, p, q, cat);
    d.block.label = "X(G) [more generators, free case]";
    return d;
  }

  GroupPresentation core(
      std::vector<std::string>(g.generator_names().begin(),
                               g.generator_names().begin() + k),
      g.relators());
  XGAssembly a = assemble_XG(core, false);
  long long b1g = static_cast<long long>(abelian_invariants(g).free_rank);
  ConstructionDossier d =
      finish_XG(core, a, cat, "moregen", "X(G) [more generators]", b1g, false);

  // pi1 = G exactly, checked at abelianization and enumeration level
  d.check("moregen.h1_exact",
          abelian_invariants(d.block.pi1) == abelian_invariants(g),
          abelian_invariants(d.block.pi1).to_string() + " vs " +
              abelian_invariants(g).to_string());
  EnumOutcome eg = enumerate_cosets(g, {20000, 400000});
  if (eg.finite()) {
    EnumOutcome er = enumerate_cosets(d.block.pi1, {20000, 400000});
    d.check("moregen.order", er.finite() && er.order == eg.order,
            er.finite() ? "order " + std::to_string(er.order) : "budget exceeded");
  } else {
    d.unchecked("moregen.order", "target group not finite within budget");
  }
  return d;
}

ConstructionDossier build_XplusG(const GroupPresentation& g, const Catalog& cat) {
  const long long k = static_cast<long long>(g.generator_count());
  const long long m = static_cast<long long>(g.relator_count());
  const long long n = k + 2;

  // relator curves live on the handles of the second factor, d_3..d_{k+2}
  BridgePlan plan = bridge_moves(g.relators(), n);
  if (m == 0) plan.total_genus = n;
  const long long kprime = plan.total_genus;

  std::vector<std::string> names = {"a1", "b1", "a2", "b2"};
  for (long long j = 1; j <= kprime; ++j) {
    names.push_back("c" + std::to_string(j));
    names.push_back("d" + std::to_string(j));
  }
  for (long long j = 1; j <= m; ++j) names.push_back("gam" + std::to_string(j));

  const int a1 = 0, b1 = 1, a2 = 2, b2 = 3;
  auto cj = [](long long j) { return static_cast<int>(4 + 2 * (j - 1)); };
  auto dj = [](long long j) { return static_cast<int>(4 + 2 * (j - 1) + 1); };
  auto gam = [&](long long j) { return static_cast<int>(4 + 2 * kprime + (j - 1)); };

  IntMatrix expo = exponent_matrix(g);

  std::vector<Word> rels;
  rels.push_back(comm(gen(b1).inverse(), gen(dj(1)).inverse()) * gen(a1).inverse());
  rels.push_back(comm(gen(a1).inverse(), gen(dj(1))) * gen(b1).inverse());
  rels.push_back(comm(gen(b2).inverse(), gen(dj(2)).inverse()) * gen(a2).inverse());
  rels.push_back(comm(gen(a2).inverse(), gen(dj(2))) * gen(b2).inverse());
  rels.push_back(comm(gen(dj(1)).inverse(), gen(b2).inverse()) * gen(cj(1)).inverse());
  rels.push_back(comm(gen(cj(1)).inverse(), gen(b2)) * gen(dj(1)).inverse());
  rels.push_back(comm(gen(dj(2)).inverse(), gen(b1).inverse()) * gen(cj(2)).inverse());
  rels.push_back(comm(gen(cj(2)).inverse(), gen(b1)) * gen(dj(2)).inverse());
  rels.push_back(comm(gen(a1), gen(cj(1))));
  rels.push_back(comm(gen(a1), gen(cj(2))));
  rels.push_back(comm(gen(a1), gen(dj(2))));
  rels.push_back(comm(gen(b1), gen(cj(1))));
  rels.push_back(comm(gen(a2), gen(cj(1))));
  rels.push_back(comm(gen(a2), gen(cj(2))));
  rels.push_back(comm(gen(a2), gen(dj(1))));
  rels.push_back(comm(gen(b2), gen(cj(2))));
  rels.push_back(comm(gen(a1), gen(b1)) * comm(gen(a2), gen(b2)));

  // standard handles of the second factor, j = 3..n: p_j = 1, q_j = 0 with
  // relator-curve punctures on the dual tori
  for (long long j = 3; j <= n; ++j) {
    rels.push_back(comm(gen(a1).inverse(), gen(dj(j)).inverse()) * gen(cj(j)).inverse());
    Word qj;
    for (long long i = 1; i <= m; ++i) {
      long long e = expo(static_cast<std::size_t>(j - 3),
                         static_cast<std::size_t>(i - 1))
                        .convert_to<long long>();
      qj = qj * genpow(gam(i), e);
    }
    rels.push_back(comm(gen(a2).inverse(), gen(cj(j)).inverse()) * qj.inverse());
    rels.push_back(comm(gen(b1), gen(cj(j))));
    rels.push_back(comm(gen(b2), gen(dj(j))));
  }
  // bridge handles
  for (long long h = n + 1; h <= kprime; ++h) {
    long long j = static_cast<long long>(plan.relator_of(h)) + 1;
    long long s = plan.c_of(h) % 2 == 0 ? 1 : -1;
    rels.push_back(comm(gen(a1).inverse(), gen(dj(h)).inverse()) * gen(cj(h)).inverse());
    rels.push_back(comm(gen(a2).inverse(), gen(cj(h)).inverse()) *
                   (gen(gam(j)) * genpow(dj(h), s)).inverse());
    rels.push_back(comm(gen(b1), gen(cj(h))));
    rels.push_back(comm(gen(b2), gen(dj(h))));
  }
  // defining words: gamma'_j = l_j(d_3..) * bridge block
  for (long long j = 1; j <= m; ++j) {
    std::vector<int> to_d(g.generator_count());
    for (std::size_t t = 0; t < g.generator_count(); ++t)
      to_d[t] = dj(static_cast<long long>(t) + 3);
    Word w = g.relators()[j - 1].remapped(to_d);
    const auto& pr = plan.relators[j - 1];
    for (long long t = 0; t < pr.bridge_count; ++t)
      w = w * gen(dj(pr.first_bridge + t));
    rels.push_back(gen(gam(j)).inverse() * w);
  }

  GroupPresentation complement(names, rels);
  Word meridian;
  for (long long j = 1; j <= kprime; ++j)
    meridian = meridian * comm(gen(cj(j)), gen(dj(j)));

  ManifoldBlock yplus;
  yplus.label = "Y+(G)";
  yplus.e = 4 * kprime - 4;
  yplus.sigma = 0;
  {
    std::vector<Word> closed = rels;
    closed.push_back(meridian);
    yplus.pi1 = GroupPresentation(names, closed);
  }
  yplus.minimal = Minimality::yes("luttinger surgery on minimal Sigma_2 x Sigma_k'");
  yplus.kodaira = Kodaira::Unknown;

  EmbeddedSurfaceData s1;
  s1.genus = 2;
  s1.self_intersection = 0;
  s1.complement_pi1 = complement;
  s1.surface_images = {gen(a1), gen(b1), gen(a2), gen(b2)};
  s1.meridian = meridian;

  const CatalogBlock& zpp = cat.at("Z''(1,1)");
  ManifoldBlock zb = zpp.materialize();
  EmbeddedSurfaceData s2 = zpp.surfaces.at(0).materialize();

  ConstructionDossier d;
  d.block = fiber_sum(yplus, s1, zb, s2, s2.surface_images,
                      Minimality::yes("usher"), "X+(G)");

  bool dft = is_dual_finite_torsion(g);
  if (dft)
    d.pass("xplus.dual_finite_torsion");
  else
    d.unchecked("xplus.dual_finite_torsion", "hypothesis not satisfied");

  std::ostringstream kev;
  kev << "k' = " << kprime;
  d.check("xplus.euler_signature",
          d.block.e == 4 * kprime + 1 && d.block.sigma == -1,
          kev.str() + ", (e,sigma) = (" + std::to_string(d.block.e) + "," +
              std::to_string(d.block.sigma) + ")");
  d.check("xplus.c1sq", d.block.c1_squared() == 8 * kprime - 1,
          "c1^2 = " + std::to_string(d.block.c1_squared()));
  d.check("xplus.chi_h", d.block.chi_h_integral() && d.block.chi_h() == kprime,
          "chi_h = " + std::to_string(d.block.chi_h()));

  TietzeResult tz = tietze_simplify(d.block.pi1, 20000);
  if (m == 0) {
    bool free_ok = !tz.budget_exhausted && tz.presentation.relator_count() == 0 &&
                   tz.presentation.generator_count() ==
                       static_cast<std::size_t>(n - 2);
    d.check("xplus.pi1_free", free_ok,
            "simplified to " + print_presentation(tz.presentation));
  } else {
    long long rank =
        static_cast<long long>(abelian_invariants(d.block.pi1).free_rank);
    long long rank_g = static_cast<long long>(abelian_invariants(g).free_rank);
    if (dft)
      d.check("xplus.h1_rational", rank == rank_g,
              "rank H_1 = " + std::to_string(rank));
    else
      d.unchecked("xplus.h1_rational", "hypothesis unmet");
  }

  // symbolic generators of the Z'' block die exactly when the image of their
  // normal generator is certified trivial
  {
    GroupPresentation zc = s2.complement_pi1;
    Word ng = parse_word(zpp.symbolic_normal_generator, zc);
    Word shifted = shift_into_product(ng, complement.generator_count());
    Word image = tz.rewrite(shifted);
    if (image.empty())
      d.pass("xplus.symbolic_generators_killed",
             "normal generator rewrites to the empty word");
    else
      d.unchecked("xplus.symbolic_generators_killed",
                  "presentation conditional on the symbolic generator count");
  }

  add_geography_claim(d, "xplus");
  return d;
}

DiophantineSolution solve_gluing_diophantine(long long p, long long q) {
  // extended euclid on (p, 2q); gcd must be 1
  long long r0 = p, r1 = 2 * q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long qq = r0 / r1;
    long long r2 = r0 - qq * r1, s2 = s0 - qq * s1, t2 = t0 - qq * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  if (r0 != 1) throw Error("gcd(p, 2q) != 1");
  // d*p - 2*a*q = pq - 1 with d = s0*(pq-1), a = -t0*(pq-1), then shift
  long long target = p * q - 1;
  DiophantineSolution sol;
  sol.d = s0 * target;
  sol.a = -t0 * target;
  long long shift = p == 0 ? 0 : (sol.a % p + p) % p;  // a mod p into [0, p)
  long long t = (shift - sol.a) / p;
  sol.a += t * p;
  sol.d += t * 2 * q;
  if (sol.d * p - 2 * sol.a * q != p * q - 1)
    throw Error("diophantine solver internal check failed");
  return sol;
}

ConstructionDossier build_Xpq_c1(long long p, long long q, const Catalog& cat) {
  if (p < 1 || q < 1) throw Error("build_Xpq_c1: p, q >= 1 required");
  if (std::gcd(p, 2 * q) != 1)
    throw Error("build_Xpq_c1: gcd(p, 2q) = 1 required");

  DiophantineSolution sol = solve_gluing_diophantine(p, q);
  const long long a = sol.a, dd = sol.d;

  const CatalogBlock& x1 = cat.at("T2xS2#4CP2bar");
  const CatalogBlock& x2 = cat.at("T2xS2#3CP2bar");
  ManifoldBlock x1b = x1.materialize(), x2b = x2.materialize();
  EmbeddedSurfaceData s1 = x1.surfaces.at(0).materialize();
  EmbeddedSurfaceData s2 = x2.surfaces.at(0).materialize();

  // gluing (a1, b1, c1, d1) -> (a2^a b2, a2^{ad-1} b2^d, c2^{2a+p} d2,
  // c2^{2ad-2} d2^{d-q}) written through the images of X2's surface
  const Word& im_c2 = s2.surface_images[0];
  const Word& im_d2 = s2.surface_images[1];
  const Word& im_a2 = s2.surface_images[2];
  const Word& im_b2 = s2.surface_images[3];
  std::vector<Word> gluing = {
      im_a2.pow(a) * im_b2,
      im_a2.pow(a * dd - 1) * im_b2.pow(dd),
      im_c2.pow(2 * a + p) * im_d2,
      im_c2.pow(2 * a * dd - 2) * im_d2.pow(dd - q),
  };

  ConstructionDossier d;
  d.block = fiber_sum(x1b, s1, x2b, s2, gluing, Minimality::yes("usher"),
                      "X_{" + std::to_string(p) + "," + std::to_string(q) + "} c1^2=1");

  d.pass("xpq1.diophantine", "a = " + std::to_string(a) + ", d = " + std::to_string(dd) +
                                 " solve dp - 2aq = pq - 1");

  // the two gluing relator words over <x, y>, as they appear after pushing
  // everything into the second factor
  {
    GroupPresentation xy({"x", "y"}, {});
    Word g1 = genpow(0, -2 * a) * genpow(1, -1) * genpow(0, 2 * a + p) * gen(1);
    Word g2 = genpow(0, 2 - 2 * a * dd) * genpow(1, -dd) * genpow(0, 2 * a * dd - 2) *
              genpow(1, dd - q);
    bool ok = g1.exponent_sum(0) == p && g1.exponent_sum(1) == 0 &&
              g2.exponent_sum(0) == 0 && g2.exponent_sum(1) == -q;
    d.check("xpq1.abelianized_relators", ok,
            print_word(g1, xy) + " ; " + print_word(g2, xy));
  }

  d.check("xpq1.pi1_product_of_cyclics",
          certify_product_of_cyclics(d.block.pi1, p, q),
          "Z_" + std::to_string(p) + " x Z_" + std::to_string(q));
  add_invariant_claims(d, "xpq1", 11, -7);
  d.check("xpq1.bplus", d.block.b_plus() == 1,
          "b+ = " + std::to_string(d.block.b_plus()));
  d.check("xpq1.minimal", d.block.minimal.tag == Minimality::Yes,
          d.block.minimal.provenance);
  add_geography_claim(d, "xpq1");
  return d;
}

ConstructionDossier build_Xpq_c23(int h, long long p, long long q, XpqMode mode,
                                  const Catalog& cat) {
  if (h != 2 && h != 3) throw Error("build_Xpq_c23: h must be 2 or 3");
  if (mode == XpqMode::TorusTorus && (p < 1 || q < 1))
    throw Error("build_Xpq_c23: p, q >= 1 required");
  if (mode == XpqMode::TorusZ && p < 0)
    throw Error("build_Xpq_c23: p >= 0 required in TorusZ mode");

  const CatalogBlock& base = cat.at("T4#2CP2bar");
  ManifoldBlock blk = base.materialize();
  LagrangianTorusData t1 = base.tori.at(0).materialize();
  blk = luttinger_surgery(blk, t1, -p);
  if (mode == XpqMode::TorusTorus) {
    LagrangianTorusData t2 = base.tori.at(1).materialize();
    t2.complement_pi1 = blk.pi1;  // surgeries accumulate in the complement
    blk = luttinger_surgery(blk, t2, -q);
  }

  EmbeddedSurfaceData s1 = base.surfaces.at(0).materialize();
  s1.complement_pi1 = blk.pi1;

  const CatalogBlock& other = cat.at(h == 2 ? "T2xS2#4CP2bar" : "T2xS2#3CP2bar");
  ManifoldBlock ob = other.materialize();
  EmbeddedSurfaceData s2 = other.surfaces.at(0).materialize();
  std::vector<Word> gluing = {s2.surface_images[0], s2.surface_images[1],
                              s2.surface_images[0].inverse(),
                              s2.surface_images[1].inverse()};

  std::string label = "X_{" + std::to_string(p) +
                      (mode == XpqMode::TorusTorus ? "," + std::to_string(q) : "") +
                      "} c1^2=" + std::to_string(h);
  ConstructionDossier d;
  d.block = fiber_sum(blk, s1, ob, s2, gluing, Minimality::yes("usher"), label);

  long long ee = h == 2 ? 10 : 9;
  long long ss = h == 2 ? -6 : -5;
  add_invariant_claims(d, "xpq23", ee, ss);
  d.check("xpq23.chi_h", d.block.chi_h_integral() && d.block.chi_h() == 1,
          "chi_h = " + std::to_string(d.block.chi_h()));
  if (h == 3)
    d.unchecked("xpq23.h3_invariants_derived",
                "e = 9, sigma = -5 derived from the summand swap; cross-checked "
                "against c1^2 = 3 and chi_h = 1");

  if (mode == XpqMode::TorusTorus) {
    bool cert = certify_product_of_cyclics(d.block.pi1, p, q, {50000, 1000000});
    if (cert) {
      d.pass("xpq23.pi1_product_of_cyclics",
             "Z_" + std::to_string(p) + " x Z_" + std::to_string(q) + " certified");
    } else if (abelian_invariants(d.block.pi1).torsion ==
                   cyclic_product_invariants(p, q) &&
               abelian_invariants(d.block.pi1).free_rank == 0) {
      d.unchecked("xpq23.pi1_product_of_cyclics",
                  "H_1 matches; enumeration beyond budget");
    } else {
      d.fail("xpq23.pi1_product_of_cyclics",
             abelian_invariants(d.block.pi1).to_string());
    }
    d.check("xpq23.bplus", d.block.b_plus() == 1,
            "b+ = " + std::to_string(d.block.b_plus()));
    add_geography_claim(d, "xpq23");
  } else {
    AbelianInvariants ai = abelian_invariants(d.block.pi1);
    AbelianInvariants expect;
    expect.free_rank = 1 + (p == 0 ? 1 : 0);
    if (p > 1) expect.torsion.push_back(p);
    d.check("xpq23.h1_z_times_zp", ai == expect, ai.to_string());
    d.check("xpq23.bplus", d.block.b_plus() == d.block.b1() + 1,
            "b+ = " + std::to_string(d.block.b_plus()));
  }
  return d;
}

GroupPresentation orbifold_presentation(const std::vector<long long>& p) {
  std::vector<std::string> names;
  std::vector<Word> rels;
  for (std::size_t i = 0; i < p.size(); ++i)
    names.push_back("x" + std::to_string(i + 1));
  Word prod;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw Error("orbifold orders must be >= 1");
    rels.push_back(Word::power_of(static_cast<int>(i), p[i]));
    prod = prod * gen(static_cast<int>(i));
  }
  rels.push_back(prod);
  return GroupPresentation(names, rels);
}

OrbifoldReport orbifold_report(const std::vector<long long>& p,
                               const EnumBudget& budget) {
  OrbifoldReport rep;
  rep.p = p;
  EnumOutcome e = enumerate_cosets(orbifold_presentation(p), budget);
  rep.finite = e.finite();
  rep.order = e.order;

  std::vector<long long> s = p;
  std::sort(s.begin(), s.end());
  if (s.size() <= 2) {
    rep.family = "cyclic";
  } else if (s.size() == 3 && s[0] == 2 && s[1] == 2) {
    rep.family = "dihedral D_" + std::to_string(s[2]);
  } else if (s == std::vector<long long>{2, 3, 3}) {
    rep.family = "A_4";
  } else if (s == std::vector<long long>{2, 3, 4}) {
    rep.family = "S_4";
  } else if (s == std::vector<long long>{2, 3, 5}) {
    rep.family = "classically attributed S_5";
    rep.note =
        "discrepancy: enumeration gives order 60 (the A_5 order); the classical "
        "attribution S_5 has order 120; recording the enumerated order only";
  } else {
    rep.family = rep.finite ? "finite" : "not certified finite";
  }
  return rep;
}

namespace {

struct RecipeState {
  ConstructionDossier d;
  SummedBlock sb;
  std::string prefix;

  void blowdown_chain(long long p, const MeridianCertificate& cert,
                      std::size_t sphere_index) {
    SphereChain chain = SphereChain::standard(p);
    chain.validate();
    if (sb.sphere_squares.at(sphere_index) != chain.squares.front())
      throw Error("recipe: tracked sphere square " +
                  std::to_string(sb.sphere_squares[sphere_index]) +
                  " does not head a C_" + std::to_string(p) + " chain");
    long long chi_before = sb.block.chi_h();
    sb.block = rational_blowdown(sb.block, p, cert);
    sb.sphere_squares.erase(sb.sphere_squares.begin() + sphere_index);
    d.check(prefix + ".chi_h_constant", sb.block.chi_h() == chi_before);
  }
};

void require_count(ConstructionDossier& d, const std::string& id, long long needed,
                   long long available) {
  if (needed > available)
    throw Error(id + ": needs " + std::to_string(needed) + " but only " +
                std::to_string(available) + " available");
  d.pass(id, std::to_string(needed) + " of " + std::to_string(available));
}

ManifoldBlock make_E2(const Catalog& cat, ConstructionDossier& d,
                      const std::string& prefix) {
  const CatalogBlock& e1 = cat.at("E(1)");
  ManifoldBlock b = e1.materialize();
  EmbeddedSurfaceData f = e1.surfaces.at(0).materialize();
  ManifoldBlock e2 = fiber_sum(b, f, b, f, f.surface_images,
                               Minimality::yes("usher"), "E(2)");
  const CatalogBlock& ce2 = cat.at("E(2)");
  d.check(prefix + ".e2_matches_catalog", e2.e == ce2.e && e2.sigma == ce2.sigma,
          "(e,sigma) = (" + std::to_string(e2.e) + "," + std::to_string(e2.sigma) + ")");
  return e2;
}

// incidence count of a section class with the chain components of a fibration
long long section_hits(const CatalogBlock& blk, const CatalogFibration& f,
                       std::size_t section) {
  long long hits = 0;
  for (std::size_t ci : f.components)
    hits += blk.classes.at(f.sections.at(section)).dot(blk.classes.at(ci));
  return hits;
}

}  // namespace

const std::vector<std::string>& rbd_example_names() {
  static const std::vector<std::string> names = {
      "z5_c2",  "z4_c1_a", "z4_c1_b", "z4_c1_c",   "z4_c2",
      "z4_c1_single", "z6_c3",  "z2_c3_b3", "z3_c3_b3", "z2_c4_b3"};
  return names;
}

ConstructionDossier build_rbd_example(const std::string& name, const Catalog& cat) {
  RecipeState st;
  st.prefix = "rbd." + name;
  const std::string& pre = st.prefix;
  ConstructionDossier& d = st.d;

  const CatalogBlock& e1cat = cat.at("E(1)");
  auto finish = [&](long long e, long long sigma, long long c1sq, long long bplus,
                    long long pi1_order) {
    st.d.block = st.sb.block;
    st.d.block.label = name;
    add_invariant_claims(st.d, pre, e, sigma);
    st.d.check(pre + ".c1sq_value", st.d.block.c1_squared() == c1sq,
               std::to_string(st.d.block.c1_squared()));
    st.d.check(pre + ".bplus", st.d.block.b_plus() == bplus,
               "b+ = " + std::to_string(st.d.block.b_plus()));
    EnumOutcome en = enumerate_cosets(st.d.block.pi1, {10000, 200000});
    st.d.check(pre + ".pi1_order",
               en.finite() && en.order == static_cast<std::size_t>(pi1_order),
               en.finite() ? "order " + std::to_string(en.order)
                           : "budget exceeded");
    if (st.d.block.b_plus() == 1) add_geography_claim(st.d, pre);
  };

  if (name == "z5_c2" || name == "z4_c1_a" || name == "z4_c1_b" ||
      name == "z4_c1_c") {
    const CatalogFibration& fib = e1cat.fibration("i5_tangent");
    ManifoldBlock e1 = e1cat.materialize();
    if (name == "z5_c2") {
      require_count(d, pre + ".sections_available", 5,
                    static_cast<long long>(fib.sections.size()));
      st.sb = sum_spheres(e1, 5, std::vector<long long>(5, -1));
      // a chain component meeting exactly one of the used sections exists
      bool have_tail = false;
      for (std::size_t ci = 0; ci < fib.components.size() && !have_tail; ++ci) {
        long long hits = 0;
        for (std::size_t s = 0; s < fib.sections.size(); ++s)
          hits += e1cat.classes.at(fib.sections[s]).dot(e1cat.classes.at(fib.components[ci]));
        have_tail = hits == 1;
      }
      d.check(pre + ".chain_tail", have_tail,
              "necklace component meeting one used section");
      st.blowdown_chain(3, {"meridian deformed across the adjacent necklace component"}, 0);
      finish(10, -6, 2, 1, 5);
    } else {
      // four sections, chosen so one necklace component meets exactly one
      require_count(d, pre + ".sections_available", 4,
                    static_cast<long long>(fib.sections.size()));
      st.sb = sum_spheres(e1, 4, std::vector<long long>(4, -1));
      if (name == "z4_c1_a") {
        st.blowdown_chain(2, {"dual -2 sphere from the necklace fiber"}, 0);
      } else if (name == "z4_c1_b") {
        st.sb = blow_up_on_sphere(st.sb, 0);  // the -1 sphere in [pt x S2] - E
        st.blowdown_chain(3, {"dual -2 sphere from the necklace fiber"}, 0);
      } else {  // z4_c1_c
        st.sb = blow_up_on_sphere(st.sb, 0);
        st.sb = blow_up_on_sphere(st.sb, 0);  // [pt x S2] - E1 - E2 is a -2 sphere
        st.blowdown_chain(4, {"dual -2 sphere from the necklace fiber"}, 0);
      }
      finish(11, -7, 1, 1, 4);
    }
  } else if (name == "z4_c2" || name == "z4_c1_single") {
    const CatalogFibration& fib = e1cat.fibration("generic");
    require_count(d, pre + ".sections_available", 8,
                  static_cast<long long>(fib.sections.size()));
    ManifoldBlock e1 = e1cat.materialize();
    st.sb = sum_spheres_grouped(e1, 4,
                                {std::vector<long long>(4, -1),
                                 std::vector<long long>(4, -1)});
    require_count(d, pre + ".matching_sphere_fishtails", 2, fib.fishtails_class_a);
    MeridianCertificate cert{
        "matching spheres from two class-a vanishing cycles"};
    if (name == "z4_c2") {
      st.blowdown_chain(2, cert, 0);
      st.blowdown_chain(2, cert, 0);
      finish(10, -6, 2, 1, 4);
    } else {
      st.blowdown_chain(2, cert, 0);
      finish(11, -7, 1, 1, 4);
    }
  } else if (name == "z6_c3") {
    const CatalogFibration& fib = e1cat.fibration("i4_tangent");
    require_count(d, pre + ".sections_available", 6,
                  static_cast<long long>(fib.sections.size()));
    ManifoldBlock e1 = e1cat.materialize();
    st.sb = sum_spheres(e1, 6, std::vector<long long>(6, -1));
    // the chain uses two consecutive necklace components; one of them must
    // meet the sewn sphere exactly once
    bool chain_ok = false;
    for (std::size_t s = 0; s < fib.sections.size() && !chain_ok; ++s)
      chain_ok = section_hits(e1cat, fib, s) == 1;
    d.check(pre + ".chain_attachment", chain_ok);
    st.blowdown_chain(4, {"meridian deformed across the remaining necklace components"}, 0);
    finish(9, -5, 3, 1, 6);
  } else if (name == "z2_c3_b3" || name == "z3_c3_b3") {
    ManifoldBlock e2 = make_E2(cat, d, pre);
    const FibrationProfile& prof = cat.at("E(2)").profile("2I6_4I2_4I1");
    if (name == "z2_c3_b3") {
      require_count(d, pre + ".sections_available", 6, prof.sections);
      require_count(d, pre + ".dual_spheres", 1, prof.dual_minus2_per_section);
      st.sb = sum_spheres_grouped(e2, 2,
                                  {{-2, -2}, {-2, -2}, {-2, -2}});
      MeridianCertificate cert{"dual -2 sphere from an I6 component"};
      st.blowdown_chain(2, cert, 0);
      st.blowdown_chain(2, cert, 0);
      st.blowdown_chain(2, cert, 0);
      finish(21, -13, 3, 3, 2);
    } else {
      require_count(d, pre + ".sections_available", 3, prof.sections);
      require_count(d, pre + ".i6_fibers", 1, prof.necklace_i6);
      st.sb = sum_spheres(e2, 3, {-2, -2, -2});
      st.blowdown_chain(
          4, {"two consecutive I6 components; the tail has a dual -2 sphere"}, 0);
      finish(21, -13, 3, 3, 3);
    }
  } else if (name == "z2_c4_b3") {
    ManifoldBlock e2 = make_E2(cat, d, pre);
    const FibrationProfile& prof = cat.at("E(2)").profile("generic24");
    require_count(d, pre + ".sections_available", 8, prof.sections);
    require_count(d, pre + ".matching_sphere_fishtails", 4, prof.fishtails_class_a);
    st.sb = sum_spheres_grouped(e2, 2, {{-2, -2}, {-2, -2}, {-2, -2}, {-2, -2}});
    MeridianCertificate cert{
        "matching spheres from four class-a vanishing cycles"};
    st.sb.block.minimal = Minimality::yes("declared along the recipe");
    st.blowdown_chain(2, cert, 0);
    st.blowdown_chain(2, cert, 0);
    st.blowdown_chain(2, cert, 0);
    st.blowdown_chain(2, cert, 0);
    finish(20, -12, 4, 3, 2);
  } else {
    throw Error("unknown recipe '" + name + "'");
  }
  return d;
}

}  // namespace surgcalc
