#pragma once

#include "surgcalc/bridge.hpp"
#include "surgcalc/catalog.hpp"
#include "surgcalc/coset_enum.hpp"
#include "surgcalc/dossier.hpp"
#include "surgcalc/surgery.hpp"

namespace surgcalc {

struct YgResult {
  ManifoldBlock block;          // e = 0, sigma = 0, Kodaira 1, minimal
  EmbeddedSurfaceData torus;    // the genus-1 sum locus; meridian = surface relator
};

/// Luttinger-surgered Sigma_g x T2 with surgery exponents p_i, q_i >= 0.
YgResult build_Yg(long long g, const std::vector<long long>& p,
                  const std::vector<long long>& q);

/// Y_g summed with E(1) along the torus: e = 12, sigma = -8, c1^2 = 0 and
/// pi1 = <a_i, b_i | a_i^{p_i}, b_i^{q_i}, prod [a_i, b_i]>.
ConstructionDossier build_Xg(long long g, const std::vector<long long>& p,
                             const std::vector<long long>& q,
                             const Catalog& cat = builtin_catalog());

/// Stratified arbitrary-group construction: bridge moves on the relator
/// curves, one Luttinger surgery per handle and per relator, then the E(1)
/// sum. Produces pi1 = G' surjecting onto G with b1(G') = b1(G).
ConstructionDossier build_XG(const GroupPresentation& g,
                             const Catalog& cat = builtin_catalog());

/// Variant for presentations <x_1..x_{k+m} | l_1..l_m> whose relators only
/// involve x_1..x_k: realizes pi1 = G itself (checked at abelianization and
/// enumeration level).
ConstructionDossier build_XG_moregen(const GroupPresentation& g,
                                     const Catalog& cat = builtin_catalog());

/// Positive-c1^2 variant over Sigma_2 x Sigma_n summed with Z''(1,1):
/// e = 4k'+1, sigma = -1, c1^2 = 8k'-1, chi_h = k'.
ConstructionDossier build_XplusG(const GroupPresentation& g,
                                 const Catalog& cat = builtin_catalog());

/// Genus-2 sum of (T2xS2)#4CP2bar and (T2xS2)#3CP2bar twisted by the
/// (a, d) solution of dp - 2aq = pq - 1: pi1 = Z_p x Z_q, (e, sigma) =
/// (11, -7), c1^2 = 1. Requires gcd(p, 2q) = 1.
ConstructionDossier build_Xpq_c1(long long p, long long q,
                                 const Catalog& cat = builtin_catalog());

struct DiophantineSolution {
  long long a = 0, d = 0;
};
/// Solves d*p - 2*a*q = p*q - 1 with a normalized into [0, p).
DiophantineSolution solve_gluing_diophantine(long long p, long long q);

enum class XpqMode { TorusTorus, TorusZ };

/// Double (or single, TorusZ) Luttinger surgery on T4#2CP2bar summed with
/// (T2xS2)#4CP2bar (h = 2) or (T2xS2)#3CP2bar (h = 3): pi1 = Z_p x Z_q with
/// c1^2 = h, or pi1 = Z x Z_p with b^+ = 2 in TorusZ mode.
ConstructionDossier build_Xpq_c23(int h, long long p, long long q,
                                  XpqMode mode = XpqMode::TorusTorus,
                                  const Catalog& cat = builtin_catalog());

/// Named rational-blowdown recipes over the E(1)/E(2) fibration data.
ConstructionDossier build_rbd_example(const std::string& name,
                                      const Catalog& cat = builtin_catalog());
const std::vector<std::string>& rbd_example_names();

/// 2-orbifold group <x_1..x_k | x_i^{p_i}, x_1 x_2 ... x_k>.
GroupPresentation orbifold_presentation(const std::vector<long long>& p);

struct OrbifoldReport {
  std::vector<long long> p;
  bool finite = false;
  std::size_t order = 0;
  std::string family;  // classical attribution for the finite cases
  std::string note;    // discrepancy notes
};

/// Enumerates the orbifold group and reports the classical finite-family
/// attribution; flags the (2,3,5) order-60 vs S_5 (order 120) mismatch.
OrbifoldReport orbifold_report(const std::vector<long long>& p,
                               const EnumBudget& budget = EnumBudget{});

}  // namespace surgcalc
