#pragma once

#include "surgcalc/block.hpp"

namespace surgcalc {

/// 1/m Luttinger surgery along a Lagrangian torus: e and sigma are copied
/// unchanged (structurally), pi1 becomes the complement group modulo the
/// normal closure of mu * lambda'^m, and minimality / Kodaira class carry
/// over. The first Betti number may move by at most one; a larger jump
/// signals inconsistent gluing data and raises an error.
ManifoldBlock luttinger_surgery(const ManifoldBlock& block,
                                const LagrangianTorusData& torus, long long m);

/// Gompf symplectic sum along genus-g surfaces of opposite square.
/// (e, sigma) adds plus (4g - 4, 0). pi1 is the free product of the two
/// complement groups with the surface generators identified through
/// `gluing` (a word in s2's complement per generator of s1's surface) and
/// the meridians multiplied: mu1 * mu2 = 1.
ManifoldBlock fiber_sum(const ManifoldBlock& b1, const EmbeddedSurfaceData& s1,
                        const ManifoldBlock& b2, const EmbeddedSurfaceData& s2,
                        const std::vector<Word>& gluing,
                        Minimality declared_minimality = Minimality::unknown(),
                        const std::string& label = "fiber_sum");

/// Blow-up: e += 1, sigma -= 1, pi1 unchanged, never minimal.
ManifoldBlock blow_up(const ManifoldBlock& block);

struct MeridianCertificate {
  std::string evidence;  // why the chain meridian dies in the complement
};

/// Rational blowdown of a C_p chain with a meridian-triviality certificate:
/// e -= p-1, sigma += p-1, pi1 unchanged. chi_h and b^+ invariance and the
/// c1^2 delta are recomputed and asserted. Refuses without a certificate:
/// the general pi1 transform is not modeled.
ManifoldBlock rational_blowdown(const ManifoldBlock& block, long long p,
                                const MeridianCertificate& certificate);

struct SummedBlock {
  ManifoldBlock block;
  std::vector<long long> sphere_squares;  // one entry per sewn sphere
};

/// Sum along a braided torus of multiplicity p in T^2 x S^2: requires the
/// input pi1 to enumerate to the trivial group; the result has pi1 = Z_p,
/// unchanged (e, sigma), and one sphere of square n_1 + ... + n_p sewn from
/// the p given spheres.
SummedBlock sum_spheres(const ManifoldBlock& block, long long p,
                        const std::vector<long long>& sphere_squares);

/// Several disjoint sewn spheres at once: each group must have exactly p
/// members; one sphere per group.
SummedBlock sum_spheres_grouped(const ManifoldBlock& block, long long p,
                                const std::vector<std::vector<long long>>& groups);

/// Blow-up at a point of a tracked sphere: the sphere's square drops by one.
SummedBlock blow_up_on_sphere(const SummedBlock& sb, std::size_t sphere_index);

}  // namespace surgcalc
