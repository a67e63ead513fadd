#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surgcalc/int_matrix.hpp"
#include "surgcalc/presentation.hpp"

namespace surgcalc {

struct Minimality {
  enum Tag { Yes, No, Unknown } tag = Unknown;
  std::string provenance;  // set when Yes

  static Minimality yes(std::string why) { return {Yes, std::move(why)}; }
  static Minimality no() { return {No, {}}; }
  static Minimality unknown() { return {Unknown, {}}; }
  bool operator==(const Minimality& o) const {
    return tag == o.tag && provenance == o.provenance;
  }
};

enum class Kodaira { MinusInfinity, Zero, One, Two, Unknown };

std::string to_string(Kodaira k);

/// A 4-manifold building block: Euler number, signature, fundamental-group
/// presentation, plus declared minimality and Kodaira class. Every other
/// invariant (b_1, b_2, b^+, b^-, c_1^2, chi_h) is derived.
struct ManifoldBlock {
  std::string label;
  long long e = 0;
  long long sigma = 0;
  GroupPresentation pi1;
  Minimality minimal = Minimality::unknown();
  Kodaira kodaira = Kodaira::Unknown;

  long long b1() const {
    return static_cast<long long>(abelian_invariants(pi1).free_rank);
  }
  long long b2() const { return e - 2 + 2 * b1(); }
  long long b_plus() const { return (b2() + sigma) / 2; }
  long long b_minus() const { return (b2() - sigma) / 2; }
  long long c1_squared() const { return 2 * e + 3 * sigma; }
  bool chi_h_integral() const { return (e + sigma) % 4 == 0; }
  long long chi_h() const {
    if (!chi_h_integral())
      throw Error("chi_h is not integral for block '" + label + "'");
    return (e + sigma) / 4;
  }
  /// (b2 + sigma) and (b2 - sigma) must both be even and nonnegative.
  bool well_formed() const {
    long long b = b2();
    return b >= 0 && (b + sigma) % 2 == 0 && b + sigma >= 0 && b - sigma >= 0;
  }
};

/// Combinatorial gluing data for an embedded genus-g surface: the complement
/// presentation, the images of the 2g standard surface generators in it, and
/// the meridian word. Construction-specific facts, supplied by catalogs.
struct EmbeddedSurfaceData {
  long long genus = 0;
  long long self_intersection = 0;
  GroupPresentation complement_pi1;
  std::vector<Word> surface_images;  // exactly 2*genus words
  Word meridian;

  void validate() const {
    if (surface_images.size() != static_cast<std::size_t>(2 * genus))
      throw Error("surface data: expected " + std::to_string(2 * genus) +
                  " generator images, got " + std::to_string(surface_images.size()));
    int ng = static_cast<int>(complement_pi1.generator_count());
    for (const Word& w : surface_images)
      if (w.max_gen() >= ng) throw Error("surface image outside complement group");
    if (meridian.max_gen() >= ng) throw Error("meridian outside complement group");
  }
};

/// Lagrangian torus gluing data: parallel copy of the surgery curve under the
/// Lagrangian framing and the torus meridian, in the complement group.
struct LagrangianTorusData {
  GroupPresentation complement_pi1;
  Word lambda_parallel;
  Word meridian;
};

/// Chain of sphere classes for a rational blowdown: [-(p+2), -2, ..., -2],
/// length p-1.
struct SphereChain {
  long long p = 2;
  std::vector<long long> squares;

  static SphereChain standard(long long p) {
    if (p < 2) throw Error("sphere chain needs p >= 2");
    SphereChain c;
    c.p = p;
    c.squares.push_back(-(p + 2));
    for (long long i = 0; i < p - 2; ++i) c.squares.push_back(-2);
    return c;
  }

  void validate() const {
    if (p < 2 || squares.size() != static_cast<std::size_t>(p - 1))
      throw Error("sphere chain has wrong length");
    if (squares.front() != -(p + 2)) throw Error("sphere chain head square != -(p+2)");
    for (std::size_t i = 1; i < squares.size(); ++i)
      if (squares[i] != -2) throw Error("sphere chain tail square != -2");
  }
};

enum class Sign { Minus, Zero, Plus };

/// Symplectic Kodaira dimension from the signs of K.[w] and K.K on a minimal
/// model. The pair (0, +) cannot arise from the defining case split.
Kodaira kodaira_dimension(Sign k_dot_omega, Sign k_squared);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = {}) {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
};

/// Geography constraints for a minimal block with kappa >= 0:
/// c_1^2 >= 0; when b^+ = 1 also 4 b_1 + b^- <= 9 and b_1 in {0, 2};
/// chi_h integrality.
CheckReport geography_check(const ManifoldBlock& block);

struct SizeBoundsReport {
  long long b1 = 0;
  long long lower_bound = 0;        // max(ceil((4 b1 - 4)/5), 1), parity-adjusted
  long long gompf_upper = 0;        // 2(k + m) + b1 + 1
  long long stratified_bound = 0;   // b1 + 1
  std::optional<long long> free_table;  // free groups only
};

/// Size bounds for the minimal b^+ of a symplectic 4-manifold with the given
/// fundamental group. For free groups F_n the tabulated sum construction
/// gives 2n+1 (even n != 4), 2n+2 (odd n), 11 (n = 4).
SizeBoundsReport group_size_bounds(const GroupPresentation& p);

}  // namespace surgcalc
