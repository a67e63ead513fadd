#include "surgcalc/block.hpp"

#include <sstream>

namespace surgcalc {

std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::MinusInfinity: return "-infinity";
    case Kodaira::Zero: return "0";
    case Kodaira::One: return "1";
    case Kodaira::Two: return "2";
    default: return "unknown";
  }
}

Kodaira kodaira_dimension(Sign k_dot_omega, Sign k_squared) {
  if (k_dot_omega == Sign::Minus || k_squared == Sign::Minus)
    return Kodaira::MinusInfinity;
  if (k_dot_omega == Sign::Zero && k_squared == Sign::Zero) return Kodaira::Zero;
  if (k_dot_omega == Sign::Plus && k_squared == Sign::Zero) return Kodaira::One;
  if (k_dot_omega == Sign::Plus && k_squared == Sign::Plus) return Kodaira::Two;
  throw Error("inconsistent sign data: K.[w]=0 with K.K>0 is unreachable");
}

CheckReport geography_check(const ManifoldBlock& block) {
  CheckReport rep;
  long long c1 = block.c1_squared();
  rep.add("c1_squared_nonnegative", c1 >= 0, "c1^2 = " + std::to_string(c1));
  rep.add("chi_h_integral", block.chi_h_integral(),
          "e + sigma = " + std::to_string(block.e + block.sigma));
  if (block.b_plus() == 1) {
    long long b1 = block.b1(), bm = block.b_minus();
    rep.add("bplus1_4b1_plus_bminus_le_9", 4 * b1 + bm <= 9,
            "4*" + std::to_string(b1) + " + " + std::to_string(bm));
    rep.add("bplus1_b1_in_0_2", b1 == 0 || b1 == 2, "b1 = " + std::to_string(b1));
  }
  return rep;
}

SizeBoundsReport group_size_bounds(const GroupPresentation& p) {
  SizeBoundsReport r;
  r.b1 = static_cast<long long>(abelian_invariants(p).free_rank);
  long long k = static_cast<long long>(p.generator_count());
  long long m = static_cast<long long>(p.relator_count());

  // b^+ >= (4 b1 - 4)/5, b^+ >= 1, and b^+ = b1 + 1 (mod 2)
  long long raw = 4 * r.b1 - 4;
  raw = raw <= 0 ? 0 : (raw + 4) / 5;
  long long lb = raw < 1 ? 1 : raw;
  if (((lb ^ (r.b1 + 1)) & 1) != 0) ++lb;
  r.lower_bound = lb;

  r.gompf_upper = 2 * (k + m) + r.b1 + 1;
  r.stratified_bound = r.b1 + 1;

  if (m == 0) {
    long long n = k;
    if (n == 4)
      r.free_table = 11;
    else if (n % 2 == 0)
      r.free_table = 2 * n + 1;
    else
      r.free_table = 2 * n + 2;
  }
  return r;
}

}  // namespace surgcalc
