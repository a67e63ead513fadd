#include "surgcalc/surgery.hpp"

#include <cstdlib>

#include "surgcalc/coset_enum.hpp"
#include "surgcalc/tietze.hpp"

namespace surgcalc {

ManifoldBlock luttinger_surgery(const ManifoldBlock& block,
                                const LagrangianTorusData& torus, long long m) {
  ManifoldBlock out = block;
  Word rel = torus.meridian * torus.lambda_parallel.pow(m);
  out.pi1 = quotient_by(torus.complement_pi1, {rel});
  long long db1 = out.b1() - block.b1();
  if (db1 < -1 || db1 > 1)
    throw Error("luttinger surgery: |delta b1| = " + std::to_string(std::llabs(db1)) +
                " > 1, gluing data inconsistent");
  return out;
}

ManifoldBlock fiber_sum(const ManifoldBlock& b1, const EmbeddedSurfaceData& s1,
                        const ManifoldBlock& b2, const EmbeddedSurfaceData& s2,
                        const std::vector<Word>& gluing, Minimality declared_minimality,
                        const std::string& label) {
  s1.validate();
  s2.validate();
  if (s1.genus != s2.genus)
    throw Error("fiber sum: genus mismatch (" + std::to_string(s1.genus) + " vs " +
                std::to_string(s2.genus) + ")");
  if (s1.self_intersection + s2.self_intersection != 0)
    throw Error("fiber sum: surface squares do not cancel");
  if (gluing.size() != s1.surface_images.size())
    throw Error("fiber sum: need one gluing word per surface generator");

  ManifoldBlock out;
  out.label = label;
  out.e = b1.e + b2.e + 4 * s1.genus - 4;
  out.sigma = b1.sigma + b2.sigma;
  out.minimal = declared_minimality;
  out.kodaira = Kodaira::Unknown;

  GroupPresentation prod = free_product(s1.complement_pi1, s2.complement_pi1);
  std::size_t shift = s1.complement_pi1.generator_count();
  std::vector<Word> extra;
  for (std::size_t i = 0; i < gluing.size(); ++i) {
    if (gluing[i].max_gen() >= static_cast<int>(s2.complement_pi1.generator_count()))
      throw Error("fiber sum: gluing word outside second complement group");
    extra.push_back(s1.surface_images[i] *
                    shift_into_product(gluing[i], shift).inverse());
  }
  extra.push_back(s1.meridian * shift_into_product(s2.meridian, shift));
  out.pi1 = quotient_by(prod, extra);
  return out;
}

ManifoldBlock blow_up(const ManifoldBlock& block) {
  ManifoldBlock out = block;
  out.e += 1;
  out.sigma -= 1;
  out.minimal = Minimality::no();
  return out;
}

ManifoldBlock rational_blowdown(const ManifoldBlock& block, long long p,
                                const MeridianCertificate& certificate) {
  if (p < 2) throw Error("rational blowdown needs p >= 2");
  if (certificate.evidence.empty())
    throw Error("rational blowdown refused: no meridian-triviality certificate; "
                "the general pi1 transform is out of scope");
  ManifoldBlock out = block;
  out.e -= p - 1;
  out.sigma += p - 1;

  if (out.c1_squared() != block.c1_squared() + (p - 1))
    throw Error("rational blowdown: c1^2 delta check failed");
  if (block.chi_h_integral() &&
      (!out.chi_h_integral() || out.chi_h() != block.chi_h()))
    throw Error("rational blowdown: chi_h changed");
  if (out.b_plus() != block.b_plus())
    throw Error("rational blowdown: b^+ changed");
  return out;
}

SummedBlock sum_spheres_grouped(const ManifoldBlock& block, long long p,
                                const std::vector<std::vector<long long>>& groups) {
  if (p < 1) throw Error("sum_spheres needs p >= 1");
  EnumOutcome e = enumerate_cosets(block.pi1, {100000, 1000000});
  if (!e.finite() || e.order != 1)
    throw Error("sum_spheres requires simply connected input (pi1 of '" +
                block.label + "' not certified trivial)");

  SummedBlock out;
  out.block = block;
  out.block.label = block.label + "+T_" + std::to_string(p);
  // pi1 of the sum: <b, c | c, b^p, [b,c]>, i.e. Z_p
  GroupPresentation zp(
      {"b", "c"},
      {Word::letter(1), Word::power_of(0, p),
       Word::commutator(Word::letter(0), Word::letter(1))});
  out.block.pi1 = tietze_simplify(zp).presentation;
  for (const auto& g : groups) {
    if (static_cast<long long>(g.size()) != p)
      throw Error("sum_spheres: each sewn group needs exactly p spheres");
    long long total = 0;
    for (long long s : g) total += s;
    out.sphere_squares.push_back(total);
  }
  return out;
}

SummedBlock sum_spheres(const ManifoldBlock& block, long long p,
                        const std::vector<long long>& sphere_squares) {
  return sum_spheres_grouped(block, p, {sphere_squares});
}

SummedBlock blow_up_on_sphere(const SummedBlock& sb, std::size_t sphere_index) {
  if (sphere_index >= sb.sphere_squares.size())
    throw Error("blow_up_on_sphere: no such sphere");
  SummedBlock out = sb;
  out.block = blow_up(sb.block);
  out.sphere_squares[sphere_index] -= 1;
  return out;
}

}  // namespace surgcalc
