#pragma once

#include "surgcalc/coset_enum.hpp"
#include "surgcalc/int_matrix.hpp"
#include "surgcalc/presentation.hpp"

namespace surgcalc {

/// Homomorphism candidate between presented groups: one target word per
/// source generator. Whether it is well defined (relators map to 1) is a
/// checked property, not structural; see check_hom.
struct GroupHom {
  GroupPresentation source;
  GroupPresentation target;
  std::vector<Word> images;  // one word in target per source generator

  GroupHom(GroupPresentation s, GroupPresentation t, std::vector<Word> im)
      : source(std::move(s)), target(std::move(t)), images(std::move(im)) {
    if (images.size() != source.generator_count())
      throw Error("hom image count != source generator count");
    for (const Word& w : images)
      if (w.max_gen() >= static_cast<int>(target.generator_count()))
        throw Error("hom image uses generator outside target");
  }

  Word apply(const Word& w) const { return w.substituted(images); }
};

enum class HomCheck {
  Certified,    // every relator image proved trivial by coset enumeration
  AbelianOnly,  // relator images vanish in H_1(target); enumeration unavailable
  Failed        // some relator image is nonzero already in H_1(target)
};

/// Three-valued well-definedness check.
///
/// Certified requires the target to enumerate within budget; the coset table
/// over the trivial subgroup is the regular representation, so a word is
/// trivial iff it traces coset 0 back to itself.
inline HomCheck check_hom(const GroupHom& h, const EnumBudget& budget = EnumBudget{}) {
  IntMatrix tgt = exponent_matrix(h.target);
  std::vector<Word> images;
  for (const Word& r : h.source.relators()) images.push_back(h.apply(r));

  for (const Word& w : images)
    if (!in_column_lattice(tgt, exponent_vector(w, h.target.generator_count())))
      return HomCheck::Failed;

  EnumOutcome e = enumerate_cosets(h.target, budget);
  if (!e.finite()) return HomCheck::AbelianOnly;
  for (const Word& w : images)
    if (e.table.trace(0, w) != 0) return HomCheck::Failed;
  return HomCheck::Certified;
}

}  // namespace surgcalc
