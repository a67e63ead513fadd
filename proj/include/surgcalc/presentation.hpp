#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "surgcalc/word.hpp"

namespace surgcalc {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

/// A finite group presentation <g_1,...,g_k | r_1,...,r_m>.
///
/// Relators are kept freely and cyclically reduced; trivial relators are
/// dropped on construction. Generator names are distinct identifiers.
class GroupPresentation {
 public:
  GroupPresentation() = default;

  GroupPresentation(std::vector<std::string> gens, std::vector<Word> relators)
      : gens_(std::move(gens)) {
    validate_names();
    for (Word& r : relators) {
      Word c = r.cyclically_reduced();
      if (c.max_gen() >= static_cast<int>(gens_.size()))
        throw Error("relator uses generator index " + std::to_string(c.max_gen()) +
                    " beyond generator count " + std::to_string(gens_.size()));
      if (!c.empty()) rels_.push_back(c);
    }
  }

  std::size_t generator_count() const { return gens_.size(); }
  std::size_t relator_count() const { return rels_.size(); }
  const std::vector<std::string>& generator_names() const { return gens_; }
  const std::vector<Word>& relators() const { return rels_; }

  int generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const GroupPresentation& o) const {
    return gens_ == o.gens_ && rels_ == o.rels_;
  }

  /// Unordered relator-set equality up to rotation and inversion.
  bool same_relator_set(const GroupPresentation& o) const {
    if (gens_ != o.gens_) return false;
    std::multiset<Word> a, b;
    for (const Word& r : rels_) a.insert(r.relator_canonical());
    for (const Word& r : o.rels_) b.insert(r.relator_canonical());
    return a == b;
  }

 private:
  void validate_names() const {
    std::set<std::string> seen;
    for (const std::string& n : gens_) {
      if (n.empty()) throw Error("empty generator name");
      if (!seen.insert(n).second) throw Error("duplicate generator name: " + n);
    }
  }

  std::vector<std::string> gens_;
  std::vector<Word> rels_;
};

/// P with extra relators appended (quotient by their normal closure).
inline GroupPresentation quotient_by(const GroupPresentation& p,
                                     const std::vector<Word>& extra) {
  std::vector<Word> rels = p.relators();
  rels.insert(rels.end(), extra.begin(), extra.end());
  return GroupPresentation(p.generator_names(), rels);
}

/// Free product: disjoint union of generators (second factor's colliding
/// names get a numeric suffix), relators of the second factor index-shifted.
inline GroupPresentation free_product(const GroupPresentation& p1,
                                      const GroupPresentation& p2) {
  std::vector<std::string> gens = p1.generator_names();
  std::set<std::string> used(gens.begin(), gens.end());
  for (const std::string& n : p2.generator_names()) {
    std::string cand = n;
    for (int suffix = 1; used.count(cand); ++suffix)
      cand = n + std::to_string(suffix);
    used.insert(cand);
    gens.push_back(cand);
  }
  int shift = static_cast<int>(p1.generator_count());
  std::vector<int> map(p2.generator_count());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i) + shift;

  std::vector<Word> rels = p1.relators();
  for (const Word& r : p2.relators()) rels.push_back(r.remapped(map));
  return GroupPresentation(gens, rels);
}

/// Shifts a word of p2 into the index space of free_product(p1, p2).
inline Word shift_into_product(const Word& w, std::size_t first_factor_gens) {
  std::vector<int> map(w.max_gen() + 1);
  for (std::size_t i = 0; i < map.size(); ++i)
    map[i] = static_cast<int>(i + first_factor_gens);
  return w.remapped(map);
}

/// Unordered generator pairs {g,h} such that some relator other than the
/// excluded index is a commutator of g and h (up to rotation/inversion).
inline std::set<std::pair<int, int>> commuting_pairs(
    const std::vector<Word>& relators, int exclude = -1) {
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (static_cast<int>(i) == exclude) continue;
    const Word& r = relators[i];
    if (r.size() != 4) continue;
    int g0 = r.gen_at(0), g1 = r.gen_at(1);
    if (g0 == g1) continue;
    // shape x^e y^d x^-e y^-d after cyclic normalization
    if (r.gen_at(2) == g0 && r.gen_at(3) == g1 &&
        r.letter_at(2) == -r.letter_at(0) && r.letter_at(3) == -r.letter_at(1)) {
      pairs.insert(g0 < g1 ? std::make_pair(g0, g1) : std::make_pair(g1, g0));
    }
  }
  return pairs;
}

}  // namespace surgcalc
