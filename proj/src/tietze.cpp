#include "surgcalc/tietze.hpp"

#include <algorithm>
#include <map>

namespace surgcalc {

namespace {

struct Engine {
  std::vector<std::string> gens;
  std::vector<Word> rels;
  std::vector<Word> images;  // original generator -> word over current gens
  std::size_t steps = 0;
  std::size_t budget;

  Engine(const GroupPresentation& p, std::size_t b) : budget(b) {
    gens = p.generator_names();
    rels = p.relators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      images.push_back(Word::letter(static_cast<int>(i)));
  }

  void normalize() {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      auto pairs = commuting_pairs(rels, static_cast<int>(i));
      rels[i] = commutation_reduce(rels[i], pairs).cyclically_reduced();
    }
    std::vector<Word> kept;
    std::map<Word, bool> seen;
    for (const Word& r : rels) {
      if (r.empty()) continue;
      Word c = r.relator_canonical();
      if (seen.emplace(c, true).second) kept.push_back(r);
    }
    rels = std::move(kept);
  }

  // Eliminates current generator g using relator r = (cyclic) g^e w, w free
  // of g: substitute g -> w^-e everywhere, drop g and r.
  void eliminate(std::size_t ri, std::size_t pos) {
    Word r = rels[ri].rotated(pos);  // starts with the g-letter
    int g = r.gen_at(0);
    int e = r.sign_at(0);
    Word w;
    for (std::size_t i = 1; i < r.size(); ++i) w.push_letter(r.letter_at(i));
    Word repl = e > 0 ? w.inverse() : w;  // g = repl, repl avoids g

    // substitution table straight into the shrunk index space
    std::vector<int> shrink(gens.size());
    for (std::size_t h = 0; h < gens.size(); ++h)
      shrink[h] = h < static_cast<std::size_t>(g) ? static_cast<int>(h)
                  : h == static_cast<std::size_t>(g) ? -1
                                                     : static_cast<int>(h) - 1;
    Word repl_new = repl.remapped(shrink);
    std::vector<Word> subst(gens.size());
    for (std::size_t h = 0; h < gens.size(); ++h)
      subst[h] = static_cast<int>(h) == g ? repl_new
                                          : Word::letter(shrink[h]);

    rels.erase(rels.begin() + ri);
    for (Word& x : rels) x = x.substituted(subst);
    for (Word& x : images) x = x.substituted(subst);
    gens.erase(gens.begin() + g);
  }

  // Candidates are ranked by relator length first (shortest relator wins),
  // then by the substitution growth the elimination would cause elsewhere.
  // cheap_only restricts to eliminations that cannot blow the presentation
  // up: the generator occurs nowhere else or its definition is a single
  // letter or shorter.
  bool try_eliminate(bool cheap_only) {
    struct Cand {
      std::size_t len, cost, ri, pos;
    };
    std::vector<Cand> cands;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      const Word& r = rels[ri];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        int g = r.gen_at(pos);
        if (r.occurrences(g) != 1) continue;
        std::size_t occ = 0;
        for (std::size_t rj = 0; rj < rels.size(); ++rj)
          if (rj != ri) occ += rels[rj].occurrences(g);
        if (cheap_only && occ != 0 && r.size() > 2) continue;
        cands.push_back({r.size(), occ * (r.size() - 1), ri, pos});
      }
    }
    if (cands.empty()) return false;
    const Cand* best = &cands[0];
    for (const Cand& c : cands) {
      auto key = [](const Cand& x) { return std::tie(x.len, x.cost, x.ri, x.pos); };
      if (key(c) < key(*best)) best = &c;
    }
    eliminate(best->ri, best->pos);
    return true;
  }

  // Rewrites one relator through the definition g = w read off another
  // relator (g occurring once there), keeping the result only if the
  // commutation-aware reduction makes it strictly shorter.
  bool try_substitute_reduce() {
    for (std::size_t si = 0; si < rels.size(); ++si) {
      const Word& s = rels[si];
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        int g = s.gen_at(pos);
        if (s.occurrences(g) != 1) continue;
        Word rot = s.rotated(pos);
        Word w;
        for (std::size_t i = 1; i < rot.size(); ++i) w.push_letter(rot.letter_at(i));
        Word def = rot.sign_at(0) > 0 ? w.inverse() : w;  // g = def
        std::vector<Word> subst(gens.size());
        for (std::size_t h = 0; h < gens.size(); ++h)
          subst[h] = static_cast<int>(h) == g ? def : Word::letter(static_cast<int>(h));
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
          if (ri == si || rels[ri].occurrences(g) == 0) continue;
          Word cand = rels[ri].substituted(subst);
          auto pairs = commuting_pairs(rels, static_cast<int>(ri));
          cand = commutation_reduce(cand, pairs).cyclically_reduced();
          if (cand.size() < rels[ri].size()) {
            rels[ri] = cand;
            return true;
          }
        }
      }
    }
    return false;
  }

  // Rewrites a strict-majority cyclic subword of one relator inside another.
  bool try_subword_reduce() {
    for (std::size_t si = 0; si < rels.size(); ++si) {
      const Word s = rels[si];
      if (s.size() < 2) continue;
      for (const Word& base : {s, s.inverse()}) {
        for (std::size_t rot = 0; rot < base.size(); ++rot) {
          Word u = base.rotated(rot);
          // longest strict-majority prefix first
          for (std::size_t plen = u.size() - 1; 2 * plen > u.size(); --plen) {
            for (std::size_t ri = 0; ri < rels.size(); ++ri) {
              if (ri == si) continue;
              const Word& r = rels[ri];
              if (r.size() < plen) continue;
              for (std::size_t at = 0; at + plen <= r.size(); ++at) {
                bool match = true;
                for (std::size_t k = 0; k < plen && match; ++k)
                  match = r.letter_at(at + k) == u.letter_at(k);
                if (!match) continue;
                Word out;
                for (std::size_t k = 0; k < at; ++k) out.push_letter(r.letter_at(k));
                for (std::size_t k = u.size(); k > plen; --k)
                  out.push_letter(-u.letter_at(k - 1));  // complement inverse
                for (std::size_t k = at + plen; k < r.size(); ++k)
                  out.push_letter(r.letter_at(k));
                if (out.size() < r.size()) {
                  rels[ri] = out;
                  return true;
                }
              }
            }
          }
        }
      }
    }
    return false;
  }

  bool run() {  // returns budget_exhausted
    for (;;) {
      normalize();
      if (steps >= budget) return true;
      if (try_eliminate(true)) {
        ++steps;
        continue;
      }
      if (try_subword_reduce()) {
        ++steps;
        continue;
      }
      if (try_substitute_reduce()) {
        ++steps;
        continue;
      }
      if (try_eliminate(false)) {
        ++steps;
        continue;
      }
      return false;
    }
  }
};

}  // namespace

Word TietzeResult::rewrite(const Word& w) const { return w.substituted(images); }

TietzeResult tietze_simplify(const GroupPresentation& p, std::size_t budget) {
  Engine e(p, budget);
  TietzeResult res;
  res.budget_exhausted = e.run();
  res.presentation = GroupPresentation(e.gens, e.rels);
  res.images = std::move(e.images);
  return res;
}

}  // namespace surgcalc
