#include "surgcalc/coset_enum.hpp"

#include <deque>
#include <numeric>

namespace surgcalc {

namespace {

constexpr std::uint32_t kUndef = 0xffffffffu;

// Mutable enumeration state. Rows are 2k wide; column 2g is the action of
// generator g, column 2g+1 of its inverse. Dead cosets are forwarded through
// a union-find vector with path compression onto the smallest representative.
struct State {
  std::size_t ngens;
  std::vector<std::vector<std::uint32_t>> tab;
  std::vector<std::uint32_t> fwd;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> coincidences;
  std::size_t live = 0;
  std::size_t definitions = 0;

  explicit State(std::size_t k) : ngens(k) { new_coset(); }

  std::uint32_t new_coset() {
    tab.emplace_back(2 * ngens, kUndef);
    fwd.push_back(static_cast<std::uint32_t>(tab.size() - 1));
    ++live;
    return static_cast<std::uint32_t>(tab.size() - 1);
  }

  std::uint32_t rep(std::uint32_t c) {
    while (fwd[c] != c) {
      fwd[c] = fwd[fwd[c]];
      c = fwd[c];
    }
    return c;
  }

  static int col(int letter) {
    int g = letter > 0 ? letter - 1 : -letter - 1;
    return 2 * g + (letter > 0 ? 0 : 1);
  }
  static int inv_col(int letter) { return col(-letter); }

  std::uint32_t get(std::uint32_t c, int letter) {
    std::uint32_t t = tab[c][col(letter)];
    return t == kUndef ? kUndef : rep(t);
  }

  // Records c . letter = d together with the inverse entry; queues a
  // coincidence if a different image is already present.
  void deduce(std::uint32_t c, int letter, std::uint32_t d) {
    c = rep(c);
    d = rep(d);
    std::uint32_t& slot = tab[c][col(letter)];
    if (slot != kUndef) {
      std::uint32_t old = rep(slot);
      if (old != d) coincidences.emplace_back(old, d);
      slot = d;
    } else {
      slot = d;
    }
    std::uint32_t& islot = tab[d][inv_col(letter)];
    if (islot != kUndef) {
      std::uint32_t old = rep(islot);
      if (old != c) coincidences.emplace_back(old, c);
      islot = c;
    } else {
      islot = c;
    }
  }

  // Merges queued coincident cosets, migrating table rows.
  void process_coincidences() {
    while (!coincidences.empty()) {
      auto [a, b] = coincidences.front();
      coincidences.pop_front();
      a = rep(a);
      b = rep(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);  // keep the smaller index
      fwd[b] = a;
      --live;
      for (std::size_t cc = 0; cc < 2 * ngens; ++cc) {
        std::uint32_t t = tab[b][cc];
        if (t == kUndef) continue;
        int letter = (cc % 2 == 0) ? static_cast<int>(cc / 2) + 1
                                   : -(static_cast<int>(cc / 2) + 1);
        deduce(a, letter, rep(t));
      }
    }
  }

  bool dead(std::uint32_t c) { return rep(c) != c; }
};

}  // namespace

EnumOutcome enumerate_cosets(const GroupPresentation& p, const EnumBudget& budget) {
  EnumOutcome out;
  const std::size_t k = p.generator_count();
  if (k == 0) {
    out.tag = EnumOutcome::Finite;
    out.order = 1;
    out.table.ngens = 0;
    out.table.row = {{}};
    return out;
  }

  State st(k);
  const auto& rels = p.relators();

  // Scan relators at every live coset, defining cosets on gaps (HLT). The
  // outer loop restarts whenever the table changed, until everything closes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t c = 0; c < st.tab.size(); ++c) {
      if (st.dead(c)) continue;
      for (const Word& r : rels) {
        std::uint32_t cur = st.rep(c);
        if (st.dead(c)) break;
        // trace forward as far as defined
        std::size_t i = 0;
        std::uint32_t front = cur;
        while (i < r.size()) {
          std::uint32_t nxt = st.get(front, r.letter_at(i));
          if (nxt == kUndef) break;
          front = nxt;
          ++i;
        }
        if (i == r.size()) {
          if (front != st.rep(c)) {
            st.coincidences.emplace_back(front, st.rep(c));
            st.process_coincidences();
            changed = true;
          }
          continue;
        }
        // trace backward from the end
        std::size_t j = r.size();
        std::uint32_t back = st.rep(c);
        while (j > i) {
          std::uint32_t prv = st.get(back, -r.letter_at(j - 1));
          if (prv == kUndef) break;
          back = prv;
          --j;
        }
        if (j == i) {
          // both traces met: the end cosets coincide
          if (front != back) {
            st.coincidences.emplace_back(front, back);
            st.process_coincidences();
            changed = true;
          }
        } else if (j == i + 1) {
          // gap of one: deduction closes the trace
          st.deduce(front, r.letter_at(i), back);
          st.process_coincidences();
          changed = true;
        } else {
          // define cosets through the gap
          while (j > i + 1) {
            if (st.live >= budget.max_cosets ||
                st.definitions >= budget.max_definitions)
              return out;  // BudgetExceeded
            std::uint32_t n = st.new_coset();
            ++st.definitions;
            st.deduce(front, r.letter_at(i), n);
            front = st.rep(n);
            ++i;
          }
          st.deduce(front, r.letter_at(i), back);
          st.process_coincidences();
          changed = true;
        }
      }
    }
    // fill remaining undefined entries (ensures closure for free factors)
    if (!changed) {
      for (std::uint32_t c = 0; c < st.tab.size() && !changed; ++c) {
        if (st.dead(c)) continue;
        for (std::size_t cc = 0; cc < 2 * k; ++cc) {
          if (st.tab[c][cc] != kUndef && !st.dead(st.tab[c][cc])) continue;
          if (st.tab[c][cc] != kUndef) {
            st.tab[c][cc] = st.rep(st.tab[c][cc]);
            continue;
          }
          if (st.live >= budget.max_cosets || st.definitions >= budget.max_definitions)
            return out;
          std::uint32_t n = st.new_coset();
          ++st.definitions;
          int letter = (cc % 2 == 0) ? static_cast<int>(cc / 2) + 1
                                     : -(static_cast<int>(cc / 2) + 1);
          st.deduce(c, letter, n);
          st.process_coincidences();
          changed = true;
          break;
        }
      }
      if (changed) continue;
    }
  }

  // compact live cosets
  std::vector<std::uint32_t> index(st.tab.size(), kUndef);
  std::uint32_t next = 0;
  for (std::uint32_t c = 0; c < st.tab.size(); ++c)
    if (!st.dead(c)) index[c] = next++;
  CosetTable table;
  table.ngens = k;
  table.row.resize(next, std::vector<std::uint32_t>(2 * k, kUndef));
  for (std::uint32_t c = 0; c < st.tab.size(); ++c) {
    if (st.dead(c)) continue;
    for (std::size_t cc = 0; cc < 2 * k; ++cc) {
      std::uint32_t t = st.tab[c][cc];
      if (t == kUndef) return out;  // not closed; treat as budget failure
      table.row[index[c]][cc] = index[st.rep(t)];
    }
  }

  // independent post hoc verification: every relator trace closes at every
  // coset and every column is a permutation
  for (std::uint32_t c = 0; c < next; ++c)
    for (const Word& r : rels)
      if (table.trace(c, r) != c) return out;
  for (std::size_t cc = 0; cc < 2 * k; ++cc) {
    std::vector<bool> hit(next, false);
    for (std::uint32_t c = 0; c < next; ++c) {
      std::uint32_t t = table.row[c][cc];
      if (t >= next || hit[t]) return out;
      hit[t] = true;
    }
  }

  out.tag = EnumOutcome::Finite;
  out.order = next;
  out.table = std::move(table);
  return out;
}

std::vector<Int> cyclic_product_invariants(long long p, long long q) {
  // invariant factors of Z_p x Z_q: (gcd, lcm), dropping 1s
  long long g = std::gcd(p, q);
  long long l = (p / (g == 0 ? 1 : g)) * q;
  std::vector<Int> out;
  if (g > 1) out.push_back(g);
  if (l > 1) out.push_back(l);
  return out;
}

bool certify_product_of_cyclics(const GroupPresentation& pres, long long p,
                                long long q, const EnumBudget& budget) {
  if (p < 1 || q < 1) return false;
  AbelianInvariants ai = abelian_invariants(pres);
  if (ai.free_rank != 0) return false;
  if (ai.torsion != cyclic_product_invariants(p, q)) return false;
  EnumOutcome e = enumerate_cosets(pres, budget);
  if (!e.finite()) return false;
  return e.order == static_cast<std::size_t>(p) * static_cast<std::size_t>(q);
}

}  // namespace surgcalc
