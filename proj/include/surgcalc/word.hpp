#pragma once

#include <cstdint>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

namespace surgcalc {

/// A freely reduced word in a free group.
///
/// Letters are stored as signed integers: +(g+1) is generator g, -(g+1) its
/// inverse, with g a 0-based generator index. The empty word is the identity.
/// Every constructor and operation maintains free reduction.
class Word {
 public:
  Word() = default;

  /// Builds a word from a raw (not necessarily reduced) letter sequence.
  static Word from_letters(const std::vector<int>& raw) {
    Word w;
    for (int l : raw) w.push_letter(l);
    return w;
  }

  /// Single letter: generator `gen` with sign +1 or -1.
  static Word letter(int gen, int sign = +1) {
    Word w;
    w.push_letter(sign >= 0 ? gen + 1 : -(gen + 1));
    return w;
  }

  static Word power_of(int gen, long long e) {
    Word w;
    int l = e >= 0 ? gen + 1 : -(gen + 1);
    for (long long i = 0, n = e >= 0 ? e : -e; i < n; ++i) w.push_letter(l);
    return w;
  }

  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }
  int letter_at(std::size_t i) const { return ls_[i]; }
  int gen_at(std::size_t i) const { return std::abs(ls_[i]) - 1; }
  int sign_at(std::size_t i) const { return ls_[i] > 0 ? +1 : -1; }
  const std::vector<int>& letters() const { return ls_; }

  /// Appends one signed letter, cancelling against the tail.
  void push_letter(int l) {
    if (!ls_.empty() && ls_.back() == -l)
      ls_.pop_back();
    else
      ls_.push_back(l);
  }

  Word inverse() const {
    Word w;
    w.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(-*it);
    return w;
  }

  friend Word operator*(const Word& u, const Word& v) {
    Word w = u;
    for (int l : v.ls_) w.push_letter(l);
    return w;
  }

  Word pow(long long e) const {
    Word base = e >= 0 ? *this : inverse();
    Word w;
    for (long long i = 0, n = e >= 0 ? e : -e; i < n; ++i) w = w * base;
    return w;
  }

  /// u^-1 v^-1 u v.
  static Word commutator(const Word& u, const Word& v) {
    return u.inverse() * v.inverse() * u * v;
  }

  /// u w u^-1.
  Word conjugated_by(const Word& u) const { return u * *this * u.inverse(); }

  bool operator==(const Word& o) const { return ls_ == o.ls_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const { return ls_ < o.ls_; }

  /// Exponent sum of generator g.
  long long exponent_sum(int gen) const {
    long long s = 0;
    for (int l : ls_) {
      if (std::abs(l) - 1 == gen) s += l > 0 ? 1 : -1;
    }
    return s;
  }

  /// Number of occurrences of generator g, ignoring sign.
  int occurrences(int gen) const {
    int n = 0;
    for (int l : ls_)
      if (std::abs(l) - 1 == gen) ++n;
    return n;
  }

  /// Largest generator index used, or -1 for the empty word.
  int max_gen() const {
    int m = -1;
    for (int l : ls_) m = std::max(m, std::abs(l) - 1);
    return m;
  }

  std::set<int> generators_used() const {
    std::set<int> s;
    for (int l : ls_) s.insert(std::abs(l) - 1);
    return s;
  }

  /// Strips w = u t u^-1 down to t (cyclic reduction).
  Word cyclically_reduced() const {
    Word w = *this;
    while (w.ls_.size() >= 2 && w.ls_.front() == -w.ls_.back()) {
      w.ls_.erase(w.ls_.begin());
      w.ls_.pop_back();
    }
    return w;
  }

  /// Rotation by k: letters [k..) then [0..k).
  Word rotated(std::size_t k) const {
    Word w;
    for (std::size_t i = 0; i < ls_.size(); ++i)
      w.push_letter(ls_[(i + k) % ls_.size()]);
    return w;
  }

  /// Canonical representative of the relator class: the lexicographically
  /// least word among all rotations of w and of w^-1. Two relators define
  /// the same normal closure contribution iff their canonical forms match.
  Word relator_canonical() const {
    Word c = cyclically_reduced();
    if (c.empty()) return c;
    Word best = c;
    for (const Word& base : {c, c.inverse()}) {
      for (std::size_t k = 0; k < base.size(); ++k) {
        Word r = base.rotated(k);
        if (r.ls_ < best.ls_) best = r;
      }
    }
    return best;
  }

  /// Substitutes each generator by the given image word (index = generator).
  Word substituted(const std::vector<Word>& images) const {
    Word out;
    for (int l : ls_) {
      const Word& im = images[std::abs(l) - 1];
      Word piece = l > 0 ? im : im.inverse();
      for (int x : piece.ls_) out.push_letter(x);
    }
    return out;
  }

  /// Remaps generator indices; `map[g] < 0` deletes the letter.
  Word remapped(const std::vector<int>& map) const {
    Word out;
    for (int l : ls_) {
      int g = map[std::abs(l) - 1];
      if (g < 0) continue;
      out.push_letter(l > 0 ? g + 1 : -(g + 1));
    }
    return out;
  }

 private:
  std::vector<int> ls_;
};

/// Free reduction of a raw letter sequence (identity on already-reduced input).
inline Word free_reduce(const std::vector<int>& raw) { return Word::from_letters(raw); }

/// Reduces a word using commutation facts: a subword x B x^-1 collapses to B
/// whenever every letter of B commutes with x according to `commuting`, a set
/// of unordered generator pairs. Sound whenever each pair's commutator is a
/// consequence of the ambient relators.
inline Word commutation_reduce(const Word& w,
                               const std::set<std::pair<int, int>>& commuting) {
  auto commutes = [&](int g, int h) {
    if (g == h) return true;
    auto p = g < h ? std::make_pair(g, h) : std::make_pair(h, g);
    return commuting.count(p) > 0;
  };
  std::vector<int> ls(w.letters());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < ls.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        if (ls[j] == -ls[i]) {
          bool ok = true;
          for (std::size_t k = i + 1; k < j && ok; ++k)
            ok = commutes(std::abs(ls[i]) - 1, std::abs(ls[k]) - 1);
          if (ok) {
            ls.erase(ls.begin() + j);
            ls.erase(ls.begin() + i);
            changed = true;
            break;
          }
        }
        if (!commutes(std::abs(ls[i]) - 1, std::abs(ls[j]) - 1) &&
            std::abs(ls[i]) != std::abs(ls[j]))
          break;  // letters beyond j can no longer slide next to position i
      }
    }
  }
  return Word::from_letters(ls);
}

}  // namespace surgcalc
