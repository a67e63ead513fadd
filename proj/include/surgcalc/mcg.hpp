#pragma once

#include <string>
#include <vector>

#include "surgcalc/int_matrix.hpp"

namespace surgcalc {

/// Dehn-twist word calculus in the genus-1 mapping class group, realized
/// exactly as SL(2,Z) through t_a = [[1,1],[0,1]], t_b = [[1,0],[-1,1]].
/// Both defining relations (braid, (t_a t_b)^6 = 1) hold for this pair, and
/// equality of mapping classes reduces to matrix equality.

enum class Twist : char { A = 'a', B = 'b' };

struct SL2Matrix {
  Int a = 1, b = 0, c = 0, d = 1;  // row-major [[a,b],[c,d]]

  bool operator==(const SL2Matrix& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }

  SL2Matrix operator*(const SL2Matrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  SL2Matrix inverse() const { return {d, -b, -c, a}; }  // det = 1
};

/// Word in t_a, t_b with nonzero exponents and adjacent letters on distinct
/// twists (runs merged on construction).
class MonodromyWord {
 public:
  struct Letter {
    Twist twist;
    long long exp;
    bool operator==(const Letter& o) const {
      return twist == o.twist && exp == o.exp;
    }
  };

  MonodromyWord() = default;

  void push(Twist t, long long e) {
    if (e == 0) return;
    if (!ls_.empty() && ls_.back().twist == t) {
      ls_.back().exp += e;
      if (ls_.back().exp == 0) ls_.pop_back();
    } else {
      ls_.push_back({t, e});
    }
  }

  static MonodromyWord twist(Twist t, long long e = 1) {
    MonodromyWord w;
    w.push(t, e);
    return w;
  }

  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }
  const std::vector<Letter>& letters() const { return ls_; }
  bool operator==(const MonodromyWord& o) const { return ls_ == o.ls_; }

  friend MonodromyWord operator*(const MonodromyWord& u, const MonodromyWord& v) {
    MonodromyWord w = u;
    for (const Letter& l : v.ls_) w.push(l.twist, l.exp);
    return w;
  }

  MonodromyWord inverse() const {
    MonodromyWord w;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.push(it->twist, -it->exp);
    return w;
  }

  MonodromyWord pow(long long n) const {
    MonodromyWord base = n >= 0 ? *this : inverse();
    MonodromyWord w;
    for (long long i = 0, m = n >= 0 ? n : -n; i < m; ++i) w = w * base;
    return w;
  }

  /// Total twist count: sum of |exponent| over letters.
  long long twist_count() const {
    long long n = 0;
    for (const Letter& l : ls_) n += l.exp >= 0 ? l.exp : -l.exp;
    return n;
  }

 private:
  std::vector<Letter> ls_;
};

struct FiberType {
  enum Tag { Fishtail, Necklace, NotRecognized } tag = NotRecognized;
  long long k = 0;  // Necklace size, >= 2

  bool operator==(const FiberType& o) const { return tag == o.tag && k == o.k; }
  static FiberType fishtail() { return {Fishtail, 0}; }
  static FiberType necklace(long long k) { return {Necklace, k}; }
  static FiberType unrecognized() { return {NotRecognized, 0}; }
};

SL2Matrix to_matrix(const MonodromyWord& w);
bool is_identity_factorization(const MonodromyWord& w);

/// u w u^-1, merged.
MonodromyWord conjugate(const MonodromyWord& w, const MonodromyWord& u);

/// Syntactic recognition of elliptic fiber monodromies: u t^{+-1} u^-1 is a
/// fishtail, u t^k u^-1 (k >= 2) a necklace I_k; a matrix cross-check
/// (trace 2, non-identity) guards both. Anything else is NotRecognized.
FiberType recognize_fiber(const MonodromyWord& segment);

/// Total Dehn-twist count of a global factorization, each |exponent| counted.
/// Throws unless w is an identity factorization.
long long euler_number(const MonodromyWord& w);

/// Twist count of a segmented factorization: fishtails count 1, necklaces
/// count k. The concatenation must be an identity factorization and every
/// segment must be recognized.
long long euler_number(const std::vector<MonodromyWord>& segments);

/// CLI word syntax: whitespace-separated atoms `a`, `b`, `a^-1`, `a^5`,
/// `(w)^n` (power), `(w)^u` with u a letter or parenthesized word, meaning
/// the conjugation u w u^-1.
MonodromyWord parse_monodromy(const std::string& text);
std::string print_monodromy(const MonodromyWord& w);

}  // namespace surgcalc
