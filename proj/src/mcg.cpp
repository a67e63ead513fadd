#include "surgcalc/mcg.hpp"

#include <cctype>
#include <sstream>

namespace surgcalc {

namespace {

SL2Matrix twist_power(Twist t, long long e) {
  // t_a^e = [[1,e],[0,1]], t_b^e = [[1,0],[-e,1]]
  SL2Matrix m;
  if (t == Twist::A)
    m.b = e;
  else
    m.c = -e;
  return m;
}

}  // namespace

SL2Matrix to_matrix(const MonodromyWord& w) {
  SL2Matrix m;
  for (const auto& l : w.letters()) m = m * twist_power(l.twist, l.exp);
  return m;
}

bool is_identity_factorization(const MonodromyWord& w) {
  return to_matrix(w).is_identity();
}

MonodromyWord conjugate(const MonodromyWord& w, const MonodromyWord& u) {
  return u * w * u.inverse();
}

FiberType recognize_fiber(const MonodromyWord& segment) {
  // peel exact inverse letter pairs off both ends
  std::vector<MonodromyWord::Letter> ls = segment.letters();
  while (ls.size() >= 3 && ls.front().twist == ls.back().twist &&
         ls.front().exp == -ls.back().exp) {
    ls.erase(ls.begin());
    ls.pop_back();
  }
  if (ls.size() != 1) return FiberType::unrecognized();
  long long e = ls[0].exp;
  FiberType guess = (e == 1 || e == -1) ? FiberType::fishtail()
                    : e >= 2            ? FiberType::necklace(e)
                                        : FiberType::unrecognized();
  if (guess.tag == FiberType::NotRecognized) return guess;
  SL2Matrix m = to_matrix(segment);
  if (m.trace() != 2 || m.is_identity()) return FiberType::unrecognized();
  return guess;
}

long long euler_number(const MonodromyWord& w) {
  if (!is_identity_factorization(w))
    throw Error("not a global monodromy: word is not an identity factorization");
  return w.twist_count();
}

long long euler_number(const std::vector<MonodromyWord>& segments) {
  MonodromyWord prod;
  for (const MonodromyWord& s : segments) prod = prod * s;
  if (!is_identity_factorization(prod))
    throw Error("not a global monodromy: segments do not multiply to the identity");
  long long n = 0;
  for (const MonodromyWord& s : segments) {
    FiberType f = recognize_fiber(s);
    switch (f.tag) {
      case FiberType::Fishtail:
        n += 1;
        break;
      case FiberType::Necklace:
        n += f.k;
        break;
      default:
        throw Error("unrecognized fiber segment '" + print_monodromy(s) + "'");
    }
  }
  return n;
}

namespace {

class MScanner {
 public:
  explicit MScanner(const std::string& s) : s_(s) {}
  void skip_ws() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  char peek() {
    skip_ws();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  char take() {
    char c = peek();
    ++p_;
    return c;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++p_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& m) {
    throw Error("monodromy word: " + m + " at offset " + std::to_string(p_));
  }
  long long integer() {
    skip_ws();
    bool neg = false;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) neg = s_[p_++] == '-';
    if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_])))
      fail("expected integer");
    long long v = 0;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      v = v * 10 + (s_[p_++] - '0');
      if (v > 1000000) fail("exponent overflow (limit 10^6)");
    }
    return neg ? -v : v;
  }
  bool eof() {
    skip_ws();
    return p_ >= s_.size();
  }

 private:
  const std::string& s_;
  std::size_t p_ = 0;
};

MonodromyWord parse_m_word(MScanner& sc);

MonodromyWord parse_m_atom(MScanner& sc) {
  char c = sc.peek();
  if (c == '(') {
    sc.expect('(');
    MonodromyWord w = parse_m_word(sc);
    sc.expect(')');
    if (sc.accept('^')) {
      char n = sc.peek();
      if (n == '(' || n == 'a' || n == 'b') {
        MonodromyWord u = parse_m_atom(sc);
        return conjugate(w, u);
      }
      return w.pow(sc.integer());
    }
    return w;
  }
  if (c == 'a' || c == 'b') {
    sc.take();
    Twist t = c == 'a' ? Twist::A : Twist::B;
    long long e = 1;
    if (sc.accept('^')) e = sc.integer();
    return MonodromyWord::twist(t, e);
  }
  sc.fail("expected 'a', 'b' or '('");
}

MonodromyWord parse_m_word(MScanner& sc) {
  MonodromyWord w;
  for (;;) {
    char c = sc.peek();
    if (c == '\0' || c == ')') return w;
    w = w * parse_m_atom(sc);
  }
}

}  // namespace

MonodromyWord parse_monodromy(const std::string& text) {
  MScanner sc(text);
  MonodromyWord w = parse_m_word(sc);
  if (!sc.eof()) sc.fail("trailing input");
  return w;
}

std::string print_monodromy(const MonodromyWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << static_cast<char>(l.twist);
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

}  // namespace surgcalc
