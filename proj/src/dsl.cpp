#include "surgcalc/dsl.hpp"

#include <cctype>
#include <sstream>

namespace surgcalc {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      advance();
  }

  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' (" + what + ")");
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  bool at_name_start() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c));
  }

  std::string name() {
    skip_ws();
    if (!at_name_start()) fail("expected generator name");
    std::string out;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
        out += c;
        advance();
      } else {
        break;
      }
    }
    return out;
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      advance();
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer exponent");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("exponent overflow (limit 10^6)");
      advance();
    }
    return neg ? -v : v;
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class WordParser {
 public:
  WordParser(Scanner& sc, const std::vector<std::string>& gens)
      : sc_(sc), gens_(gens) {}

  // Parses atoms until a delimiter (',', '>', ']', ')') or end of input.
  Word word() {
    Word w;
    for (;;) {
      char c = sc_.peek();
      if (c == '\0' || c == ',' || c == '>' || c == ']' || c == ')') return w;
      w = w * atom();
    }
  }

 private:
  Word atom() {
    char c = sc_.peek();
    Word base;
    if (c == '[') {
      sc_.expect('[', "commutator");
      Word u = word();
      sc_.expect(',', "commutator");
      Word v = word();
      sc_.expect(']', "commutator");
      base = Word::commutator(u, v);
    } else if (c == '(') {
      sc_.expect('(', "group");
      base = word();
      sc_.expect(')', "group");
    } else {
      std::string n = sc_.name();
      int g = -1;
      for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == n) g = static_cast<int>(i);
      if (g < 0) sc_.fail("unknown generator name '" + n + "'");
      base = Word::letter(g);
    }
    if (sc_.accept('^')) return base.pow(sc_.integer());
    return base;
  }

  Scanner& sc_;
  const std::vector<std::string>& gens_;
};

void check_name(Scanner& sc, const std::string& n) {
  if (n.empty()) sc.fail("empty generator name");
}

}  // namespace

GroupPresentation parse_presentation(const std::string& text) {
  Scanner sc(text);
  sc.expect('<', "presentation");
  std::vector<std::string> gens;
  if (sc.peek() != '|' && sc.peek() != '>') {
    for (;;) {
      std::string n = sc.name();
      check_name(sc, n);
      for (const std::string& g : gens)
        if (g == n) sc.fail("duplicate generator name '" + n + "'");
      gens.push_back(n);
      if (!sc.accept(',')) break;
    }
  }
  std::vector<Word> rels;
  if (sc.accept('|')) {
    if (sc.peek() != '>') {
      WordParser wp(sc, gens);
      for (;;) {
        rels.push_back(wp.word());
        if (!sc.accept(',')) break;
      }
    }
  }
  sc.expect('>', "presentation");
  if (!sc.eof()) sc.fail("trailing input after presentation");
  return GroupPresentation(gens, rels);
}

Word parse_word(const std::string& text, const GroupPresentation& p) {
  Scanner sc(text);
  WordParser wp(sc, p.generator_names());
  Word w = wp.word();
  if (!sc.eof()) sc.fail("trailing input after word");
  return w;
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w.letter_at(j) == w.letter_at(i)) ++j;
    long long e = static_cast<long long>(j - i) * w.sign_at(i);
    if (!first) os << ' ';
    first = false;
    os << names[w.gen_at(i)];
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

std::string print_word(const Word& w, const GroupPresentation& p) {
  return print_word(w, p.generator_names());
}

std::string print_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << "< ";
  const auto& gens = p.generator_names();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i];
  }
  os << " | ";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i) os << ", ";
    os << print_word(p.relators()[i], gens);
  }
  os << " >";
  return os.str();
}

}  // namespace surgcalc
