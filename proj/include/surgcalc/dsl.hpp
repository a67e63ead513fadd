#pragma once

#include <string>

#include "surgcalc/presentation.hpp"

namespace surgcalc {

/// Presentation DSL.
///
///   presentation := '<' gen-list '|' word-list '>'
///   gen-list     := empty | name (',' name)*
///   word-list    := empty | word (',' word)*
///   word         := atom*
///   atom         := name power? | '[' word ',' word ']' power? | '(' word ')' power?
///   power        := '^' int
///   name         := [A-Za-z][A-Za-z0-9_']*
///
/// Whitespace is insignificant. '[u,v]' is the commutator u^-1 v^-1 u v.
/// print_presentation emits the same grammar; parse(print(P)) == P.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

GroupPresentation parse_presentation(const std::string& text);

/// Parses a single word over the generators of `p`.
Word parse_word(const std::string& text, const GroupPresentation& p);

std::string print_presentation(const GroupPresentation& p);
std::string print_word(const Word& w, const GroupPresentation& p);
std::string print_word(const Word& w, const std::vector<std::string>& names);

}  // namespace surgcalc
