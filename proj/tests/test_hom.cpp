#include <doctest.h>

#include "surgcalc/dsl.hpp"
#include "surgcalc/hom.hpp"

using namespace surgcalc;

TEST_CASE("identity hom is certified") {
  GroupPresentation p = parse_presentation("<x | x^5>");
  GroupHom h(p, p, {Word::letter(0)});
  CHECK(check_hom(h) == HomCheck::Certified);
}

TEST_CASE("Z onto Z_2 is certified") {
  GroupPresentation z = parse_presentation("<x | >");
  GroupPresentation z2 = parse_presentation("<y | y^2>");
  GroupHom h(z, z2, {Word::letter(0)});
  CHECK(check_hom(h) == HomCheck::Certified);
}

TEST_CASE("nontrivial abelianized image fails") {
  GroupPresentation src = parse_presentation("<x | x^2>");
  GroupPresentation z = parse_presentation("<y | >");
  GroupHom h(src, z, {Word::letter(0)});  // x^2 -> y^2 != 0 in Z
  CHECK(check_hom(h) == HomCheck::Failed);
}

TEST_CASE("infinite target degrades to the abelian check") {
  GroupPresentation src = parse_presentation("<x,y | [x,y]>");
  GroupPresentation z2 = parse_presentation("<a,b | [a,b]>");
  GroupHom h(src, z2, {Word::letter(0), Word::letter(1)});
  CHECK(check_hom(h, {200, 2000}) == HomCheck::AbelianOnly);
}

TEST_CASE("structural validation") {
  GroupPresentation p = parse_presentation("<x | x^2>");
  CHECK_THROWS_AS(GroupHom(p, p, {}), Error);
  CHECK_THROWS_AS(GroupHom(p, p, {Word::letter(3)}), Error);
}
