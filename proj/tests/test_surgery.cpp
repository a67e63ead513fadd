#include <doctest.h>

#include <random>

#include "surgcalc/coset_enum.hpp"
#include "surgcalc/dsl.hpp"
#include "surgcalc/surgery.hpp"
#include "surgcalc/tietze.hpp"

using namespace surgcalc;

namespace {
ManifoldBlock simple_block(const std::string& label, long long e, long long s,
                           const std::string& pres) {
  ManifoldBlock b;
  b.label = label;
  b.e = e;
  b.sigma = s;
  b.pi1 = parse_presentation(pres);
  return b;
}
}  // namespace

TEST_CASE("luttinger surgery on the 4-torus model") {
  ManifoldBlock t4 = simple_block(
      "T4", 0, 0, "<x,y,w,z | [x,y],[x,w],[x,z],[y,w],[y,z],[w,z]>");
  LagrangianTorusData torus;
  torus.complement_pi1 = parse_presentation("<x,y,w,z | >");
  torus.meridian = parse_word("[x,w]", torus.complement_pi1);
  torus.lambda_parallel = parse_word("y", torus.complement_pi1);

  ManifoldBlock out = luttinger_surgery(t4, torus, 1);
  CHECK(out.e == 0);
  CHECK(out.sigma == 0);
  CHECK(out.b1() == 3);  // [x,w] y kills one rank
  CHECK(t4.b1() - out.b1() == 1);

  // m = 0 with trivial meridian leaves pi1 unchanged up to equivalence
  LagrangianTorusData triv;
  triv.complement_pi1 = t4.pi1;
  triv.meridian = Word();
  triv.lambda_parallel = parse_word("y", t4.pi1);
  ManifoldBlock same = luttinger_surgery(t4, triv, 0);
  CHECK(abelian_invariants(same.pi1) == abelian_invariants(t4.pi1));

  // inconsistent gluing data: complement rank far from the block's rank
  LagrangianTorusData bad;
  bad.complement_pi1 = parse_presentation("<x,y,w,z | >");
  bad.meridian = parse_word("x y", bad.complement_pi1);
  bad.lambda_parallel = Word();
  ManifoldBlock tiny = simple_block("pt", 0, 0, "<x | x>");
  CHECK_THROWS_AS(luttinger_surgery(tiny, bad, 0), Error);
  (void)same;
}

TEST_CASE("kodaira and minimality carried through luttinger") {
  ManifoldBlock b = simple_block("B", 0, 0, "<x,y | [x,y]>");
  b.kodaira = Kodaira::One;
  b.minimal = Minimality::yes("declared");
  LagrangianTorusData t;
  t.complement_pi1 = b.pi1;
  t.meridian = Word();
  t.lambda_parallel = parse_word("x", b.pi1);
  ManifoldBlock out = luttinger_surgery(b, t, 1);
  CHECK(out.kodaira == Kodaira::One);
  CHECK(out.minimal.tag == Minimality::Yes);
}

TEST_CASE("fiber sum arithmetic and meridian relator") {
  ManifoldBlock e1 = simple_block("E(1)", 12, -8, "<|>");
  EmbeddedSurfaceData f;
  f.genus = 1;
  f.self_intersection = 0;
  f.complement_pi1 = parse_presentation("<|>");
  f.surface_images = {Word(), Word()};
  f.meridian = Word();

  ManifoldBlock e2 = fiber_sum(e1, f, e1, f, f.surface_images);
  CHECK(e2.e == 24);
  CHECK(e2.sigma == -16);
  CHECK(e2.b_plus() == 3);

  // symmetry of (e, sigma) under swapping the summands
  ManifoldBlock t2s2 = simple_block("T2xS2", 0, 0, "<c,d|[c,d]>");
  EmbeddedSurfaceData g;
  g.genus = 1;
  g.self_intersection = 0;
  g.complement_pi1 = parse_presentation("<c,d | [c,d]>");
  g.surface_images = {parse_word("c", g.complement_pi1),
                      parse_word("d", g.complement_pi1)};
  g.meridian = Word();
  ManifoldBlock ab = fiber_sum(e1, f, t2s2, g, g.surface_images);
  ManifoldBlock ba = fiber_sum(t2s2, g, e1, f, f.surface_images);
  CHECK(ab.e == ba.e);
  CHECK(ab.sigma == ba.sigma);

  // genus-2 sum gains four
  EmbeddedSurfaceData h2;
  h2.genus = 2;
  h2.self_intersection = 0;
  h2.complement_pi1 = parse_presentation("<|>");
  h2.surface_images = {Word(), Word(), Word(), Word()};
  h2.meridian = Word();
  ManifoldBlock s = fiber_sum(e1, h2, e1, h2, h2.surface_images);
  CHECK(s.e == 12 + 12 + 4);

  // mismatches are rejected
  CHECK_THROWS_AS(fiber_sum(e1, f, e1, h2, h2.surface_images), Error);
  EmbeddedSurfaceData off = f;
  off.self_intersection = 1;
  CHECK_THROWS_AS(fiber_sum(e1, off, e1, f, f.surface_images), Error);
}

TEST_CASE("blow up") {
  ManifoldBlock b = simple_block("T2xS2", 0, 0, "<c,d|[c,d]>");
  ManifoldBlock out = b;
  for (int i = 0; i < 4; ++i) out = blow_up(out);
  CHECK(out.e == 4);
  CHECK(out.sigma == -4);
  CHECK(out.minimal.tag == Minimality::No);
  CHECK(out.pi1 == b.pi1);
  CHECK(blow_up(b).c1_squared() == b.c1_squared() - 1);
}

TEST_CASE("rational blowdown deltas") {
  ManifoldBlock b = simple_block("X", 12, -8, "<|>");
  MeridianCertificate cert{"dual -2 sphere"};
  ManifoldBlock p2 = rational_blowdown(b, 2, cert);
  CHECK(p2.e == 11);
  CHECK(p2.sigma == -7);
  CHECK(p2.c1_squared() == 1);
  ManifoldBlock p3 = rational_blowdown(b, 3, cert);
  CHECK(p3.e == 10);
  CHECK(p3.sigma == -6);
  CHECK(p3.c1_squared() == 2);
  CHECK_THROWS_AS(rational_blowdown(b, 2, MeridianCertificate{}), Error);
  CHECK_THROWS_AS(rational_blowdown(b, 1, cert), Error);
}

TEST_CASE("rational blowdown invariance properties") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long long> ed(-30, 60), pd(2, 9);
  MeridianCertificate cert{"test certificate"};
  for (int t = 0; t < 1000; ++t) {
    long long e = ed(rng);
    long long sig = ed(rng);
    sig -= ((e + sig) % 4 + 4) % 4;  // make e + sigma divisible by 4
    ManifoldBlock b = simple_block("R", e, sig, "<|>");
    long long p = pd(rng);
    ManifoldBlock out = rational_blowdown(b, p, cert);
    CHECK(out.sigma - b.sigma == p - 1);
    CHECK(out.c1_squared() - b.c1_squared() == p - 1);
    CHECK(out.chi_h() == b.chi_h());
    CHECK(out.b_plus() == b.b_plus());
  }
}

TEST_CASE("sphere chains") {
  SphereChain c3 = SphereChain::standard(3);
  CHECK(c3.squares == std::vector<long long>{-5, -2});
  SphereChain c2 = SphereChain::standard(2);
  CHECK(c2.squares == std::vector<long long>{-4});
  CHECK_THROWS_AS(SphereChain::standard(1), Error);
}

TEST_CASE("summing spheres along a braided torus") {
  ManifoldBlock e1 = simple_block("E(1)", 12, -8, "<|>");
  SummedBlock s5 = sum_spheres(e1, 5, std::vector<long long>(5, -1));
  CHECK(s5.block.e == 12);
  CHECK(s5.block.sigma == -8);
  CHECK(s5.sphere_squares == std::vector<long long>{-5});
  EnumOutcome en = enumerate_cosets(s5.block.pi1);
  REQUIRE(en.finite());
  CHECK(en.order == 5);

  SummedBlock s1 = sum_spheres(e1, 1, {-3});
  EnumOutcome e1o = enumerate_cosets(s1.block.pi1);
  REQUIRE(e1o.finite());
  CHECK(e1o.order == 1);
  CHECK(s1.sphere_squares == std::vector<long long>{-3});

  SummedBlock s4 = sum_spheres(e1, 4, std::vector<long long>(4, -1));
  CHECK(s4.sphere_squares == std::vector<long long>{-4});
  EnumOutcome e4 = enumerate_cosets(s4.block.pi1);
  CHECK(e4.order == 4);

  // the hypothesis pi1 = 1 is enforced
  ManifoldBlock z2 = simple_block("X", 12, -8, "<x | x^2>");
  CHECK_THROWS_AS(sum_spheres(z2, 2, {-1, -1}), Error);

  // group size must match the braiding multiplicity
  CHECK_THROWS_AS(sum_spheres(e1, 3, {-1, -1}), Error);

  SummedBlock up = blow_up_on_sphere(s4, 0);
  CHECK(up.block.e == 13);
  CHECK(up.sphere_squares == std::vector<long long>{-5});
}

TEST_CASE("kodaira dimension from sign data") {
  CHECK(kodaira_dimension(Sign::Minus, Sign::Plus) == Kodaira::MinusInfinity);
  CHECK(kodaira_dimension(Sign::Minus, Sign::Zero) == Kodaira::MinusInfinity);
  CHECK(kodaira_dimension(Sign::Minus, Sign::Minus) == Kodaira::MinusInfinity);
  CHECK(kodaira_dimension(Sign::Zero, Sign::Minus) == Kodaira::MinusInfinity);
  CHECK(kodaira_dimension(Sign::Plus, Sign::Minus) == Kodaira::MinusInfinity);
  CHECK(kodaira_dimension(Sign::Zero, Sign::Zero) == Kodaira::Zero);
  CHECK(kodaira_dimension(Sign::Plus, Sign::Zero) == Kodaira::One);
  CHECK(kodaira_dimension(Sign::Plus, Sign::Plus) == Kodaira::Two);
  CHECK_THROWS_AS(kodaira_dimension(Sign::Zero, Sign::Plus), Error);
}

TEST_CASE("geography") {
  ManifoldBlock a = simple_block("A", 12, -8, "<|>");
  CHECK(geography_check(a).all_pass());  // b1=0, b-=9

  // b1 = 2 with b+ = 1 forces b- = 13, violating 4 b1 + b- <= 9
  ManifoldBlock bad = simple_block("B", 12, -12, "<x,y | [x,y]>");
  REQUIRE(bad.b_plus() == 1);
  CHECK(bad.b_minus() == 13);
  CHECK_FALSE(geography_check(bad).all_pass());

  ManifoldBlock c = simple_block("C", 11, -7, "<|>");
  CHECK(geography_check(c).all_pass());
  CHECK(c.c1_squared() == 1);
}

TEST_CASE("group size bounds") {
  SizeBoundsReport f2 = group_size_bounds(parse_presentation("<x,y|>"));
  CHECK(f2.b1 == 2);
  REQUIRE(f2.free_table.has_value());
  CHECK(*f2.free_table == 5);
  CHECK(f2.stratified_bound == 3);
  CHECK(f2.gompf_upper == 7);

  SizeBoundsReport f3 = group_size_bounds(parse_presentation("<x,y,z|>"));
  CHECK(*f3.free_table == 8);
  CHECK(f3.stratified_bound == 4);

  SizeBoundsReport f4 = group_size_bounds(parse_presentation("<x,y,z,w|>"));
  CHECK(*f4.free_table == 11);

  SizeBoundsReport tor = group_size_bounds(parse_presentation("<x | x^2>"));
  CHECK_FALSE(tor.free_table.has_value());
  CHECK(tor.lower_bound == 1);  // b1 = 0, parity of b1+1
}

TEST_CASE("luttinger surgery moves b+ and b1 together") {
  ManifoldBlock t4 = simple_block(
      "T4", 0, 0, "<x,y,w,z | [x,y],[x,w],[x,z],[y,w],[y,z],[w,z]>");
  LagrangianTorusData torus;
  torus.complement_pi1 = parse_presentation("<x,y,w,z | >");
  torus.meridian = parse_word("[x,w]", torus.complement_pi1);
  torus.lambda_parallel = parse_word("y", torus.complement_pi1);
  ManifoldBlock out = luttinger_surgery(t4, torus, 1);
  CHECK(out.b_plus() - t4.b_plus() == out.b1() - t4.b1());
  CHECK(out.b2() - t4.b2() == 2 * (out.b1() - t4.b1()));
}

TEST_CASE("chi_h cross-checks against (b+ - b1 + 1)/2") {
  for (auto [e, s, pres] : std::vector<std::tuple<long long, long long, const char*>>{
           {12, -8, "<|>"},
           {24, -16, "<|>"},
           {10, -6, "<x | x^5>"},
           {0, 0, "<c,d | [c,d]>"}}) {
    ManifoldBlock b = simple_block("X", e, s, pres);
    REQUIRE(b.chi_h_integral());
    CHECK(2 * b.chi_h() == b.b_plus() - b.b1() + 1);
  }
}
