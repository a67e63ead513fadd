#include <doctest.h>

#include <random>

#include "surgcalc/mcg.hpp"

using namespace surgcalc;

namespace {
MonodromyWord W(const std::string& s) { return parse_monodromy(s); }
}

TEST_CASE("defining relations hold exactly") {
  CHECK(to_matrix(MonodromyWord{}).is_identity());
  CHECK(is_identity_factorization(W("(a b)^6")));
  CHECK(to_matrix(W("a b a")) == to_matrix(W("b a b")));
  CHECK_FALSE(is_identity_factorization(W("a")));
}

TEST_CASE("twist matrices are unimodular") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(0, 12), e(-4, 4);
  for (int t = 0; t < 300; ++t) {
    MonodromyWord w;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      w.push(rng() % 2 ? Twist::A : Twist::B, e(rng));
    CHECK(to_matrix(w).det() == 1);
    // homomorphism and inverse
    MonodromyWord v;
    int m2 = len(rng);
    for (int i = 0; i < m2; ++i)
      v.push(rng() % 2 ? Twist::A : Twist::B, e(rng));
    CHECK(to_matrix(w * v) == to_matrix(w) * to_matrix(v));
    CHECK(to_matrix(w.inverse()) == to_matrix(w).inverse());
  }
}

TEST_CASE("the necklace-producing relation") {
  MonodromyWord lhs = W("a b a b a^3 b a^2 b^2");
  CHECK(is_identity_factorization(lhs));
  CHECK(lhs.twist_count() == 12);
  // conjugated presentation of the same factorization
  MonodromyWord conj = W("a b (a b a^-1) a^5 (a^-1 b a) b (b^-1 a b) b");
  CHECK(is_identity_factorization(conj));
  CHECK(to_matrix(conj).is_identity());
}

TEST_CASE("conjugation") {
  MonodromyWord w = W("a^5");
  MonodromyWord u = W("a b");
  CHECK(to_matrix(conjugate(w, u)).trace() == to_matrix(w).trace());
  CHECK(conjugate(w, MonodromyWord{}) == w);
  CHECK(to_matrix(conjugate(w, u)) ==
        to_matrix(u) * to_matrix(w) * to_matrix(u).inverse());
}

TEST_CASE("fiber recognition") {
  CHECK(recognize_fiber(W("a")) == FiberType::fishtail());
  CHECK(recognize_fiber(W("b^-1")) == FiberType::fishtail());
  CHECK(recognize_fiber(W("(a^5)^(a b)")) == FiberType::necklace(5));
  CHECK(recognize_fiber(W("a b")) == FiberType::unrecognized());
  CHECK(recognize_fiber(W("a^-3")) == FiberType::unrecognized());
  CHECK(recognize_fiber(MonodromyWord{}) == FiberType::unrecognized());
  // recognized necklaces have trace exactly 2
  for (int k = 2; k <= 9; ++k) {
    MonodromyWord seg = conjugate(MonodromyWord::twist(Twist::A, k), W("b a^2"));
    REQUIRE(recognize_fiber(seg) == FiberType::necklace(k));
    CHECK(to_matrix(seg).trace() == 2);
  }
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(W("(a b)^6")) == 12);
  CHECK(euler_number(W("(a b)^12")) == 24);
  CHECK_THROWS_AS(euler_number(W("a b")), Error);
}

TEST_CASE("euler number of the segmented necklace factorization") {
  // a b (a b a^-1) a^5 (a^-1 b a) b (b^-1 a b) b read fiber by fiber:
  // three conjugated fishtails, one I_5 core, four plain fishtails
  std::vector<MonodromyWord> segs = {W("a"),          W("b"), W("(b)^a"),
                                     W("a^5"),        W("(b)^(a^-1)"),
                                     W("b"),          W("(a)^(b^-1)"), W("b")};
  MonodromyWord prod;
  for (const auto& s : segs) prod = prod * s;
  CHECK(prod == W("a b a b a^3 b a^2 b^2"));
  CHECK(is_identity_factorization(prod));
  CHECK(euler_number(segs) == 12);  // 5 + 7 twists
  CHECK_THROWS_AS(euler_number(std::vector<MonodromyWord>{W("a b")}), Error);
}

TEST_CASE("word syntax") {
  CHECK(W("a^-1").letters().size() == 1);
  CHECK(W("a^5") == MonodromyWord::twist(Twist::A, 5));
  CHECK(W("(a b)^2") == W("a b a b"));
  CHECK(W("(a^5)^b") == conjugate(W("a^5"), W("b")));
  CHECK(print_monodromy(W("a a b^-2")) == "a^2 b^-2");
  CHECK_THROWS_AS(W("c"), Error);
  CHECK_THROWS_AS(W("(a"), Error);
}

TEST_CASE("braid rewriting keeps every intermediate an identity factorization") {
  // single braid substitutions b a b -> a b a applied inside (a b)^6, plus
  // the necklace-producing endpoint
  std::vector<MonodromyWord> forms = {
      W("(a b)^6"),
      W("a b a b a b a b a (a b a)"),  // rightmost b a b replaced
      W("a b a b a (a b a) a a b a"),  // and then an interior one
      W("a b a b a^3 b a^2 b^2"),      // the target word
  };
  for (const MonodromyWord& w : forms) {
    CHECK(is_identity_factorization(w));
    CHECK(w.twist_count() == 12);
  }
}

TEST_CASE("monodromy print/parse round trip") {
  std::mt19937 rng(67);
  std::uniform_int_distribution<int> len(0, 10), e(-5, 5);
  for (int t = 0; t < 500; ++t) {
    MonodromyWord w;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      w.push(rng() % 2 ? Twist::A : Twist::B, e(rng));
    CHECK(parse_monodromy(print_monodromy(w)) == w);
  }
}

TEST_CASE("noise never crashes the monodromy parser") {
  std::mt19937 rng(71);
  const std::string alphabet = "ab^()-0123456789 ";
  std::uniform_int_distribution<int> len(0, 24),
      pick(0, static_cast<int>(alphabet.size()) - 1);
  for (int t = 0; t < 3000; ++t) {
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s += alphabet[pick(rng)];
    try {
      MonodromyWord w = parse_monodromy(s);
      CHECK(parse_monodromy(print_monodromy(w)) == w);
    } catch (const Error&) {
    }
  }
}
