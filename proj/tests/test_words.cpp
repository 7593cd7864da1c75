#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hgc/verify.hpp"
#include "hgc/words.hpp"

using namespace hgc;

TEST_CASE("free reduction") {
  CHECK(FreeWord::parse("x1 X1", 1).is_identity());
  CHECK(FreeWord::parse("x1 y1 Y1 x1", 1) == FreeWord::parse("x1 x1", 1));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    FreeWord w = random_free_word(rng, 3, int(rng() % 10));
    CHECK((w * w.inverse()).is_identity());
    CHECK(w.inverse().inverse() == w);
    // reduction commutes with inversion
    std::vector<int16_t> doubled = w.letters();
    std::vector<int16_t> rev;
    for (auto it = doubled.rbegin(); it != doubled.rend(); ++it) rev.push_back(int16_t(-*it));
    CHECK(FreeWord(rev) == w.inverse());
  }
}

TEST_CASE("word parsing errors") {
  CHECK_THROWS_AS(FreeWord::parse("z1", 2), parse_error);
  CHECK_THROWS_AS(FreeWord::parse("x9", 2), parse_error);
  CHECK_THROWS_AS(FreeWord::parse("xq", 2), parse_error);
  CHECK(FreeWord::parse("", 2).is_identity());
  CHECK(FreeWord::parse("x1 Y2 y1", 2).str() == "x1 Y2 y1");
}

TEST_CASE("group ring arithmetic") {
  GroupRingElement x(FreeWord::x(0)), xinv(FreeWord::x(0).inverse());
  CHECK(x * xinv == GroupRingElement::unit());

  GroupRingElement one = GroupRingElement::unit();
  GroupRingElement a = one + x;   // 1 + x
  GroupRingElement b = one - x;   // 1 - x
  GroupRingElement xx(FreeWord::x(0) * FreeWord::x(0));
  CHECK(a * b == one - xx);

  // distributivity against term-by-term expansion on random elements
  std::mt19937_64 rng(4);
  auto random_elt = [&] {
    GroupRingElement e;
    for (int k = 0; k < 3; ++k)
      e.add_term(random_free_word(rng, 2, int(rng() % 4)), Int(int(rng() % 7) - 3));
    return e;
  };
  for (int t = 0; t < 40; ++t) {
    GroupRingElement p = random_elt(), q = random_elt(), r = random_elt();
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    // term-by-term oracle for the product
    GroupRingElement oracle;
    for (const auto& [w1, c1] : p.terms())
      for (const auto& [w2, c2] : q.terms()) oracle.add_term(w1 * w2, c1 * c2);
    CHECK(oracle == p * q);
  }
}

TEST_CASE("antipode") {
  GroupRingElement x(FreeWord::x(0));
  CHECK(antipode(x) == GroupRingElement(FreeWord::x(0).inverse()));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    GroupRingElement a(random_free_word(rng, 2, 1 + int(rng() % 5)), Int(int(rng() % 5) - 2));
    GroupRingElement b(random_free_word(rng, 2, 1 + int(rng() % 5)));
    CHECK(antipode(antipode(a)) == a);
    CHECK(antipode(a * b) == antipode(b) * antipode(a));
  }
}

TEST_CASE("magnus expansion basics") {
  // bare generator has no degree-2 part
  GroupRingElement e(FreeWord::x(0));
  e -= GroupRingElement::unit();
  MagnusSeries s = magnus_expand(e, 2);
  CHECK(s.coefficient({0}) == 1);
  CHECK(s.coefficient({}) == 0);
  CHECK(s.coefficient({0, 0}) == 0);
  CHECK(s.valuation() == 1);

  // commutator: hand expansion of (1+X)(1+Y)(1-X+X^2)(1-Y+Y^2) gives XY - YX
  GroupRingElement c(commutator(FreeWord::x(0), FreeWord::y(0)));
  c -= GroupRingElement::unit();
  MagnusSeries s2 = magnus_expand(c, 2);
  CHECK(s2.valuation() == 2);
  CHECK(s2.coefficient({0, 1}) == 1);
  CHECK(s2.coefficient({1, 0}) == -1);
  CHECK(s2.coefficient({0, 0}) == 0);
  CHECK(s2.coefficient({1, 1}) == 0);
}

TEST_CASE("magnus expansion is a ring homomorphism up to degree") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 25; ++t) {
    GroupRingElement a(random_free_word(rng, 2, 1 + int(rng() % 4)));
    GroupRingElement b(random_free_word(rng, 2, 1 + int(rng() % 4)));
    MagnusSeries lhs = magnus_expand(a * b, 3);
    MagnusSeries rhs = magnus_expand(a, 3) * magnus_expand(b, 3);
    for (const auto& [mono, coeff] : lhs.coefficients()) CHECK(rhs.coefficient(mono) == coeff);
    for (const auto& [mono, coeff] : rhs.coefficients()) CHECK(lhs.coefficient(mono) == coeff);
    // degree-0 coefficient is the augmentation
    CHECK(magnus_expand(a, 2).coefficient({}) == a.augmentation());
  }
}

TEST_CASE("lower central series membership") {
  FreeWord x = FreeWord::x(0), y = FreeWord::y(0), z = FreeWord::x(1);
  CHECK(gamma_member(commutator(x, y), 2));
  CHECK(!gamma_member(commutator(x, y), 3));
  CHECK(gamma_member(commutator(commutator(x, y), z), 3));
  CHECK_THROWS_AS(gamma_member(x, 5, 4), contract_error);

  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    FreeWord g3 = random_gamma3(rng, 2);
    CHECK(gamma_member(g3, 3));
    CHECK(gamma_member(g3 * random_gamma3(rng, 2), 3));
  }
}
