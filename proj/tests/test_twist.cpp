#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hgc/verify.hpp"

using namespace hgc;

namespace {

// Nielsen reduction; all length-one distinct images means the tuple is a
// free basis.
bool reduces_to_basis(std::vector<FreeWord> u, int n) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& w : u)
      if (w.is_identity()) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            FreeWord a = si > 0 ? u[i] : u[i].inverse();
            FreeWord b = sj > 0 ? u[j] : u[j].inverse();
            FreeWord cand = a * b;
            if (cand.length() < u[i].length()) {
              u[i] = si > 0 ? cand : cand.inverse();
              changed = true;
            }
          }
      }
  }
  std::vector<bool> seen(n, false);
  for (auto& w : u) {
    if (w.length() != 1) return false;
    int m = std::abs(w.letters()[0]) - 1;
    if (m >= n || seen[m]) return false;
    seen[m] = true;
  }
  return true;
}

// Independent degree-two expander: tracks (constant, linear, quadratic)
// coefficients through letter-by-letter multiplication.
struct Deg2 {
  Int c0;
  IntVec c1;
  std::vector<IntVec> c2;
  explicit Deg2(int n) : c0(1), c1(n), c2(n, IntVec(n)) {}
};

Deg2 expand_deg2(const FreeWord& w, int n) {
  Deg2 acc(n);
  for (int16_t x : w.letters()) {
    int m = std::abs(x) - 1;
    // letter factor: 1 + sX + (s<0 ? X^2 : 0)
    Deg2 next(n);
    next.c0 = acc.c0;
    next.c1 = acc.c1;
    next.c2 = acc.c2;
    int s = x > 0 ? 1 : -1;
    // multiply on the right
    for (int p = 0; p < n; ++p) next.c2[p][m] += acc.c1[p] * s;
    next.c1[m] += acc.c0 * s;
    if (s < 0) next.c2[m][m] += acc.c0;
    acc = next;
  }
  return acc;
}

}  // namespace

TEST_CASE("the bounding-pair fixture is a genuine mapping class") {
  for (int g : {2, 3}) {
    auto f = bounding_pair_automorphism(g);
    REQUIRE(int(f.size()) == 2 * g);
    // trivial action on homology
    for (int m = 0; m < 2 * g; ++m) {
      IntVec ab = f[m].abelianization(g);
      for (int j = 0; j < 2 * g; ++j) CHECK(ab[j] == (j == m ? 1 : 0));
    }
    // boundary word preserved exactly
    FreeWord boundary;
    for (int i = 0; i < g; ++i)
      boundary = boundary * commutator(FreeWord::x(i), FreeWord::y(i));
    CHECK(boundary.substituted(f) == boundary);
    // the images form a free basis
    CHECK(reduces_to_basis(f, 2 * g));
  }
}

TEST_CASE("tau1 of the standard maps") {
  CHECK(tau1(identity_automorphism(3), 3).is_zero());
  CHECK(tau1(johnson_surrogate(3, 5), 3).is_zero());

  Lambda3 t = tau1(bounding_pair_automorphism(3), 3);
  REQUIRE(!t.is_zero());
  // a pair of curves in the class of the second handle's meridian cobounding
  // the first handle
  CHECK(t.entries.size() == 1);
  CHECK(t.entries.at({0, 1, 2}) == 1);
}

TEST_CASE("tau1 degree-two defects match an independent expander") {
  int g = 3, n = 6;
  auto f = bounding_pair_automorphism(g);
  for (int m = 0; m < n; ++m) {
    FreeWord d = f[m] * FreeWord::generator(m, -1);
    GroupRingElement e(d);
    e -= GroupRingElement::unit();
    MagnusSeries s = magnus_expand(e, 2);
    Deg2 direct = expand_deg2(d, n);
    // subtract the unit: constant becomes 0
    CHECK(direct.c0 == 1);
    for (int p = 0; p < n; ++p) {
      CHECK(s.coefficient({uint8_t(p)}) == direct.c1[p]);
      for (int q = 0; q < n; ++q)
        CHECK(s.coefficient({uint8_t(p), uint8_t(q)}) == direct.c2[p][q]);
    }
  }
}

TEST_CASE("tau1 rejects bad inputs") {
  // not Torelli: a transvection
  std::vector<FreeWord> tr = identity_automorphism(2);
  tr[1] = FreeWord::y(0) * FreeWord::x(0);
  CHECK_THROWS_AS(tau1(tr, 2), contract_error);

  // acts trivially on homology but moves the boundary word off its
  // conjugacy class
  std::vector<FreeWord> bad = identity_automorphism(2);
  bad[0] = FreeWord::x(0) * commutator(FreeWord::y(1), FreeWord::x(1));
  FreeWord boundary = commutator(FreeWord::x(0), FreeWord::y(0)) *
                      commutator(FreeWord::x(1), FreeWord::y(1));
  REQUIRE(!conjugate_in_free_group(boundary.substituted(bad), boundary));
  CHECK_THROWS_AS(tau1(bad, 2), contract_error);
}

TEST_CASE("tau1 is additive") {
  int g = 3;
  std::mt19937_64 rng(17);
  for (int t = 0; t < 8; ++t) {
    auto f = bounding_pair_automorphism(g);
    auto h = johnson_surrogate(g, rng());
    std::vector<FreeWord> comp;
    for (const FreeWord& w : h) comp.push_back(w.substituted(f));
    CHECK(tau1(comp, g) == tau1(f, g) + tau1(h, g));
  }
}

TEST_CASE("twist difference equals the tau1 prediction") {
  WordSpec ws = example_words("t3");
  WordModelManifold m(ws.genus, ws.beta_words);

  TwistComparison id = mu_twist_delta(m, identity_automorphism(ws.genus));
  CHECK(id.agree);
  for (auto& [k, v] : id.difference) CHECK(v == 0);

  for (uint64_t seed : {1u, 2u, 3u, 4u}) {
    TwistComparison j = mu_twist_delta(m, johnson_surrogate(ws.genus, seed));
    CHECK(j.agree);
    for (auto& [k, v] : j.difference) CHECK(v == 0);
  }

  TwistComparison bp = mu_twist_delta(m, bounding_pair_automorphism(ws.genus));
  CHECK(bp.agree);

  // the twisted tensors in the johnson battery really get recomputed from
  // rewritten words, so agreement is a genuine cross-check
  WordSpec w5 = example_words("sgxs1:1");
  WordModelManifold m5(w5.genus, w5.beta_words);
  TwistComparison bp5 = mu_twist_delta(m5, bounding_pair_automorphism(w5.genus));
  CHECK(bp5.agree);
}
