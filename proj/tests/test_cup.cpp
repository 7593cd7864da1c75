#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hgc/io.hpp"
#include "hgc/verify.hpp"

using namespace hgc;

TEST_CASE("lagrangians on the basic fixtures") {
  {
    HeegaardDiagram d = HeegaardDiagram::build({Crossing{0, 0, 0, 0, 0, 1}}, 1, 1, 1);
    auto [la, lb] = lagrangians(d);
    CHECK(la.rank() == 1);
    CHECK(lb.rank() == 1);
    CHECK(lattice_intersection(la, lb).rank() == 0);
    CHECK(lattice_sum(la, lb).rank() == 2);
  }
  for (const char* name : {"t3", "sgxs1:2"}) {
    HeegaardDiagram d = build_diagram(example_diagram(name));
    auto [la, lb] = lagrangians(d);
    CHECK(la == lb);  // product fixtures have equal Lagrangians
    CHECK(la.rank() == d.genus());
  }
}

TEST_CASE("degenerate curve systems are rejected") {
  // a valid genus-2 diagram whose two alpha classes span only rank 1
  std::vector<Crossing> raw = {
      {0, 0, 1, 0, 3, 1}, {1, 0, 3, 0, 2, -1}, {2, 0, 0, 0, 4, -1},
      {3, 1, 1, 1, 0, -1}, {4, 0, 2, 0, 1, 1},  {5, 1, 0, 0, 0, -1},
  };
  HeegaardDiagram d = HeegaardDiagram::build(raw, 2, 2, 2);
  CHECK_THROWS_WITH_AS(lagrangians(d), doctest::Contains("not a cut system"), validation_error);
}

TEST_CASE("manifold homology on the fixtures") {
  auto mh = manifold_homology(build_diagram(example_diagram("t3")));
  CHECK(mh.h1.free_rank() == 3);
  CHECK(mh.h1.torsion().empty());
  CHECK(mh.h2.rank() == 3);

  auto s3 = manifold_homology(build_diagram(example_diagram("s3:1")));
  CHECK(s3.h1.free_rank() == 0);
  CHECK(s3.h1.torsion().empty());
  CHECK(s3.h2.rank() == 0);

  // genus-1 diagram with p same-sign crossings: torsion of order p
  for (int p : {2, 3, 5, 7}) {
    auto lp = manifold_homology(
        build_diagram(example_diagram("lens:" + std::to_string(p) + ":1")));
    CHECK(lp.h1.free_rank() == 0);
    REQUIRE(lp.h1.torsion().size() == 1);
    CHECK(lp.h1.torsion()[0] == p);
  }
}

TEST_CASE("pair representatives") {
  HeegaardDiagram d = build_diagram(example_diagram("t3"));
  ManifoldHomology mh = manifold_homology(d);

  // h = 0 gives the zero pair
  ClassPair zero = pair_representatives(d, IntVec(6, Int(0)));
  for (const Int& v : zero.lambda) CHECK(v == 0);
  for (const Int& v : zero.mu) CHECK(v == 0);

  // the class of alpha_1 is represented by the unit vectors on both sides
  IntVec h = d.cycle_class(d.curve_chain(Family::alpha, 0));
  ClassPair x = pair_representatives(d, h);
  CHECK(x.lambda == IntVec{1, 0, 0});
  CHECK(x.mu == IntVec{1, 0, 0});

  // a class outside the intersection is rejected
  IntVec bad = d.cycle_class(d.curve_chain(Family::alpha, 0));
  bad[1] += 1;  // leave the lattice
  if (!mh.h2.contains(bad)) CHECK_THROWS_AS(pair_representatives(d, bad), contract_error);
}

TEST_CASE("phi cycle on the t3 fixture") {
  HeegaardDiagram d = build_diagram(example_diagram("t3"));
  CupTensor t = mu_tensor(d);
  ClassPair x = pair_representatives(d, t.basis.row(0));
  ClassPair xp = pair_representatives(d, t.basis.row(1));
  ClassPair xpp = pair_representatives(d, t.basis.row(2));

  PhiResult phi = phi_cycle(d, x, xp);
  CHECK(phi.cabled.diagram.is_cycle(phi.chain));
  // the paper's example: the cycle pairs to +1 against the third curve family
  CHECK(triple_cup(d, x, xp, xpp) == 1);
  // and the class of the cycle survives with full torsion coordinates
  CHECK(int(phi.class_in_m.free.size()) == 3);

  // disjoint representatives give the zero cycle
  HeegaardDiagram s5 = build_diagram(example_diagram("sgxs1:2"));
  CupTensor t5 = mu_tensor(s5);
  ClassPair a = pair_representatives(s5, t5.basis.row(0));
  ClassPair b = pair_representatives(s5, t5.basis.row(2));
  PhiResult phi5 = phi_cycle(s5, a, b);
  // alpha_1 and beta_3 are disjoint, so every component is silent
  for (int arc = 0; arc < phi5.chain.size(); ++arc) CHECK(phi5.chain[arc] == 0);
  CHECK(phi5.class_in_m.is_zero());
}

TEST_CASE("triple cup published values") {
  {
    HeegaardDiagram d = build_diagram(example_diagram("t3"));
    CupTensor t = mu_tensor(d);
    REQUIRE(t.rank() == 3);
    CHECK(t.value(0, 1, 2) == 1);
  }
  {
    HeegaardDiagram d = build_diagram(example_diagram("sgxs1:2"));
    CupTensor t = mu_tensor(d);
    REQUIRE(t.rank() == 5);
    CHECK(t.value(0, 1, 4) == 1);
    CHECK(t.value(2, 3, 4) == 1);
    CHECK(t.value(0, 1, 2) == 0);
    CHECK(t.value(0, 1, 3) == 0);
    CHECK(t.value(0, 2, 4) == 0);
    CHECK(t.value(1, 3, 4) == 0);
  }
  {
    // stabilized spheres carry the empty tensor
    CupTensor t = mu_tensor(build_diagram(example_diagram("s3:2")));
    CHECK(t.rank() == 0);
    CHECK(t.entries.empty());
  }
}

TEST_CASE("triple cup is alternating") {
  HeegaardDiagram d = build_diagram(example_diagram("t3"));
  CupTensor t = mu_tensor(d);
  std::vector<ClassPair> reps;
  for (int i = 0; i < 3; ++i) reps.push_back(pair_representatives(d, t.basis.row(i)));
  Int base = triple_cup(d, reps[0], reps[1], reps[2]);
  CHECK(triple_cup(d, reps[1], reps[0], reps[2]) == -base);
  CHECK(triple_cup(d, reps[2], reps[1], reps[0]) == -base);
  CHECK(triple_cup(d, reps[1], reps[2], reps[0]) == base);
  CHECK(triple_cup(d, reps[0], reps[0], reps[1]) == 0);
}

TEST_CASE("diagram battery on the fixtures") {
  for (const char* name : {"t3", "sgxs1:1", "lens:5:1", "s1s2"}) {
    VerifyReport r = verify_diagram(example_diagram(name), 6, 123);
    for (const auto& c : r.checks) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.ok);
    }
  }
}
