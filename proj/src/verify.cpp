#include "hgc/verify.hpp"

#include <random>
#include <sstream>

namespace hgc {

namespace {

struct Battery {
  VerifyReport report;

  void run(const std::string& name, const std::function<void()>& body) {
    CheckResult r;
    r.name = name;
    try {
      body();
      r.ok = true;
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  }
};

[[noreturn]] void fail(const std::string& msg) { throw verify_error(msg); }

void expect(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

OneChain random_cycle(std::mt19937_64& rng, const HeegaardDiagram& d) {
  OneChain z = d.zero_chain();
  for (Family f : {Family::alpha, Family::beta})
    for (int c = 0; c < d.curve_count(f); ++c)
      if (rng() % 3 == 0) {
        OneChain cc = d.curve_chain(f, c);
        cc *= Int(int(rng() % 5) - 2);
        z += cc;
      }
  for (int t = 0; t < 3; ++t) {
    OneChain fb = d.face_boundary(int(rng() % d.face_count()));
    fb *= Int(int(rng() % 5) - 2);
    z += fb;
  }
  return z;
}

IntVec random_intersection_class(std::mt19937_64& rng, const IntegerLattice& h2,
                                 bool nonzero = false) {
  IntVec h(h2.ambient_rank());
  if (h2.rank() == 0) return h;
  for (int tries = 0; tries < 20; ++tries) {
    std::fill(h.begin(), h.end(), Int(0));
    bool any = false;
    for (int i = 0; i < h2.rank(); ++i) {
      int c = int(rng() % 5) - 2;
      if (c == 0) continue;
      any = true;
      for (int j = 0; j < h2.ambient_rank(); ++j) h[j] += c * h2.basis().at(i, j);
    }
    if (any || !nonzero) return h;
  }
  return h;
}

GroupRingElement random_aug_zero(std::mt19937_64& rng, int genus) {
  // random element of the augmentation ideal: w - w'
  FreeWord w = random_free_word(rng, genus, 1 + int(rng() % 4));
  FreeWord w2 = random_free_word(rng, genus, 1 + int(rng() % 4));
  GroupRingElement e(w);
  e -= GroupRingElement(w2);
  return e;
}

GroupRingElement random_ideal_power(std::mt19937_64& rng, int genus, int k) {
  GroupRingElement e = GroupRingElement::unit();
  for (int i = 0; i < k; ++i) e = e * random_aug_zero(rng, genus);
  return e;
}

}  // namespace

FreeWord random_free_word(std::mt19937_64& rng, int genus, int length) {
  std::vector<int16_t> l;
  for (int i = 0; i < length; ++i) {
    int m = int(rng() % (2 * genus)) + 1;
    l.push_back(int16_t(rng() % 2 ? m : -m));
  }
  return FreeWord(std::move(l));
}

FreeWord random_gamma3(std::mt19937_64& rng, int genus) {
  FreeWord a = random_free_word(rng, genus, 1 + int(rng() % 3));
  FreeWord b = random_free_word(rng, genus, 1 + int(rng() % 3));
  FreeWord c = random_free_word(rng, genus, 1 + int(rng() % 3));
  FreeWord g3 = commutator(commutator(a, b), c);
  if (rng() % 2) {
    FreeWord d = random_free_word(rng, genus, 1 + int(rng() % 2));
    g3 = g3 * commutator(commutator(b, c), d);
  }
  return g3;
}

std::vector<FreeWord> identity_automorphism(int genus) {
  std::vector<FreeWord> id;
  for (int i = 0; i < 2 * genus; ++i) id.push_back(FreeWord::generator(i));
  return id;
}

std::vector<FreeWord> bounding_pair_automorphism(int genus) {
  if (genus < 2) throw contract_error("bounding pair automorphism needs genus >= 2");
  FreeWord x1 = FreeWord::x(0), y1 = FreeWord::y(0);
  FreeWord x2 = FreeWord::x(1), y2 = FreeWord::y(1);
  // Twist difference along two disjoint curves of the class of x2 cobounding
  // the first handle; fixes the boundary word exactly and has first Johnson
  // invariant x1 ^ y1 ^ x2.
  FreeWord w = x2 * y2 * x2 * y2.inverse() * x2.inverse();
  FreeWord c = x2 * y2.inverse() * x2.inverse() * y1 * x1 * y1.inverse() * x1.inverse() * x2 *
               y2 * x2.inverse();
  std::vector<FreeWord> images = {w * x1 * w.inverse(), w * y1 * w.inverse(), x2, y2 * c};
  for (int i = 2; i < genus; ++i) {
    images.push_back(FreeWord::x(i));
    images.push_back(FreeWord::y(i));
  }
  return images;
}

std::vector<FreeWord> johnson_surrogate(int genus, uint64_t seed) {
  std::mt19937_64 rng(seed);
  FreeWord a = random_free_word(rng, genus, 1 + int(rng() % 3));
  FreeWord b = random_free_word(rng, genus, 1 + int(rng() % 3));
  FreeWord c = commutator(a, b);  // class zero, so conjugation is Torelli
  std::vector<FreeWord> images;
  for (int i = 0; i < 2 * genus; ++i) images.push_back(c * FreeWord::generator(i) * c.inverse());
  return images;
}

VerifyReport verify_diagram(const DiagramSpec& spec, int trials, uint64_t seed) {
  Battery b;
  std::mt19937_64 rng(seed);

  HeegaardDiagram d = build_diagram(spec);
  b.run("diagram-validates", [&] {
    expect(d.crossing_count() - d.arc_count() + d.face_count() == 2 - 2 * d.genus(),
           "Euler count disagrees with the genus");
  });

  b.run("omega-skew-symmetric", [&] {
    for (int t = 0; t < trials; ++t) {
      OneChain z1 = random_cycle(rng, d), z2 = random_cycle(rng, d);
      expect(d.omega(z1, z2) == -d.omega(z2, z1), "omega(z1,z2) != -omega(z2,z1)");
      expect(d.omega(z1, z1) == 0, "omega(z,z) != 0");
    }
  });

  b.run("omega-kills-face-boundaries", [&] {
    for (int t = 0; t < trials; ++t) {
      OneChain z1 = random_cycle(rng, d), z2 = random_cycle(rng, d);
      OneChain fb = d.face_boundary(int(rng() % d.face_count()));
      expect(d.omega(fb, z2) == 0, "omega(face boundary, z) != 0");
      OneChain shifted = z1;
      shifted += fb;
      expect(d.omega(shifted, z2) == d.omega(z1, z2), "omega changed by a face boundary");
    }
  });

  b.run("omega-counts-crossing-signs", [&] {
    for (int i = 0; i < d.curve_count(Family::alpha); ++i)
      for (int j = 0; j < d.curve_count(Family::beta); ++j) {
        Int expected = 0;
        for (const Crossing& c : d.crossings())
          if (c.alpha == i && c.beta == j) expected += c.sign;
        expect(d.omega(d.curve_chain(Family::alpha, i), d.curve_chain(Family::beta, j)) ==
                   expected,
               "omega(alpha_i, beta_j) is not the crossing sign sum");
      }
  });

  b.run("curve-families-isotropic", [&] {
    for (Family f : {Family::alpha, Family::beta})
      for (int i = 0; i < d.curve_count(f); ++i)
        for (int j = 0; j < d.curve_count(f); ++j)
          expect(d.omega(d.curve_chain(f, i), d.curve_chain(f, j)) == 0,
                 "curves of one family must pair to zero");
  });

  ManifoldHomology mh = manifold_homology(d);
  b.run("h1-free-rank-equals-h2-rank",
        [&] { expect(mh.h1.free_rank() == mh.h2.rank(), "rank mismatch"); });

  bool has_classes = mh.h2.rank() > 0;

  b.run("boundary-identity", [&] {
    for (int t = 0; t < trials; ++t) {
      IntVec h = random_intersection_class(rng, mh.h2, true);
      IntVec hp = random_intersection_class(rng, mh.h2, true);
      if (mh.h2.rank() == 0) return;
      ClassPair x = pair_representatives(d, h), xp = pair_representatives(d, hp);
      PhiResult phi = phi_cycle(d, x, xp, rng() % 2 == 1);
      const HeegaardDiagram& cd = phi.cabled.diagram;
      IntVec da = cd.boundary(phi.a_part), db = cd.boundary(phi.b_part);
      int na = d.curve_count(Family::alpha), nb = d.curve_count(Family::beta);
      for (int s = 0; s < cd.crossing_count(); ++s) {
        const Crossing& c = cd.crossings()[s];
        bool is_cut = c.alpha >= na && c.beta >= nb;
        Int want = is_cut ? Int(c.sign) : Int(0);
        expect(da[s] == want, "boundary of the a-part misses the signed points");
        expect(db[s] == -want, "boundary of the b-part misses the negated signed points");
      }
    }
  });

  b.run("base-point-rotation-invariance", [&] {
    for (int t = 0; t < trials && has_classes; ++t) {
      IntVec h = random_intersection_class(rng, mh.h2, true);
      IntVec hp = random_intersection_class(rng, mh.h2, true);
      IntVec hpp = random_intersection_class(rng, mh.h2, true);
      ClassPair x = pair_representatives(d, h), xp = pair_representatives(d, hp),
                xpp = pair_representatives(d, hpp);
      PhiResult base = phi_cycle(d, x, xp);
      std::vector<int> rot;
      for (size_t k = 0; k < base.components.size() + 2; ++k) rot.push_back(int(rng() % 7));
      PhiResult moved = phi_cycle_rotated(d, x, xp, rot);
      expect(base.class_in_m == moved.class_in_m, "class changed under base rotation");
      const HeegaardDiagram& cd = base.cabled.diagram;
      OneChain third = cd.zero_chain();
      for (int k = 0; k < int(xpp.lambda.size()); ++k) {
        OneChain cc = cd.curve_chain(Family::alpha, k);
        cc *= xpp.lambda[k];
        third += cc;
      }
      expect(cd.omega(base.chain, third) == cd.omega(moved.chain, third),
             "pairing changed under base rotation");
    }
  });

  b.run("representative-solve-deterministic", [&] {
    for (int t = 0; t < trials && has_classes; ++t) {
      IntVec h = random_intersection_class(rng, mh.h2, true);
      ClassPair a = pair_representatives(d, h), b2 = pair_representatives(d, h);
      expect(a.lambda == b2.lambda && a.mu == b2.mu, "representative solve is unstable");
      // verify the defining equations
      IntVec sum(2 * d.genus()), sum2(2 * d.genus());
      for (int i = 0; i < d.curve_count(Family::alpha); ++i) {
        IntVec cl = d.cycle_class(d.curve_chain(Family::alpha, i));
        for (int j = 0; j < 2 * d.genus(); ++j) sum[j] += a.lambda[i] * cl[j];
      }
      for (int i = 0; i < d.curve_count(Family::beta); ++i) {
        IntVec cl = d.cycle_class(d.curve_chain(Family::beta, i));
        for (int j = 0; j < 2 * d.genus(); ++j) sum2[j] += a.mu[i] * cl[j];
      }
      expect(sum == h && sum2 == h, "representatives do not realize the class");
    }
  });

  b.run("cabling-side-flip-invariance", [&] {
    for (int t = 0; t < trials && has_classes; ++t) {
      IntVec h = random_intersection_class(rng, mh.h2, true);
      IntVec hp = random_intersection_class(rng, mh.h2, true);
      IntVec hpp = random_intersection_class(rng, mh.h2, true);
      ClassPair x = pair_representatives(d, h), xp = pair_representatives(d, hp),
                xpp = pair_representatives(d, hpp);
      Int values[2];
      for (bool flip : {false, true}) {
        PhiResult phi = phi_cycle(d, x, xp, flip);
        const HeegaardDiagram& cd = phi.cabled.diagram;
        OneChain third = cd.zero_chain();
        for (int k = 0; k < int(xpp.lambda.size()); ++k) {
          OneChain cc = cd.curve_chain(Family::alpha, k);
          cc *= xpp.lambda[k];
          third += cc;
        }
        values[flip ? 1 : 0] = cd.omega(phi.chain, third);
      }
      expect(values[0] == values[1], "triple pairing changed when copies switched sides");
    }
  });

  b.run("cable-copy-classes", [&] {
    std::vector<Int> am(d.curve_count(Family::alpha)), bm(d.curve_count(Family::beta));
    for (auto& v : am) v = int(rng() % 5) - 2;
    for (auto& v : bm) v = int(rng() % 5) - 2;
    CableResult cr = cable(d, am, bm);
    const HeegaardDiagram& cd = cr.diagram;
    for (int i = 0; i < d.curve_count(Family::alpha); ++i) {
      IntVec orig = cd.cycle_class(cd.curve_chain(Family::alpha, i));
      for (int copy : cr.alpha_copies[i]) {
        IntVec got = cd.cycle_class(cd.curve_chain(Family::alpha, copy));
        for (size_t j = 0; j < got.size(); ++j)
          expect(got[j] == Int(cr.alpha_dir[i]) * orig[j], "copy class is not the multiple");
      }
    }
  });

  b.run("finger-move-invariance", [&] {
    for (int t = 0; t < trials; ++t) {
      // random beta/alpha dart pair on a common face
      const auto& faces = d.faces();
      int fi = int(rng() % faces.size());
      std::vector<Dart> bd, ad;
      for (const Dart& x : faces[fi])
        (d.arc_family(x.arc) == Family::beta ? bd : ad).push_back(x);
      if (bd.empty() || ad.empty()) continue;
      HeegaardDiagram moved =
          finger_move(d, bd[rng() % bd.size()], ad[rng() % ad.size()]);
      ManifoldHomology mh2 = manifold_homology(moved);
      expect(mh2.h1.free_rank() == mh.h1.free_rank() && mh2.h1.torsion() == mh.h1.torsion(),
             "finger move changed the homology");
      expect(mh2.h2.rank() == mh.h2.rank(), "finger move changed H2");
      if (!has_classes) continue;
      // transport a random triple through its lambda coordinates
      CupTensor t0 = mu_tensor(d), t1 = mu_tensor(moved);
      expect(t0.basis_lambda == t1.basis_lambda, "finger move changed the lambda basis");
      expect(t0.entries == t1.entries, "finger move changed the cup tensor");
    }
  });

  b.run("mu-alternating", [&] {
    if (!has_classes || mh.h2.rank() < 3) return;
    CupTensor t = mu_tensor(d);
    std::vector<ClassPair> reps;
    for (int i = 0; i < t.basis.rows(); ++i)
      reps.push_back(pair_representatives(d, t.basis.row(i)));
    for (int trial = 0; trial < std::max(1, trials / 4); ++trial) {
      int r = t.rank();
      int i = int(rng() % r), j = int(rng() % r), k = int(rng() % r);
      Int direct = triple_cup(d, reps[i], reps[j], reps[k]);
      expect(direct == t.value(i, j, k), "tensor disagrees with a permuted evaluation");
    }
    // all six permutations of the first basis triple
    const int p[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const int sg[6] = {1, 1, 1, -1, -1, -1};
    Int base = triple_cup(d, reps[0], reps[1], reps[2]);
    for (int s = 0; s < 6; ++s)
      expect(triple_cup(d, reps[p[s][0]], reps[p[s][1]], reps[p[s][2]]) == sg[s] * base,
             "mu is not alternating");
    // repeated argument vanishes
    expect(triple_cup(d, reps[0], reps[0], reps[1]) == 0, "repeated argument must vanish");
  });

  return b.report;
}

VerifyReport verify_words(const WordSpec& spec, int trials, uint64_t seed) {
  Battery b;
  std::mt19937_64 rng(seed);
  int g = spec.genus;
  WordModelManifold m(g, spec.beta_words);
  const FoxTable& table = m.table();

  b.run("word-model-validates", [&] {
    // degenerate beta systems (spec: allowed for word models) may span less
    // than rank g; the duality identity applies to the honest case
    if (m.l_beta().rank() == g)
      expect(m.h1().free_rank() == m.h2().rank(), "rank mismatch");
    else
      expect(m.h2().rank() <= m.h1().free_rank(), "intersection exceeds the free rank");
  });

  b.run("fox-axioms", [&] {
    for (int t = 0; t < trials; ++t) {
      GroupRingElement a(random_free_word(rng, g, 1 + int(rng() % 5)));
      GroupRingElement b2(random_free_word(rng, g, 1 + int(rng() % 5)));
      GroupRingElement c(random_free_word(rng, g, 1 + int(rng() % 4)));
      expect(eta(a * b2, c, table) ==
                 a * eta(b2, c, table) + eta(a, c, table) * b2.augmentation(),
             "left derivation axiom failed");
      expect(eta(a, b2 * c, table) ==
                 eta(a, b2, table) * c + eta(a, c, table) * b2.augmentation(),
             "right derivation axiom failed");
    }
  });

  b.run("eta-augmentation-is-intersection", [&] {
    for (int t = 0; t < trials; ++t) {
      FreeWord a = random_free_word(rng, g, 1 + int(rng() % 6));
      FreeWord b2 = random_free_word(rng, g, 1 + int(rng() % 6));
      expect(eta(GroupRingElement(a), GroupRingElement(b2), table).augmentation() ==
                 omega0(a.abelianization(g), b2.abelianization(g)),
             "augmentation of eta is not the homological intersection");
    }
  });

  b.run("eta-skew-identity", [&] {
    for (int t = 0; t < trials; ++t) {
      GroupRingElement a(random_free_word(rng, g, 1 + int(rng() % 5)));
      GroupRingElement b2(random_free_word(rng, g, 1 + int(rng() % 5)));
      GroupRingElement rhs = -(a * antipode(eta(b2, a, table)) * b2) -
                             (a - GroupRingElement::unit()) * (b2 - GroupRingElement::unit());
      expect(eta(a, b2, table) == rhs, "skew-symmetry identity failed");
    }
  });

  b.run("eta-filtration", [&] {
    for (int t = 0; t < std::max(1, trials / 2); ++t)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l + k <= 6 && l <= 3; ++l) {
          GroupRingElement a = random_ideal_power(rng, g, k);
          GroupRingElement b2 = random_ideal_power(rng, g, l);
          GroupRingElement e = eta(a, b2, table);
          if (e.is_zero()) continue;
          int val = magnus_expand(e, 4).valuation();
          expect(val >= std::min(k + l - 2, 5), "eta dropped below the expected filtration");
        }
  });

  b.run("eta-commutator-formula", [&] {
    for (int t = 0; t < trials; ++t) {
      FreeWord x = FreeWord::generator(int(rng() % (2 * g)));
      FreeWord y = FreeWord::generator(int(rng() % (2 * g)));
      FreeWord z = FreeWord::generator(int(rng() % (2 * g)));
      GroupRingElement lhs = eta(GroupRingElement(x), GroupRingElement(commutator(y, z)), table);
      GroupRingElement rhs;
      Int wy = omega0(x.abelianization(g), y.abelianization(g));
      Int wz = omega0(x.abelianization(g), z.abelianization(g));
      rhs += (GroupRingElement(z) - GroupRingElement::unit()) * wy;
      rhs -= (GroupRingElement(y) - GroupRingElement::unit()) * wz;
      GroupRingElement diff = lhs - rhs;
      if (diff.is_zero()) continue;
      expect(magnus_expand(diff, 2).valuation() >= 2, "commutator formula failed mod I^2");
    }
  });

  b.run("gamma-membership-valuation", [&] {
    for (int t = 0; t < trials; ++t) {
      FreeWord a = random_free_word(rng, g, 1 + int(rng() % 3));
      FreeWord b2 = random_free_word(rng, g, 1 + int(rng() % 3));
      FreeWord c = random_free_word(rng, g, 1 + int(rng() % 3));
      FreeWord g2 = commutator(a, b2);
      FreeWord g3 = commutator(g2, c);
      FreeWord g4 = commutator(g3, a);
      expect(gamma_member(g2, 2), "commutator not in gamma_2");
      expect(gamma_member(g3, 3), "double commutator not in gamma_3");
      expect(gamma_member(g4, 4), "triple commutator not in gamma_4");
      FreeWord prod = random_gamma3(rng, g) * random_gamma3(rng, g);
      expect(gamma_member(prod, 3), "gamma_3 is not closed under products");
      if (!g2.is_identity() && omega0(a.abelianization(g), b2.abelianization(g)) != 0)
        expect(!gamma_member(g2, 3), "a commutator with nonzero pairing landed in gamma_3");
    }
  });

  b.run("kappa-alpha-kills-eta-on-alpha-pairs", [&] {
    for (int t = 0; t < trials; ++t) {
      // products of conjugates of x generators
      auto rand_a = [&] {
        GroupRingElement e = GroupRingElement::unit();
        FreeWord w;
        for (int k = 0; k < 1 + int(rng() % 2); ++k) {
          FreeWord q = random_free_word(rng, g, int(rng() % 3));
          int i = int(rng() % g);
          w = w * (q * FreeWord::x(i) * q.inverse());
        }
        return GroupRingElement(w);
      };
      GroupRingElement e = eta(rand_a(), rand_a(), table);
      expect(kappa_alpha(e).is_zero(), "eta of alpha-side loops escaped the alpha kernel");
    }
  });

  b.run("eta-bar-gamma3-invariance", [&] {
    if (m.h2().rank() == 0) return;
    for (int t = 0; t < trials; ++t) {
      IntVec h = random_intersection_class(rng, m.h2(), true);
      IntVec hp = random_intersection_class(rng, m.h2(), true);
      auto ra = m.representatives(h), rb = m.representatives(hp);
      if (ra.a.is_zero() || rb.b.is_zero()) continue;
      FreeWord gamma = random_gamma3(rng, g);
      GroupRingElement twisted;
      for (const auto& [w, c] : ra.a.terms()) twisted.add_term(gamma * w, c);
      expect(eta_bar(ra.a, rb.b, m).reduced == eta_bar(twisted, rb.b, m).reduced,
             "eta-bar changed under a gamma_3 shift");
    }
  });

  b.run("eta-bar-well-defined", [&] {
    if (m.h2().rank() == 0) return;
    for (int t = 0; t < trials; ++t) {
      IntVec h = random_intersection_class(rng, m.h2(), true);
      IntVec hp = random_intersection_class(rng, m.h2(), true);
      auto ra = m.representatives(h), rb = m.representatives(hp);
      if (ra.a.is_zero() || rb.b.is_zero()) continue;
      // commutator of conjugates of x generators: in A and in [pi, pi]
      FreeWord q1 = random_free_word(rng, g, int(rng() % 3));
      FreeWord q2 = random_free_word(rng, g, int(rng() % 3));
      FreeWord ap = commutator(q1 * FreeWord::x(int(rng() % g)) * q1.inverse(),
                               q2 * FreeWord::x(int(rng() % g)) * q2.inverse());
      GroupRingElement twisted;
      for (const auto& [w, c] : ra.a.terms()) twisted.add_term(ap * w, c);
      expect(eta_bar(ra.a, rb.b, m).reduced == eta_bar(twisted, rb.b, m).reduced,
             "eta-bar depends on the alpha-side commutator shift");
    }
  });

  b.run("eta-bar-skew-symmetric", [&] {
    if (m.h2().rank() == 0) return;
    CupTensor t = mu_words(m);
    for (int i = 0; i < t.rank(); ++i)
      for (int j = 0; j < t.rank(); ++j) {
        auto ri = m.representatives(t.basis.row(i));
        auto rj = m.representatives(t.basis.row(j));
        if (ri.a.is_zero() || rj.b.is_zero() || rj.a.is_zero() || ri.b.is_zero()) continue;
        auto lhs = eta_bar(ri.a, rj.b, m).reduced;
        auto rhs = eta_bar(rj.a, ri.b, m).reduced;
        IntVec neg;
        for (const Int& v : rhs.free) neg.push_back(-v);
        // compare in the quotient: lhs + rhs must be zero
        GroupRingElement zero;
        (void)zero;
        auto sum = lhs;
        for (size_t k2 = 0; k2 < sum.free.size(); ++k2) sum.free[k2] += rhs.free[k2];
        for (size_t k2 = 0; k2 < sum.torsion.size(); ++k2) {
          sum.torsion[k2] += rhs.torsion[k2];
          Int mmod = m.h1().torsion()[k2];
          sum.torsion[k2] %= mmod;
        }
        expect(sum.is_zero(), "eta-bar is not skew-symmetric on fixture pairs");
      }
  });

  if (m.kappa_beta_supported())
    b.run("kappa-beta-kills-beta-words", [&] {
      for (const FreeWord& w : m.beta_words())
        expect(m.kappa_beta(GroupRingElement(w)) == GroupRingElement::unit(),
               "a beta word survived its own quotient");
    });

  return b.report;
}

VerifyReport verify_all_fixtures(int trials, uint64_t seed) {
  Battery b;
  std::vector<std::string> names = {"s3:1", "s3:2",    "s1s2",    "t3",
                                    "sgxs1:1", "sgxs1:2", "lens:5:1", "lens:7:3"};
  for (const std::string& name : names) {
    VerifyReport r = verify_diagram(example_diagram(name), std::max(4, trials / 4), seed);
    for (auto& c : r.checks) {
      c.name = name + "/" + c.name;
      b.report.checks.push_back(c);
    }
  }
  for (const std::string name : {"t3", "sgxs1:1", "sgxs1:2", "s3:2", "s1s2"}) {
    VerifyReport r = verify_words(example_words(name), std::max(6, trials / 2), seed);
    for (auto& c : r.checks) {
      c.name = name + "/" + c.name;
      b.report.checks.push_back(c);
    }
  }

  b.run("published-values-t3", [&] {
    HeegaardDiagram d = build_diagram(example_diagram("t3"));
    ManifoldHomology mh = manifold_homology(d);
    expect(mh.h1.free_rank() == 3 && mh.h1.torsion().empty(), "t3 homology is not Z^3");
    expect(mh.h2.rank() == 3, "t3 H2 is not Z^3");
    CupTensor t = mu_tensor(d);
    expect(t.rank() == 3 && t.value(0, 1, 2) == 1, "t3 tensor is not the unit triple");
  });

  b.run("published-values-sgxs1-2", [&] {
    HeegaardDiagram d = build_diagram(example_diagram("sgxs1:2"));
    expect(d.genus() == 5, "sgxs1:2 is not genus 5");
    CupTensor t = mu_tensor(d);
    expect(t.rank() == 5, "sgxs1:2 tensor rank is not 5");
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) {
          Int want = 0;
          if (k == 4 && j == i + 1 && i % 2 == 0) want = 1;  // symplectic pairs (0,1), (2,3)
          expect(t.value(i, j, k) == want, "sgxs1:2 tensor is not the symplectic pattern");
        }
  });

  for (const std::string name : {"t3", "sgxs1:1", "sgxs1:2"})
    b.run("cross-pipeline-" + name, [&, name] {
      CupTensor td = mu_tensor(build_diagram(example_diagram(name)));
      WordSpec ws = example_words(name);
      CupTensor tw = mu_words(WordModelManifold(ws.genus, ws.beta_words));
      expect(td.basis_lambda == tw.basis_lambda, "pipelines chose different bases");
      expect(td.entries == tw.entries, "pipelines disagree on the tensor");
    });

  b.run("homology-regression", [&] {
    for (const std::string name : {"s3:1", "s3:2"}) {
      ManifoldHomology mh = manifold_homology(build_diagram(example_diagram(name)));
      expect(mh.h1.free_rank() == 0 && mh.h1.torsion().empty(), name + " H1 is not trivial");
    }
    {
      WordSpec ws = example_words("s1s2");
      WordModelManifold m(ws.genus, ws.beta_words);
      expect(m.h1().free_rank() == 1 && m.h1().torsion().empty(), "s1s2 H1 is not Z");
      expect(mu_words(m).entries.empty(), "s1s2 mu is not empty");
    }
    for (int p : {2, 3, 5, 7}) {
      std::string name = "lens:" + std::to_string(p) + ":1";
      ManifoldHomology mh = manifold_homology(build_diagram(example_diagram(name)));
      expect(mh.h1.free_rank() == 0 && mh.h1.torsion().size() == 1 &&
                 mh.h1.torsion()[0] == p,
             name + " H1 is not Z/" + std::to_string(p));
    }
  });

  b.run("twist-identity", [&] {
    WordSpec ws = example_words("t3");
    WordModelManifold m(ws.genus, ws.beta_words);
    TwistComparison cmp = mu_twist_delta(m, identity_automorphism(ws.genus));
    expect(cmp.agree, "identity twist disagrees");
    for (auto& [k, v] : cmp.difference) expect(v == 0, "identity changed the tensor");
    expect(tau1(identity_automorphism(ws.genus), ws.genus).is_zero(), "tau1(identity) != 0");
  });

  b.run("twist-johnson-surrogates", [&] {
    WordSpec ws = example_words("t3");
    WordModelManifold m(ws.genus, ws.beta_words);
    for (int k = 0; k < std::max(3, trials / 4); ++k) {
      auto f = johnson_surrogate(ws.genus, seed + k);
      expect(tau1(f, ws.genus).is_zero(), "johnson surrogate has nonzero tau1");
      TwistComparison cmp = mu_twist_delta(m, f);
      expect(cmp.agree, "johnson twist disagrees with the prediction");
      for (auto& [key, v] : cmp.difference) expect(v == 0, "johnson twist changed the tensor");
    }
  });

  b.run("twist-bounding-pair", [&] {
    WordSpec ws = example_words("t3");
    WordModelManifold m(ws.genus, ws.beta_words);
    auto f = bounding_pair_automorphism(ws.genus);
    Lambda3 t1 = tau1(f, ws.genus);
    expect(!t1.is_zero(), "bounding pair has zero tau1");
    expect(t1.entries.size() == 1 && t1.entries.count({0, 1, 2}) == 1 &&
               t1.entries.at({0, 1, 2}) == 1,
           "bounding pair tau1 is not x1^y1^x2");
    TwistComparison cmp = mu_twist_delta(m, f);
    expect(cmp.agree, "bounding pair twist disagrees with the prediction");
  });

  b.run("tau1-additivity", [&] {
    int g = 3;
    for (int k = 0; k < std::max(3, trials / 4); ++k) {
      auto f = bounding_pair_automorphism(g);
      auto h = johnson_surrogate(g, seed + 100 + k);
      std::vector<FreeWord> comp;
      for (const FreeWord& w : h) comp.push_back(w.substituted(f));
      Lambda3 sum = tau1(f, g) + tau1(h, g);
      expect(tau1(comp, g) == sum, "tau1 is not additive on a composite");
    }
  });

  b.run("fox-table-asset-roundtrip", [&] {
    for (int g = 1; g <= 3; ++g) {
      FoxTable t = FoxTable::standard(g);
      std::string s = t.serialize();
      FoxTable t2 = FoxTable::deserialize(s);
      expect(t2.genus() == g, "table genus changed in serialization");
      for (int u = 0; u < 2 * g; ++u)
        for (int v = 0; v < 2 * g; ++v)
          expect(t.pair(u, v) == t2.pair(u, v), "table entries changed in serialization");
      std::string corrupted = s;
      corrupted[s.size() / 2] = corrupted[s.size() / 2] == 'x' ? 'y' : 'x';
      bool threw = false;
      try {
        FoxTable::deserialize(corrupted);
      } catch (const std::exception&) {
        threw = true;
      }
      expect(threw, "corrupted table passed its integrity hash");
    }
  });

  b.run("file-round-trips", [&] {
    for (const std::string& name : names) {
      DiagramSpec spec = example_diagram(name);
      std::string text = render_diagram_file(spec);
      expect(text == render_diagram_file(spec), "rendering is not byte-stable");
      DiagramSpec back = parse_diagram_file(text);
      expect(back.genus == spec.genus && back.crossings.size() == spec.crossings.size(),
             "diagram file did not round-trip");
      build_diagram(back);
    }
    for (const std::string name : {"t3", "sgxs1:2", "s1s2", "s3:2", "lens:5:1"}) {
      WordSpec ws = example_words(name);
      WordSpec back = parse_word_file(render_word_file(ws));
      expect(back.genus == ws.genus, "word file genus did not round-trip");
      for (int i = 0; i < ws.genus; ++i)
        expect(back.beta_words[i] == ws.beta_words[i], "beta word did not round-trip");
    }
  });

  return b.report;
}

}  // namespace hgc
