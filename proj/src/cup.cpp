#include "hgc/cup.hpp"

#include <algorithm>

namespace hgc {

namespace {

// Overall orientation convention: fixed once so that the 3-torus example
// evaluates to +1 on its canonical basis triple.
constexpr int kOrientationSign = -1;

IntegerMatrix curve_class_matrix(const HeegaardDiagram& d, Family f) {
  int n = d.curve_count(f);
  IntegerMatrix m(n, 2 * d.genus());
  for (int i = 0; i < n; ++i) {
    IntVec cl = d.cycle_class(d.curve_chain(f, i));
    for (int j = 0; j < 2 * d.genus(); ++j) m.at(i, j) = cl[j];
  }
  return m;
}

}  // namespace

std::pair<IntegerLattice, IntegerLattice> lagrangians(const HeegaardDiagram& d) {
  IntegerMatrix a = curve_class_matrix(d, Family::alpha);
  IntegerMatrix b = curve_class_matrix(d, Family::beta);
  IntegerLattice la(2 * d.genus(), a), lb(2 * d.genus(), b);
  if (la.rank() != d.genus() || lb.rank() != d.genus())
    throw validation_error("not a cut system: curve classes do not span rank g");
  return {la, lb};
}

ManifoldHomology manifold_homology(const HeegaardDiagram& d) {
  auto [la, lb] = lagrangians(d);
  ManifoldHomology mh;
  mh.l_alpha = la;
  mh.l_beta = lb;
  mh.h1 = quotient_presentation(2 * d.genus(), lattice_sum(la, lb));
  mh.h2 = lattice_intersection(la, lb);
  if (mh.h1.free_rank() != mh.h2.rank())
    throw contract_error("rank of H2 disagrees with the free rank of H1");
  return mh;
}

ClassPair pair_representatives(const HeegaardDiagram& d, const IntVec& h) {
  auto [la, lb] = lagrangians(d);
  if (!lattice_intersection(la, lb).contains(h))
    throw contract_error("class not in L_alpha ∩ L_beta");
  IntegerMatrix a = curve_class_matrix(d, Family::alpha);
  IntegerMatrix b = curve_class_matrix(d, Family::beta);
  auto lambda = solve_integer(a.transposed(), h);
  auto mu = solve_integer(b.transposed(), h);
  if (!lambda || !mu) throw contract_error("no integer representative for the class");
  return ClassPair{h, *lambda, *mu};
}

namespace {

struct ComponentWalk {
  PhiResult::Component comp;
  OneChain chain;
};

// Arc coefficients along one component: the value jumps by jump_sign * sign
// at every cut crossing; the arc after the base crossing starts at zero.
// other_first is the index of the first copy curve in the other family.
ComponentWalk walk_component(const HeegaardDiagram& cd, Family fam, int curve, int jump_sign,
                             int other_first, int rotation) {
  const auto& order = cd.curve_order(fam, curve);
  int n = int(order.size());
  // cut positions: crossings against the copies of the other family
  std::vector<int> cuts;
  for (int k = 0; k < n; ++k) {
    const Crossing& c = cd.crossings()[order[k]];
    if ((fam == Family::alpha ? c.beta : c.alpha) >= other_first) cuts.push_back(k);
  }
  ComponentWalk w;
  w.chain = cd.zero_chain();
  if (cuts.empty()) return w;

  Int total = 0;
  for (int k : cuts) total += cd.crossings()[order[k]].sign;
  if (total != 0)
    throw contract_error("multicurve component meets the other family with nonzero "
                         "algebraic intersection");

  // base: smallest crossing id among the cuts, then rotate
  int base = 0;
  for (int t = 1; t < int(cuts.size()); ++t)
    if (cd.crossings()[order[cuts[t]]].id < cd.crossings()[order[cuts[base]]].id) base = t;
  base = (base + rotation % int(cuts.size()) + int(cuts.size())) % int(cuts.size());

  w.comp.family = fam;
  w.comp.curve = curve;
  int m = int(cuts.size());
  Int value = 0;
  for (int t = 0; t < m; ++t) {
    int cur = cuts[(base + t) % m];
    int nxt = cuts[(base + t + 1) % m];
    const Crossing& c = cd.crossings()[order[cur]];
    if (t > 0) value += jump_sign * c.sign;  // value on the arc after this cut
    w.comp.cut_ids.push_back(c.id);
    w.comp.signs.push_back(c.sign);
    w.comp.values.push_back(value);
    int k = cur;
    do {
      w.chain[cd.arc_index(fam, curve, k)] += value;
      k = (k + 1) % n;
    } while (k != nxt);
  }
  return w;
}

}  // namespace

PhiResult phi_cycle_rotated(const HeegaardDiagram& d, const ClassPair& x, const ClassPair& xp,
                            const std::vector<int>& rotations, bool flip_side) {
  PhiResult res;
  res.cabled = cable(d, x.lambda, xp.mu, flip_side);
  const HeegaardDiagram& cd = res.cabled.diagram;
  res.chain = cd.zero_chain();
  res.a_part = cd.zero_chain();
  res.b_part = cd.zero_chain();
  int comp_index = 0;
  auto rot = [&](int k) { return k < int(rotations.size()) ? rotations[k] : 0; };

  int first_beta_copy = d.curve_count(Family::beta);
  int first_alpha_copy = d.curve_count(Family::alpha);
  for (int i = 0; i < int(res.cabled.alpha_copies.size()); ++i)
    for (int curve : res.cabled.alpha_copies[i]) {
      ComponentWalk w =
          walk_component(cd, Family::alpha, curve, -1, first_beta_copy, rot(comp_index));
      if (!w.comp.cut_ids.empty()) {
        res.chain += w.chain;
        res.a_part += w.chain;
        res.components.push_back(std::move(w.comp));
      }
      ++comp_index;
    }
  for (int j = 0; j < int(res.cabled.beta_copies.size()); ++j)
    for (int curve : res.cabled.beta_copies[j]) {
      ComponentWalk w =
          walk_component(cd, Family::beta, curve, 1, first_alpha_copy, rot(comp_index));
      if (!w.comp.cut_ids.empty()) {
        res.chain += w.chain;
        res.b_part += w.chain;
        res.components.push_back(std::move(w.comp));
      }
      ++comp_index;
    }

  if (!cd.is_cycle(res.chain)) throw contract_error("cup 1-chain failed to close up");
  ManifoldHomology mh = manifold_homology(cd);
  res.class_in_m = mh.h1.project(cd.cycle_class(res.chain));
  return res;
}

PhiResult phi_cycle(const HeegaardDiagram& d, const ClassPair& x, const ClassPair& xp,
                    bool flip_side) {
  return phi_cycle_rotated(d, x, xp, {}, flip_side);
}

Int triple_cup(const HeegaardDiagram& d, const ClassPair& x, const ClassPair& xp,
               const ClassPair& xpp, bool flip_side) {
  PhiResult phi = phi_cycle(d, x, xp, flip_side);
  const HeegaardDiagram& cd = phi.cabled.diagram;
  OneChain third = cd.zero_chain();
  for (int k = 0; k < int(xpp.lambda.size()); ++k) {
    if (xpp.lambda[k] == 0) continue;
    OneChain c = cd.curve_chain(Family::alpha, k);
    c *= xpp.lambda[k];
    third += c;
  }
  return kOrientationSign * cd.omega(phi.chain, third);
}

Int CupTensor::value(int i, int j, int k) const {
  int p[3] = {i, j, k};
  int sign = 1;
  // sort three indices, tracking the permutation sign
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2 - a; ++b)
      if (p[b] > p[b + 1]) {
        std::swap(p[b], p[b + 1]);
        sign = -sign;
      }
  if (p[0] == p[1] || p[1] == p[2]) return 0;
  auto it = entries.find({p[0], p[1], p[2]});
  return it == entries.end() ? Int(0) : Int(sign * it->second);
}

CupTensor mu_tensor(const HeegaardDiagram& d) {
  ManifoldHomology mh = manifold_homology(d);
  IntegerMatrix a = curve_class_matrix(d, Family::alpha);
  int r = mh.h2.rank();
  // lambda coordinates of the intersection lattice, canonicalized
  IntegerMatrix lam(r, d.curve_count(Family::alpha));
  for (int i = 0; i < r; ++i) {
    auto l = solve_integer(a.transposed(), mh.h2.basis().row(i));
    if (!l) throw contract_error("intersection class escaped the alpha span");
    for (int j = 0; j < int(l->size()); ++j) lam.at(i, j) = (*l)[j];
  }
  CupTensor t;
  t.basis_lambda = hermite_normal_form(lam);
  t.basis = t.basis_lambda * a;
  std::vector<ClassPair> reps;
  for (int i = 0; i < t.basis.rows(); ++i)
    reps.push_back(pair_representatives(d, t.basis.row(i)));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = j + 1; k < r; ++k)
        t.entries[{i, j, k}] = triple_cup(d, reps[i], reps[j], reps[k]);
  return t;
}

}  // namespace hgc
