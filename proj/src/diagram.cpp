#include "hgc/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace hgc {

OneChain& OneChain::operator+=(const OneChain& o) {
  if (size() != o.size()) throw contract_error("chain size mismatch");
  for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

OneChain& OneChain::operator-=(const OneChain& o) {
  if (size() != o.size()) throw contract_error("chain size mismatch");
  for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

OneChain& OneChain::operator*=(const Int& k) {
  for (int i = 0; i < size(); ++i) c_[i] *= k;
  return *this;
}

struct HeegaardDiagram::HomologyData {
  IntegerMatrix cycle_basis;    // k x E, rows span ker(boundary_1)
  SmithForm cycle_solver;       // Smith form of cycle_basis^T, for coordinates
  AbelianGroupPresentation h1;  // cycles / face boundaries; free of rank 2g
};

const std::vector<int>& HeegaardDiagram::curve_order(Family f, int c) const {
  const auto& v = f == Family::alpha ? aorder_ : border_;
  if (c < 0 || c >= int(v.size())) throw contract_error("unknown curve");
  return v[c];
}

int HeegaardDiagram::arc_index(Family f, int curve, int k) const {
  const auto& off = f == Family::alpha ? aoff_ : boff_;
  int n = int(curve_order(f, curve).size());
  k = ((k % n) + n) % n;
  return off[curve] + k;
}

Family HeegaardDiagram::arc_family(int arc) const {
  return arc < boff_[0] ? Family::alpha : Family::beta;
}

int HeegaardDiagram::arc_curve(int arc) const {
  const bool isa = arc_family(arc) == Family::alpha;
  const auto& off = isa ? aoff_ : boff_;
  int c = 0;
  while (c + 1 < int(off.size()) && off[c + 1] <= arc) ++c;
  return c;
}

int HeegaardDiagram::arc_pos(int arc) const {
  const auto& off = arc_family(arc) == Family::alpha ? aoff_ : boff_;
  return arc - off[arc_curve(arc)];
}

std::array<HeegaardDiagram::End, 4> HeegaardDiagram::ccw_ends(int slot) const {
  if (cr_[slot].sign > 0)
    return {End{Family::alpha, true}, End{Family::beta, true}, End{Family::alpha, false},
            End{Family::beta, false}};
  return {End{Family::alpha, true}, End{Family::beta, false}, End{Family::alpha, false},
          End{Family::beta, true}};
}

int HeegaardDiagram::end_arc(int slot, End e) const {
  const Crossing& c = cr_[slot];
  int curve = e.fam == Family::alpha ? c.alpha : c.beta;
  int pos = e.fam == Family::alpha ? c.apos : c.bpos;
  // out-end is the tail of the arc starting here; in-end is the head of the
  // arc ending here.
  return arc_index(e.fam, curve, e.out ? pos : pos - 1);
}

Dart HeegaardDiagram::next_dart(Dart d) const {
  Family f = arc_family(d.arc);
  int curve = arc_curve(d.arc);
  int k = arc_pos(d.arc);
  const auto& order = curve_order(f, curve);
  int n = int(order.size());
  int slot;
  End arrival;
  if (d.forward) {
    slot = order[(k + 1) % n];
    arrival = End{f, false};
  } else {
    slot = order[k];
    arrival = End{f, true};
  }
  auto ends = ccw_ends(slot);
  int idx = -1;
  for (int i = 0; i < 4; ++i)
    if (ends[i].fam == arrival.fam && ends[i].out == arrival.out) idx = i;
  if (idx < 0) throw contract_error("face tracing: arrival end not found");
  End leave = ends[(idx + 3) % 4];
  return Dart{end_arc(slot, leave), leave.out};
}

void HeegaardDiagram::trace_faces() {
  std::vector<char> seen(size_t(2) * arc_count(), 0);
  auto dart_id = [](Dart d) { return 2 * d.arc + (d.forward ? 0 : 1); };
  for (int a = 0; a < arc_count(); ++a)
    for (bool fw : {true, false}) {
      Dart start{a, fw};
      if (seen[dart_id(start)]) continue;
      std::vector<Dart> face;
      Dart d = start;
      do {
        seen[dart_id(d)] = 1;
        face.push_back(d);
        d = next_dart(d);
      } while (!(d == start));
      faces_.push_back(std::move(face));
    }
}

namespace {

// Coordinates of a cycle in the row span of the kernel basis, via its
// precomputed Smith form.
IntVec coords_in_cycle_basis(const SmithForm& s, int k, const IntVec& chain) {
  IntVec ub = s.u * chain;
  IntVec y(k);
  for (int i = 0; i < int(ub.size()); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.d.at(i, i) != 0) throw contract_error("chain is not a cycle");
      y[i] = ub[i] / s.d.at(i, i);
    } else if (ub[i] != 0) {
      throw contract_error("chain is not a cycle");
    }
  }
  return s.v * y;
}

}  // namespace

void HeegaardDiagram::build_homology() {
  int V = crossing_count(), E = arc_count();
  IntegerMatrix b1(V, E);
  for (int arc = 0; arc < E; ++arc) {
    Family f = arc_family(arc);
    int c = arc_curve(arc), k = arc_pos(arc);
    const auto& order = curve_order(f, c);
    int n = int(order.size());
    b1.at(order[(k + 1) % n], arc) += 1;
    b1.at(order[k], arc) -= 1;
  }
  auto hom = std::make_shared<HomologyData>();
  hom->cycle_basis = kernel_basis(b1);
  hom->cycle_solver = smith_normal_form(hom->cycle_basis.transposed());
  int k = hom->cycle_basis.rows();
  IntegerMatrix fb(face_count(), k);
  for (int fi = 0; fi < face_count(); ++fi) {
    IntVec coord = coords_in_cycle_basis(hom->cycle_solver, k, face_boundary(fi).coefficients());
    for (int j = 0; j < k; ++j) fb.at(fi, j) = coord[j];
  }
  hom->h1 = quotient_presentation(k, IntegerLattice(k, fb));
  if (!hom->h1.torsion().empty())
    throw validation_error("surface homology has torsion; diagram is not orientable");
  if (hom->h1.free_rank() != 2 * genus_)
    throw validation_error("surface homology rank disagrees with genus");
  hom_ = std::move(hom);
}

HeegaardDiagram HeegaardDiagram::build(std::vector<Crossing> raw, int genus, int alpha_curves,
                                       int beta_curves) {
  if (genus < 0) throw validation_error("negative genus");
  if (raw.empty()) throw validation_error("diagram has no crossings");
  if (alpha_curves <= 0 || beta_curves <= 0) throw validation_error("empty curve family");
  HeegaardDiagram d;
  d.genus_ = genus;
  d.na_ = alpha_curves;
  d.nb_ = beta_curves;
  std::sort(raw.begin(), raw.end(),
            [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < raw.size(); ++i)
    if (raw[i].id == raw[i + 1].id) throw validation_error("duplicate crossing id");
  d.cr_ = std::move(raw);

  std::vector<int> acount(alpha_curves, 0), bcount(beta_curves, 0);
  for (const Crossing& c : d.cr_) {
    if (c.sign != 1 && c.sign != -1) throw validation_error("crossing sign must be +1 or -1");
    if (c.alpha < 0 || c.alpha >= alpha_curves || c.beta < 0 || c.beta >= beta_curves)
      throw validation_error("crossing references an unknown curve");
    ++acount[c.alpha];
    ++bcount[c.beta];
  }
  for (int c = 0; c < alpha_curves; ++c)
    if (acount[c] == 0)
      throw validation_error(
          "disconnected diagram: an alpha curve meets nothing; add a cancelling "
          "crossing pair by a finger move, then resubmit");
  for (int c = 0; c < beta_curves; ++c)
    if (bcount[c] == 0)
      throw validation_error(
          "disconnected diagram: a beta curve meets nothing; add a cancelling "
          "crossing pair by a finger move, then resubmit");

  d.aorder_.assign(alpha_curves, {});
  d.border_.assign(beta_curves, {});
  for (int c = 0; c < alpha_curves; ++c) d.aorder_[c].assign(acount[c], -1);
  for (int c = 0; c < beta_curves; ++c) d.border_[c].assign(bcount[c], -1);
  for (int s = 0; s < int(d.cr_.size()); ++s) {
    const Crossing& c = d.cr_[s];
    if (c.apos < 0 || c.apos >= acount[c.alpha] || d.aorder_[c.alpha][c.apos] != -1)
      throw validation_error("positions along an alpha curve must be a permutation");
    if (c.bpos < 0 || c.bpos >= bcount[c.beta] || d.border_[c.beta][c.bpos] != -1)
      throw validation_error("positions along a beta curve must be a permutation");
    d.aorder_[c.alpha][c.apos] = s;
    d.border_[c.beta][c.bpos] = s;
  }

  std::vector<int> parent(alpha_curves + beta_curves);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Crossing& c : d.cr_) parent[find(c.alpha)] = find(alpha_curves + c.beta);
  for (int i = 1; i < alpha_curves + beta_curves; ++i)
    if (find(i) != find(0))
      throw validation_error(
          "disconnected diagram: the union of the curves is not connected; add a "
          "cancelling crossing pair by a finger move, then resubmit");

  d.aoff_.assign(alpha_curves, 0);
  d.boff_.assign(beta_curves, 0);
  int off = 0;
  for (int c = 0; c < alpha_curves; ++c) {
    d.aoff_[c] = off;
    off += acount[c];
  }
  for (int c = 0; c < beta_curves; ++c) {
    d.boff_[c] = off;
    off += bcount[c];
  }

  d.trace_faces();
  int V = d.crossing_count(), E = d.arc_count(), F = d.face_count();
  if (V - E + F != 2 - 2 * genus)
    throw validation_error("traced genus disagrees with the declared genus");
  d.build_homology();
  return d;
}

OneChain HeegaardDiagram::curve_chain(Family f, int c) const {
  OneChain z = zero_chain();
  int n = int(curve_order(f, c).size());
  for (int k = 0; k < n; ++k) z[arc_index(f, c, k)] = 1;
  return z;
}

IntVec HeegaardDiagram::boundary(const OneChain& z) const {
  if (z.size() != arc_count()) throw contract_error("chain on the wrong diagram");
  IntVec b(crossing_count());
  for (int arc = 0; arc < arc_count(); ++arc) {
    if (z[arc] == 0) continue;
    Family f = arc_family(arc);
    int c = arc_curve(arc), k = arc_pos(arc);
    const auto& order = curve_order(f, c);
    int n = int(order.size());
    b[order[(k + 1) % n]] += z[arc];
    b[order[k]] -= z[arc];
  }
  return b;
}

bool HeegaardDiagram::is_cycle(const OneChain& z) const {
  for (const Int& x : boundary(z))
    if (x != 0) return false;
  return true;
}

OneChain HeegaardDiagram::face_boundary(int face) const {
  OneChain z = zero_chain();
  for (const Dart& d : faces_[face]) z[d.arc] += d.forward ? 1 : -1;
  return z;
}

IntVec HeegaardDiagram::cycle_class(const OneChain& z) const {
  if (!is_cycle(z)) throw contract_error("cycle_class of a non-cycle");
  IntVec coord =
      coords_in_cycle_basis(hom_->cycle_solver, hom_->cycle_basis.rows(), z.coefficients());
  return hom_->h1.project(coord).free;
}

Int HeegaardDiagram::omega(const OneChain& z1, const OneChain& z2) const {
  if (!is_cycle(z1) || !is_cycle(z2)) throw contract_error("omega requires cycles");
  // Cocycle of the left push-off of z2: at every vertex, split the flow of z2
  // into strands; a strand entering through end a and leaving through end b
  // crosses each end strictly counterclockwise between b and a.
  IntVec c(arc_count());
  for (int slot = 0; slot < crossing_count(); ++slot) {
    auto ends = ccw_ends(slot);
    long long flow[4];
    bool any = false;
    for (int i = 0; i < 4; ++i) {
      int arc = end_arc(slot, ends[i]);
      Int f = z2[arc] * (ends[i].out ? -1 : 1);  // flow into the vertex
      flow[i] = f.convert_to<long long>();
      if (flow[i] != 0) any = true;
    }
    if (!any) continue;
    std::vector<int> ins, outs;
    for (int i = 0; i < 4; ++i) {
      for (long long u = 0; u < flow[i]; ++u) ins.push_back(i);
      for (long long u = 0; u < -flow[i]; ++u) outs.push_back(i);
    }
    if (ins.size() != outs.size()) throw contract_error("unbalanced flow at a vertex");
    for (size_t t = 0; t < ins.size(); ++t) {
      int entry = ins[t], exit = outs[t];
      for (int h = (exit + 1) % 4; h != entry; h = (h + 1) % 4) {
        int arc = end_arc(slot, ends[h]);
        c[arc] += ends[h].out ? -1 : 1;
      }
    }
  }
  Int total = 0;
  for (int arc = 0; arc < arc_count(); ++arc)
    if (z1[arc] != 0 && c[arc] != 0) total += z1[arc] * c[arc];
  return total;
}

CableResult cable(const HeegaardDiagram& d, const std::vector<Int>& alpha_mults,
                  const std::vector<Int>& beta_mults, bool flip_side) {
  int na = d.curve_count(Family::alpha), nb = d.curve_count(Family::beta);
  if (int(alpha_mults.size()) != na || int(beta_mults.size()) != nb)
    throw contract_error("cable: multiplicity vector length mismatch");
  std::vector<int> ma(na), da(na, 1), mb(nb), db(nb, 1);
  for (int i = 0; i < na; ++i) {
    ma[i] = int(abs(alpha_mults[i]).convert_to<long long>());
    if (alpha_mults[i] < 0) da[i] = -1;
  }
  for (int j = 0; j < nb; ++j) {
    mb[j] = int(abs(beta_mults[j]).convert_to<long long>());
    if (beta_mults[j] < 0) db[j] = -1;
  }

  CableResult res;
  res.alpha_dir = da;
  res.beta_dir = db;
  res.alpha_copies.assign(na, {});
  res.beta_copies.assign(nb, {});
  int next_alpha = na, next_beta = nb;
  for (int i = 0; i < na; ++i)
    for (int u = 1; u <= ma[i]; ++u) res.alpha_copies[i].push_back(next_alpha++);
  for (int j = 0; j < nb; ++j)
    for (int v = 1; v <= mb[j]; ++v) res.beta_copies[j].push_back(next_beta++);

  // One crossing per (alpha instance, beta instance) pair near each original
  // crossing. Ids run over the originals in id order, then over the grid.
  int V = d.crossing_count();
  std::vector<std::vector<std::vector<int>>> grid_id(V);
  int next_id = 0;
  for (int s = 0; s < V; ++s) {
    const Crossing& c = d.crossings()[s];
    grid_id[s].assign(ma[c.alpha] + 1, std::vector<int>(mb[c.beta] + 1));
    for (int u = 0; u <= ma[c.alpha]; ++u)
      for (int v = 0; v <= mb[c.beta]; ++v) grid_id[s][u][v] = next_id++;
  }

  std::vector<Crossing> raw(next_id);

  for (int i = 0; i < na; ++i) {
    for (int u = 0; u <= ma[i]; ++u) {
      int dir = u == 0 ? 1 : da[i];
      int curve = u == 0 ? i : res.alpha_copies[i][u - 1];
      const auto& order = d.curve_order(Family::alpha, i);
      int n = int(order.size());
      int pos = 0;
      for (int t = 0; t < n; ++t) {
        int s = order[dir > 0 ? t : n - 1 - t];
        const Crossing& c = d.crossings()[s];
        int m = mb[c.beta];
        // The strand meets the bundle in ascending offset order exactly when
        // it crosses the beta strands from their right to their left.
        bool ascending = c.sign * dir < 0;
        if (flip_side) ascending = !ascending;
        for (int t2 = 0; t2 <= m; ++t2) {
          int v = ascending ? t2 : m - t2;
          Crossing& r = raw[grid_id[s][u][v]];
          r.id = grid_id[s][u][v];
          r.alpha = curve;
          r.apos = pos++;
          r.sign = c.sign * (u > 0 ? da[i] : 1) * (v > 0 ? db[c.beta] : 1);
        }
      }
    }
  }
  for (int j = 0; j < nb; ++j) {
    for (int v = 0; v <= mb[j]; ++v) {
      int dir = v == 0 ? 1 : db[j];
      int curve = v == 0 ? j : res.beta_copies[j][v - 1];
      const auto& order = d.curve_order(Family::beta, j);
      int n = int(order.size());
      int pos = 0;
      for (int t = 0; t < n; ++t) {
        int s = order[dir > 0 ? t : n - 1 - t];
        const Crossing& c = d.crossings()[s];
        int m = ma[c.alpha];
        bool ascending = c.sign * dir > 0;
        if (flip_side) ascending = !ascending;
        for (int t2 = 0; t2 <= m; ++t2) {
          int u = ascending ? t2 : m - t2;
          Crossing& r = raw[grid_id[s][u][v]];
          r.beta = curve;
          r.bpos = pos++;
        }
      }
    }
  }

  res.diagram = HeegaardDiagram::build(std::move(raw), d.genus(), next_alpha, next_beta);
  return res;
}

HeegaardDiagram finger_move(const HeegaardDiagram& d, Dart db, Dart da) {
  if (d.arc_family(db.arc) != Family::beta || d.arc_family(da.arc) != Family::alpha)
    throw contract_error("finger_move wants a beta dart and an alpha dart");
  bool together = false;
  for (const auto& face : d.faces()) {
    bool hb = false, ha = false;
    for (const Dart& x : face) {
      if (x == db) hb = true;
      if (x == da) ha = true;
    }
    if (hb && ha) together = true;
  }
  if (!together) throw contract_error("finger_move darts must bound a common face");

  int bcurve = d.arc_curve(db.arc), bk = d.arc_pos(db.arc);
  int acurve = d.arc_curve(da.arc), ak = d.arc_pos(da.arc);
  int max_id = 0;
  for (const Crossing& c : d.crossings()) max_id = std::max(max_id, c.id);
  int idX = max_id + 1, idY = max_id + 2;
  int sigma = (da.forward ? 1 : -1) * (db.forward ? 1 : -1);

  std::vector<Crossing> raw = d.crossings();
  for (Crossing& c : raw) {
    if (c.alpha == acurve && c.apos > ak) c.apos += 2;
    if (c.beta == bcurve && c.bpos > bk) c.bpos += 2;
  }
  // Along the finger the beta curve meets X then Y in dart order; the alpha
  // curve meets them as Y then X.
  int bposX = db.forward ? bk + 1 : bk + 2;
  int bposY = db.forward ? bk + 2 : bk + 1;
  int aposY = da.forward ? ak + 1 : ak + 2;
  int aposX = da.forward ? ak + 2 : ak + 1;
  raw.push_back(Crossing{idX, acurve, aposX, bcurve, bposX, -sigma});
  raw.push_back(Crossing{idY, acurve, aposY, bcurve, bposY, sigma});
  return HeegaardDiagram::build(std::move(raw), d.genus(), d.curve_count(Family::alpha),
                                d.curve_count(Family::beta));
}

}  // namespace hgc
