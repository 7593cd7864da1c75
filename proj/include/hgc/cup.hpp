#ifndef HGC_CUP_HPP
#define HGC_CUP_HPP

#include <map>
#include <tuple>

#include "hgc/diagram.hpp"

namespace hgc {

struct ManifoldHomology {
  IntegerLattice l_alpha, l_beta;      // inside H1 of the surface
  AbelianGroupPresentation h1;         // H1(Sigma) / (L_alpha + L_beta)
  IntegerLattice h2;                   // L_alpha intersect L_beta
};

// Kernels of the two handlebody inclusions, spanned by the curve classes.
// Rejects curve systems whose classes are dependent.
std::pair<IntegerLattice, IntegerLattice> lagrangians(const HeegaardDiagram& d);

ManifoldHomology manifold_homology(const HeegaardDiagram& d);

// A class h in L_alpha ∩ L_beta together with the unique integer combinations
// of curve classes realizing it on each side.
struct ClassPair {
  IntVec h;       // in H1(Sigma)
  IntVec lambda;  // over alpha curves
  IntVec mu;      // over beta curves
};

ClassPair pair_representatives(const HeegaardDiagram& d, const IntVec& h);

// The cup-product 1-cycle: built on the cabled diagram from arc coefficients
// that jump by the crossing sign at every intersection of the two cabled
// multicurve families.
struct PhiResult {
  CableResult cabled;
  OneChain chain;   // cycle on cabled.diagram
  OneChain a_part;  // arcs of the alpha-side copies
  OneChain b_part;  // arcs of the beta-side copies
  AbelianGroupPresentation::Image class_in_m;
  struct Component {
    Family family;           // alpha components carry r-values, beta s-values
    int curve;               // curve index in the cabled diagram
    std::vector<int> cut_ids;  // cutting crossing ids, in curve order from the base
    std::vector<int> signs;    // sign of the cut crossing, same order
    IntVec values;             // coefficient on the arc after each cut
  };
  std::vector<Component> components;
};

PhiResult phi_cycle(const HeegaardDiagram& d, const ClassPair& x, const ClassPair& xp,
                    bool flip_side = false);

// Same with each component's arc numbering rotated: rotations[k] advances the
// base point of the k-th emitted component. Used by the invariance checks.
PhiResult phi_cycle_rotated(const HeegaardDiagram& d, const ClassPair& x, const ClassPair& xp,
                            const std::vector<int>& rotations, bool flip_side = false);

// Pairing of the cup 1-cycle against the alpha-side representative of the
// third class, evaluated homologically in the cabled diagram. The side flag
// flips the copy placement; the value is independent of it.
Int triple_cup(const HeegaardDiagram& d, const ClassPair& x, const ClassPair& xp,
               const ClassPair& xpp, bool flip_side = false);

// Alternating 3-form on the canonical basis of the free part of H^1(M).
// Basis vectors are the curve-aligned lifts: Hermite form of the lattice of
// lambda-coordinates, mapped back through the alpha classes.
struct CupTensor {
  IntegerMatrix basis;         // r x 2g rows in H1(Sigma)
  IntegerMatrix basis_lambda;  // r x (#alpha curves)
  std::map<std::tuple<int, int, int>, Int> entries;  // i < j < k only

  int rank() const { return basis.rows(); }
  Int value(int i, int j, int k) const;  // alternating in the arguments
  bool operator==(const CupTensor& o) const {
    return basis_lambda == o.basis_lambda && entries == o.entries;
  }
};

CupTensor mu_tensor(const HeegaardDiagram& d);

}  // namespace hgc

#endif
