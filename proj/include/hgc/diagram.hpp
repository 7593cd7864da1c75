#ifndef HGC_DIAGRAM_HPP
#define HGC_DIAGRAM_HPP

#include <array>
#include <memory>
#include <vector>

#include "hgc/lattice.hpp"

namespace hgc {

enum class Family { alpha, beta };

inline Family other(Family f) { return f == Family::alpha ? Family::beta : Family::alpha; }

// A transversal intersection of one alpha-family curve with one beta-family
// curve. Positions give the cyclic order of crossings along each curve.
// sign = +1 when the frame (alpha direction, beta direction) is positively
// oriented; the counterclockwise order of strand ends at a +1 crossing is
// (alpha-out, beta-out, alpha-in, beta-in).
struct Crossing {
  int id = 0;
  int alpha = 0;
  int apos = 0;
  int beta = 0;
  int bpos = 0;
  int sign = 1;
};

struct Dart {
  int arc = 0;
  bool forward = true;
  bool operator==(const Dart& o) const { return arc == o.arc && forward == o.forward; }
};

// Integer 1-chain on the arcs of a diagram.
class OneChain {
 public:
  OneChain() = default;
  explicit OneChain(int arc_count) : c_(arc_count) {}
  Int& operator[](int arc) { return c_[arc]; }
  const Int& operator[](int arc) const { return c_[arc]; }
  int size() const { return int(c_.size()); }
  const IntVec& coefficients() const { return c_; }
  OneChain& operator+=(const OneChain& o);
  OneChain& operator-=(const OneChain& o);
  OneChain& operator*=(const Int& k);

 private:
  IntVec c_;
};

// Combinatorial model of a closed oriented surface with two transversal
// families of oriented curves, given as a rotation system. Curves of the
// same family are disjoint. Immutable after construction.
class HeegaardDiagram {
 public:
  // Validates the raw records: positions must be permutations, the union
  // graph connected, and the traced Euler characteristic equal to 2 - 2g.
  static HeegaardDiagram build(std::vector<Crossing> raw, int genus, int alpha_curves,
                               int beta_curves);

  int genus() const { return genus_; }
  int curve_count(Family f) const { return f == Family::alpha ? na_ : nb_; }
  int crossing_count() const { return int(cr_.size()); }
  const std::vector<Crossing>& crossings() const { return cr_; }

  // Crossing slots along a curve, in cyclic position order.
  const std::vector<int>& curve_order(Family f, int c) const;

  // Arcs: arc k of curve c runs from the crossing at position k to the one
  // at position k+1 (cyclically), oriented along the curve.
  int arc_count() const { return 2 * int(cr_.size()); }
  int arc_index(Family f, int curve, int k) const;
  Family arc_family(int arc) const;
  int arc_curve(int arc) const;
  int arc_pos(int arc) const;

  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  int face_count() const { return int(faces_.size()); }

  OneChain zero_chain() const { return OneChain(arc_count()); }
  OneChain curve_chain(Family f, int c) const;
  IntVec boundary(const OneChain& z) const;  // indexed by crossing slot
  bool is_cycle(const OneChain& z) const;
  OneChain face_boundary(int face) const;

  // Class of a cycle in the fixed basis of H1 of the surface (Z^{2g}).
  IntVec cycle_class(const OneChain& z) const;

  // Homological intersection number. Computed by pushing z2 off to its left
  // through the rotation system and pairing the resulting crossing cocycle
  // with z1; depends only on the classes of the two cycles.
  Int omega(const OneChain& z1, const OneChain& z2) const;

 private:
  int genus_ = 0, na_ = 0, nb_ = 0;
  std::vector<Crossing> cr_;                     // sorted by id
  std::vector<std::vector<int>> aorder_, border_;  // slot lists per curve
  std::vector<int> aoff_, boff_;                 // arc index offsets per curve
  std::vector<std::vector<Dart>> faces_;

  struct HomologyData;
  std::shared_ptr<const HomologyData> hom_;  // built eagerly, shared on copy

  struct End {
    Family fam;
    bool out;
  };
  std::array<End, 4> ccw_ends(int slot) const;
  int end_arc(int slot, End e) const;
  Dart next_dart(Dart d) const;
  void trace_faces();
  void build_homology();
};

// Copies of selected curves added as parallel push-offs. Multiplicity k adds
// |k| copies of the curve, oriented by sign(k). Copies sit on the curve's
// left side in ascending copy order (right side when flip_side is set);
// originals always remain in the diagram.
struct CableResult {
  HeegaardDiagram diagram;
  // Curve indices of the copies, per original curve, ascending copy index.
  std::vector<std::vector<int>> alpha_copies, beta_copies;
  std::vector<int> alpha_dir, beta_dir;  // orientation sign of the copies
};

CableResult cable(const HeegaardDiagram& d, const std::vector<Int>& alpha_mults,
                  const std::vector<Int>& beta_mults, bool flip_side = false);

// Pushes a finger of the beta arc under db across the alpha arc under da,
// adding a cancelling pair of crossings. Both darts must lie on the boundary
// of the same face.
HeegaardDiagram finger_move(const HeegaardDiagram& d, Dart db, Dart da);

}  // namespace hgc

#endif
