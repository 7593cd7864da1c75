#ifndef HGC_FOX_HPP
#define HGC_FOX_HPP

#include <array>

#include "hgc/cup.hpp"
#include "hgc/words.hpp"

namespace hgc {

// Pairing values on the generators of the one-holed surface group, derived
// from minimal-position loops in the disk-with-bands model (bands attached
// in the order x_1, y_1, ..., x_g, y_g along the boundary). Extended to the
// whole group ring by the two derivation axioms.
class FoxTable {
 public:
  static FoxTable standard(int genus);

  int genus() const { return g_; }
  // u, v index the 2g generators: even = x, odd = y.
  const GroupRingElement& pair(int u, int v) const { return t_[size_t(u) * 2 * g_ + v]; }

  // Versioned text form with an integrity hash line.
  std::string serialize() const;
  static FoxTable deserialize(const std::string& text);

 private:
  int g_ = 0;
  std::vector<GroupRingElement> t_;
};

// The homotopy intersection pairing, extended from the generator table by
//   eta(x x', y) = x eta(x', y) + aug(x') eta(x, y)
//   eta(x, y y') = eta(x, y) y' + aug(y) eta(x, y')
// together with eta(1, .) = eta(., 1) = 0.
GroupRingElement eta(const GroupRingElement& a, const GroupRingElement& b, const FoxTable& t);

// Standard symplectic pairing on H1 coordinates: omega0(x_i, y_i) = 1.
Int omega0(const IntVec& u, const IntVec& v);

// Ring map to the handlebody killing the x generators.
GroupRingElement kappa_alpha(const GroupRingElement& a);

// Word model of a manifold: the beta meridians as free words.
class WordModelManifold {
 public:
  WordModelManifold(int genus, std::vector<FreeWord> beta_words);

  int genus() const { return g_; }
  const std::vector<FreeWord>& beta_words() const { return w_; }
  const FoxTable& table() const { return table_; }
  const IntegerLattice& l_alpha() const { return la_; }
  const IntegerLattice& l_beta() const { return lb_; }
  const AbelianGroupPresentation& h1() const { return h1_; }
  const IntegerLattice& h2() const { return h2_; }

  // Ring map killing the normal closure of the beta words. Supported when
  // every word carries exactly one positive x letter (solved form); the map
  // substitutes that generator and keeps the y's.
  bool kappa_beta_supported() const { return kb_supported_; }
  GroupRingElement kappa_beta(const GroupRingElement& a) const;

  struct Rep {
    IntVec lambda, mu;
    GroupRingElement a, b;  // Z-linear combinations of x letters / beta words
  };
  Rep representatives(const IntVec& h) const;

 private:
  int g_;
  std::vector<FreeWord> w_;
  FoxTable table_;
  IntegerLattice la_, lb_, h2_;
  AbelianGroupPresentation h1_;
  bool kb_supported_ = false;
  std::vector<FreeWord> kb_images_;
};

struct EtaBarClass {
  IntVec lift;  // degree-one part, a class in H1 of the surface
  AbelianGroupPresentation::Image reduced;
};

// Reduction of eta to H1(Sigma)/(L_alpha + L_beta); both arguments must
// represent classes in L_alpha ∩ L_beta.
EtaBarClass eta_bar(const GroupRingElement& a, const GroupRingElement& b,
                    const WordModelManifold& m);

// Triple-cup tensor from the word model, on the canonical curve-aligned
// basis of L_alpha ∩ L_beta.
CupTensor mu_words(const WordModelManifold& m);

// Element of the third exterior power of H1 of the surface.
struct Lambda3 {
  int n = 0;  // ambient dimension 2g
  std::map<std::array<int, 3>, Int> entries;  // strictly increasing triples
  bool is_zero() const { return entries.empty(); }
  Lambda3 operator+(const Lambda3& o) const;
  Lambda3 operator-(const Lambda3& o) const;
  bool operator==(const Lambda3& o) const { return n == o.n && entries == o.entries; }
};

// First Johnson invariant of an automorphism given by its generator images:
// the degree-two defect of f(z) z^{-1}, assembled through the intersection
// duality and verified to lie in the image of Lambda^3.
Lambda3 tau1(const std::vector<FreeWord>& images, int genus, int magnus_depth = 4);

struct TwistComparison {
  CupTensor mu_base, mu_twisted;
  std::map<std::tuple<int, int, int>, Int> difference;  // twisted - base
  std::map<std::tuple<int, int, int>, Int> predicted;   // from tau1
  bool agree = false;
};

// Compares the change of the cup tensor under regluing by f against the
// prediction from tau1(f), both computed independently.
TwistComparison mu_twist_delta(const WordModelManifold& m, const std::vector<FreeWord>& images);

}  // namespace hgc

#endif
