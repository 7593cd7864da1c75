#ifndef HGC_WORDS_HPP
#define HGC_WORDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hgc/lattice.hpp"

namespace hgc {

// Letters over the free group on x_1, y_1, ..., x_g, y_g. Generator m
// (0-based; even m are x's, odd are y's) is stored as +(m+1), its inverse
// as -(m+1). Words are kept freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int16_t> letters);

  static FreeWord generator(int m, int exponent = 1);
  static FreeWord x(int i, int e = 1) { return generator(2 * i, e); }       // 0-based handle
  static FreeWord y(int i, int e = 1) { return generator(2 * i + 1, e); }

  // "x1 Y2 y3" with uppercase meaning inverse; tokens separated by blanks.
  static FreeWord parse(const std::string& text, int genus);

  const std::vector<int16_t>& letters() const { return l_; }
  int length() const { return int(l_.size()); }
  bool is_identity() const { return l_.empty(); }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  FreeWord pow(int e) const;
  FreeWord conjugated_by(const FreeWord& c) const;  // c * w * c^-1

  // Image under the endomorphism sending generator m to images[m].
  FreeWord substituted(const std::vector<FreeWord>& images) const;

  IntVec abelianization(int genus) const;  // exponent sums, length 2g
  std::string str() const;

  bool operator==(const FreeWord& o) const { return l_ == o.l_; }
  bool operator<(const FreeWord& o) const { return l_ < o.l_; }

 private:
  std::vector<int16_t> l_;
};

FreeWord commutator(const FreeWord& a, const FreeWord& b);
bool conjugate_in_free_group(const FreeWord& a, const FreeWord& b);

// Element of the integral group ring of the free group. No zero terms kept.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(const FreeWord& w, Int coeff = 1);
  static GroupRingElement unit() { return GroupRingElement(FreeWord{}); }
  static GroupRingElement zero() { return {}; }

  const std::map<FreeWord, Int>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Int augmentation() const;
  IntVec degree_one(int genus) const;  // class in I/I^2 = H_1, length 2g

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement& operator*=(const Int& k);
  bool operator==(const GroupRingElement& o) const { return t_ == o.t_; }

  void add_term(const FreeWord& w, const Int& c);
  std::string str() const;

 private:
  std::map<FreeWord, Int> t_;
};

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement antipode(const GroupRingElement& a);  // linear extension of inversion

inline GroupRingElement operator*(GroupRingElement a, const Int& k) {
  a *= k;
  return a;
}
inline GroupRingElement operator*(const Int& k, GroupRingElement a) {
  a *= k;
  return a;
}

// Truncated noncommutative power series over X_1, Y_1, ..., X_g, Y_g.
// Monomials are sequences of generator indices of length at most the
// truncation degree.
class MagnusSeries {
 public:
  explicit MagnusSeries(int degree) : n_(degree) {}

  int degree() const { return n_; }
  const std::map<std::vector<uint8_t>, Int>& coefficients() const { return c_; }
  Int coefficient(const std::vector<uint8_t>& mono) const;

  // Least total degree carrying a nonzero coefficient; degree()+1 when the
  // series is zero up to the truncation.
  int valuation() const;

  MagnusSeries& operator+=(const MagnusSeries& o);
  MagnusSeries operator*(const MagnusSeries& o) const;
  void add(const std::vector<uint8_t>& mono, const Int& coeff);

 private:
  int n_;
  std::map<std::vector<uint8_t>, Int> c_;
};

// Ring homomorphism up to the truncation degree: x |-> 1 + X,
// x^-1 |-> 1 - X + X^2 - ...
MagnusSeries magnus_expand(const GroupRingElement& a, int degree);

// Lower central series membership via the Magnus valuation of w - 1.
// Requires k <= depth.
bool gamma_member(const FreeWord& w, int k, int depth = 4);

}  // namespace hgc

#endif
