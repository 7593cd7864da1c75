#ifndef HGC_LATTICE_HPP
#define HGC_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "hgc/error.hpp"

namespace hgc {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense matrix over Z, row-major. Entries are exact.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static IntegerMatrix identity(int n);
  static IntegerMatrix from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  IntVec row(int r) const;
  IntegerMatrix transposed() const;

  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  void negate_col(int c);
  void add_row_multiple(int dst, int src, const Int& q);  // row[dst] += q*row[src]
  void add_col_multiple(int dst, int src, const Int& q);

 private:
  int rows_ = 0, cols_ = 0;
  IntVec e_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntVec operator*(const IntegerMatrix& m, const IntVec& x);  // column-vector product
Int det(const IntegerMatrix& m);                            // fraction-free elimination

struct SmithForm {
  IntegerMatrix u, d, v;  // u*m*v = d, u and v unimodular, diagonal d1 | d2 | ...
  int rank = 0;
};

// Deterministic: pivot is the smallest-magnitude nonzero entry, ties broken
// by row-major position.
SmithForm smith_normal_form(const IntegerMatrix& m);

// Row-style Hermite normal form of the row span: echelon with positive pivots
// and entries above each pivot reduced into [0, pivot). Zero rows dropped.
// Equal lattices get identical matrices.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

// Solves m*x = b over Z. Returns std::nullopt when no integer solution exists.
// The returned solution is deterministic (free coordinates set to zero).
std::optional<IntVec> solve_integer(const IntegerMatrix& m, const IntVec& b);

// Basis of { x : m*x = 0 } as columns, returned as rows of the result.
// The kernel lattice is saturated, so this is a genuine basis.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

// Sublattice of Z^n in canonical (HNF) form. Structural equality is
// mathematical equality. Rank 0 is a legal value.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  explicit IntegerLattice(int ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}
  IntegerLattice(int ambient_rank, const IntegerMatrix& generators);

  int ambient_rank() const { return ambient_; }
  int rank() const { return basis_.rows(); }
  const IntegerMatrix& basis() const { return basis_; }

  bool contains(const IntVec& v) const;
  // Coefficients c with sum_i c_i * basis_row_i = v, if v is a member.
  std::optional<IntVec> coordinates(const IntVec& v) const;

  bool operator==(const IntegerLattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  int ambient_ = 0;
  IntegerMatrix basis_;  // rank x ambient, HNF
};

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b);

// Z^n / sub as free part + torsion with the divisibility chain, plus the
// projection map. projection(v) == 0 exactly when v lies in sub.
class AbelianGroupPresentation {
 public:
  struct Image {
    IntVec free;     // coordinates in Z^free_rank
    IntVec torsion;  // residues, torsion[i] in [0, d_i)
    bool is_zero() const;
    bool operator==(const Image& o) const { return free == o.free && torsion == o.torsion; }
  };

  AbelianGroupPresentation() = default;

  int ambient_rank() const { return n_; }
  int free_rank() const { return free_rank_; }
  const IntVec& torsion() const { return torsion_; }
  Image project(const IntVec& v) const;

  friend AbelianGroupPresentation quotient_presentation(int ambient_rank,
                                                        const IntegerLattice& sub);

 private:
  int n_ = 0;
  int rank_ = 0;       // rank of the sublattice
  int free_rank_ = 0;  // n - rank
  IntVec diag_;        // SNF diagonal entries of the sublattice, length rank_
  IntVec torsion_;     // diag entries > 1
  IntegerMatrix v_;    // coordinate change: class of v read off from v*V
};

AbelianGroupPresentation quotient_presentation(int ambient_rank, const IntegerLattice& sub);

}  // namespace hgc

#endif
