#include "hgc/lattice.hpp"

#include <algorithm>

namespace hgc {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVec>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw contract_error("ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntegerMatrix::row(int r) const {
  IntVec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntegerMatrix::negate_col(int c) {
  for (int i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

void IntegerMatrix::add_row_multiple(int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
}

void IntegerMatrix::add_col_multiple(int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw contract_error("matrix product dimension mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec operator*(const IntegerMatrix& m, const IntVec& x) {
  if (m.cols() != int(x.size())) throw contract_error("matrix-vector dimension mismatch");
  IntVec y(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) y[i] += m.at(i, j) * x[j];
  return y;
}

Int det(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw contract_error("det of non-square matrix");
  int n = m.rows();
  IntegerMatrix a = m;
  // Bareiss fraction-free elimination.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = t / prev;
      }
    prev = a.at(k, k);
  }
  Int d = a.at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest-magnitude nonzero entry in the trailing submatrix, ties by
// row-major position. Returns false if the submatrix is zero.
bool find_pivot(const IntegerMatrix& a, int t, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      const Int& v = a.at(i, j);
      if (v == 0) continue;
      Int av = abs_int(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm s;
  s.d = m;
  s.u = IntegerMatrix::identity(m.rows());
  s.v = IntegerMatrix::identity(m.cols());
  IntegerMatrix& a = s.d;
  int t = 0;
  int limit = std::min(m.rows(), m.cols());
  while (t < limit) {
    int pr, pc;
    if (!find_pivot(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    s.u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    s.v.swap_cols(t, pc);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t with row operations, re-pivoting on smaller remainders.
      for (int i = t + 1; i < a.rows(); ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        a.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (a.at(i, t) != 0) {
          a.swap_rows(t, i);
          s.u.swap_rows(t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < a.cols(); ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        a.add_col_multiple(j, t, -q);
        s.v.add_col_multiple(j, t, -q);
        if (a.at(t, j) != 0) {
          a.swap_cols(t, j);
          s.v.swap_cols(t, j);
          dirty = true;
        }
      }
    }

    // The pivot must divide every remaining entry so the diagonal forms a
    // divisibility chain; pull a bad row into row t and redo the clearing.
    bool divides_all = true;
    for (int i = t + 1; i < a.rows() && divides_all; ++i)
      for (int j = t + 1; j < a.cols(); ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          a.add_row_multiple(t, i, 1);
          s.u.add_row_multiple(t, i, 1);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;

    if (a.at(t, t) < 0) {
      a.negate_row(t);
      s.u.negate_row(t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    // Euclidean reduction of column c on rows >= r.
    while (true) {
      int p = -1;
      Int best;
      for (int i = r; i < a.rows(); ++i) {
        if (a.at(i, c) == 0) continue;
        Int av = abs_int(a.at(i, c));
        if (p < 0 || av < best) {
          p = i;
          best = av;
        }
      }
      if (p < 0) break;  // column empty below r
      a.swap_rows(r, p);
      bool cleared = true;
      for (int i = r + 1; i < a.rows(); ++i) {
        if (a.at(i, c) == 0) continue;
        Int q = a.at(i, c) / a.at(r, c);
        a.add_row_multiple(i, r, -q);
        if (a.at(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a.at(r, c) == 0) continue;
    if (a.at(r, c) < 0) a.negate_row(r);
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int q = a.at(i, c) / a.at(r, c);
      if (a.at(i, c) - q * a.at(r, c) < 0) q -= 1;  // floor division
      a.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntegerMatrix out(r, a.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  return out;
}

std::optional<IntVec> solve_integer(const IntegerMatrix& m, const IntVec& b) {
  if (int(b.size()) != m.rows()) throw contract_error("solve_integer: rhs length mismatch");
  SmithForm s = smith_normal_form(m);
  IntVec ub = s.u * b;
  IntVec y(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
      if (i < m.cols()) y[i] = ub[i] / s.d.at(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  int n = m.cols();
  int k = n - s.rank;
  IntegerMatrix out(k, n);
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < n; ++i) out.at(t, i) = s.v.at(i, s.rank + t);
  return out;
}

IntegerLattice::IntegerLattice(int ambient_rank, const IntegerMatrix& generators)
    : ambient_(ambient_rank) {
  if (generators.cols() != ambient_rank && generators.rows() != 0)
    throw contract_error("lattice generators have wrong ambient rank");
  basis_ = hermite_normal_form(generators);
  if (basis_.cols() == 0) basis_ = IntegerMatrix(basis_.rows(), ambient_rank);
}

bool IntegerLattice::contains(const IntVec& v) const {
  return coordinates(v).has_value();
}

std::optional<IntVec> IntegerLattice::coordinates(const IntVec& v) const {
  if (int(v.size()) != ambient_) throw contract_error("lattice membership: wrong dimension");
  return solve_integer(basis_.transposed(), v);
}

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw contract_error("lattice_sum: ambient rank mismatch");
  IntegerMatrix stacked(a.rank() + b.rank(), a.ambient_rank());
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.ambient_rank(); ++j) stacked.at(i, j) = a.basis().at(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < a.ambient_rank(); ++j) stacked.at(a.rank() + i, j) = b.basis().at(i, j);
  return IntegerLattice(a.ambient_rank(), stacked);
}

IntegerLattice lattice_intersection(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw contract_error("lattice_intersection: ambient rank mismatch");
  int n = a.ambient_rank();
  int ra = a.rank(), rb = b.rank();
  // Columns are the basis vectors of a followed by the negated basis of b;
  // kernel elements (x, y) satisfy sum x_i a_i = sum y_j b_j.
  IntegerMatrix m(n, ra + rb);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < ra; ++j) m.at(i, j) = a.basis().at(j, i);
    for (int j = 0; j < rb; ++j) m.at(i, ra + j) = -b.basis().at(j, i);
  }
  IntegerMatrix ker = kernel_basis(m);
  IntegerMatrix gens(ker.rows(), n);
  for (int t = 0; t < ker.rows(); ++t)
    for (int i = 0; i < n; ++i) {
      Int acc = 0;
      for (int j = 0; j < ra; ++j) acc += ker.at(t, j) * a.basis().at(j, i);
      gens.at(t, i) = acc;
    }
  return IntegerLattice(n, gens);
}

bool AbelianGroupPresentation::Image::is_zero() const {
  for (const Int& x : free)
    if (x != 0) return false;
  for (const Int& x : torsion)
    if (x != 0) return false;
  return true;
}

AbelianGroupPresentation::Image AbelianGroupPresentation::project(const IntVec& v) const {
  if (int(v.size()) != n_) throw contract_error("projection: wrong dimension");
  IntVec w(n_);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      if (v[i] != 0) w[j] += v[i] * v_.at(i, j);
  Image img;
  for (int i = 0; i < rank_; ++i) {
    if (diag_[i] == 1) continue;
    Int r = w[i] % diag_[i];
    if (r < 0) r += diag_[i];
    img.torsion.push_back(r);
  }
  for (int i = rank_; i < n_; ++i) img.free.push_back(w[i]);
  return img;
}

AbelianGroupPresentation quotient_presentation(int ambient_rank, const IntegerLattice& sub) {
  if (sub.ambient_rank() != ambient_rank)
    throw contract_error("quotient_presentation: ambient rank mismatch");
  AbelianGroupPresentation p;
  p.n_ = ambient_rank;
  IntegerMatrix gen = sub.basis();
  if (gen.rows() == 0) gen = IntegerMatrix(0, ambient_rank);
  SmithForm s = smith_normal_form(gen);
  p.rank_ = s.rank;
  p.free_rank_ = ambient_rank - s.rank;
  p.v_ = s.v;
  for (int i = 0; i < s.rank; ++i) {
    p.diag_.push_back(s.d.at(i, i));
    if (s.d.at(i, i) > 1) p.torsion_.push_back(s.d.at(i, i));
  }
  return p;
}

}  // namespace hgc
