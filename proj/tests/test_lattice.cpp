#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hgc/lattice.hpp"

using namespace hgc;

namespace {

IntegerMatrix mat(std::vector<IntVec> rows) { return IntegerMatrix::from_rows(rows); }

bool is_unimodular(const IntegerMatrix& m) {
  Int d = det(m);
  return d == 1 || d == -1;
}

IntVec vec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Brute-force membership oracle: v lies in the span of `rows` with
// coefficients bounded by `bound` in absolute value.
bool enumerated_member(const std::vector<IntVec>& rows, const IntVec& v, int bound) {
  size_t k = rows.size();
  std::vector<int> c(k, -bound);
  while (true) {
    IntVec acc(v.size(), Int(0));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < v.size(); ++j) acc[j] += Int(c[i]) * rows[i][j];
    if (acc == v) return true;
    size_t i = 0;
    for (; i < k; ++i) {
      if (c[i] < bound) {
        ++c[i];
        break;
      }
      c[i] = -bound;
    }
    if (i == k) return false;
  }
}

IntegerMatrix random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

void check_snf(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(is_unimodular(s.u));
  CHECK(is_unimodular(s.v));
  for (int i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    for (int j = 0; j < std::min(s.d.rows(), s.d.cols()); ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
  for (int i = 0; i + 1 < s.rank; ++i) {
    CHECK(s.d.at(i, i) > 0);
    CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form: identity") {
  SmithForm s = smith_normal_form(IntegerMatrix::identity(2));
  CHECK(s.d == IntegerMatrix::identity(2));
  CHECK(s.u == IntegerMatrix::identity(2));
  CHECK(s.v == IntegerMatrix::identity(2));
}

TEST_CASE("smith normal form: diag(2,3) -> diag(1,6)") {
  IntegerMatrix m = mat({vec({2, 0}), vec({0, 3})});
  SmithForm s = smith_normal_form(m);
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 1) == 6);
  check_snf(m);
}

TEST_CASE("smith normal form: zero matrix") {
  IntegerMatrix m(3, 2);
  SmithForm s = smith_normal_form(m);
  CHECK(s.rank == 0);
  CHECK(s.d == IntegerMatrix(3, 2));
  CHECK(s.u == IntegerMatrix::identity(3));
  CHECK(s.v == IntegerMatrix::identity(2));
}

TEST_CASE("smith normal form: randomized u*m*v = d with chain") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
    check_snf(random_matrix(rng, r, c, -9, 9));
  }
}

TEST_CASE("solve_integer basics") {
  CHECK(*solve_integer(IntegerMatrix::identity(2), vec({5, 7})) == vec({5, 7}));
  CHECK(!solve_integer(mat({vec({2})}), vec({3})).has_value());
  // unique solution, derived by substitution: x2 = 2, x1 = 1
  auto x = solve_integer(mat({vec({1, 1}), vec({0, 2})}), vec({3, 4}));
  REQUIRE(x.has_value());
  CHECK(*x == vec({1, 2}));
}

TEST_CASE("solve_integer randomized: solutions verify, misses are real") {
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 80; ++trial) {
    int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
    IntegerMatrix m = random_matrix(rng, r, c, -6, 6);
    IntVec b(r);
    for (int i = 0; i < r; ++i) b[i] = int(rng() % 13) - 6;
    auto x = solve_integer(m, b);
    if (x.has_value()) CHECK(m * *x == b);
  }
  // known-solvable instances round-trip
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
    IntegerMatrix m = random_matrix(rng, r, c, -6, 6);
    IntVec x0(c);
    for (int j = 0; j < c; ++j) x0[j] = int(rng() % 9) - 4;
    auto x = solve_integer(m, m * x0);
    REQUIRE(x.has_value());
    CHECK(m * *x == m * x0);
  }
}

TEST_CASE("hermite normal form is canonical for equal lattices") {
  // same lattice, different generating sets
  IntegerLattice a(2, mat({vec({2, 2}), vec({2, -2})}));
  IntegerLattice b(2, mat({vec({2, 2}), vec({0, 4}), vec({4, 0})}));
  CHECK(a == b);
  CHECK(a.basis() == mat({vec({2, 2}), vec({0, 4})}));
}

TEST_CASE("lattice_sum examples") {
  IntegerLattice e1(2, mat({vec({1, 0})}));
  IntegerLattice e2(2, mat({vec({0, 1})}));
  CHECK(lattice_sum(e1, e2).basis() == IntegerMatrix::identity(2));

  IntegerLattice a(2, mat({vec({2, 0})}));
  CHECK(lattice_sum(a, e2).basis() == mat({vec({2, 0}), vec({0, 1})}));

  IntegerLattice p(2, mat({vec({2, 2})}));
  IntegerLattice q(2, mat({vec({2, -2})}));
  CHECK(lattice_sum(p, q).basis() == mat({vec({2, 2}), vec({0, 4})}));
}

TEST_CASE("lattice_intersection examples") {
  IntegerLattice e1(2, mat({vec({1, 0})}));
  IntegerLattice e2(2, mat({vec({0, 1})}));
  CHECK(lattice_intersection(e1, e2).rank() == 0);

  IntegerLattice l(3, mat({vec({1, 2, 0}), vec({0, 0, 5})}));
  CHECK(lattice_intersection(l, l) == l);

  IntegerLattice a(2, mat({vec({2, 0}), vec({0, 1})}));
  IntegerLattice b(2, mat({vec({1, 1})}));
  CHECK(lattice_intersection(a, b).basis() == mat({vec({2, 2})}));
}

TEST_CASE("lattice algebra against brute-force enumeration") {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + int(rng() % 2);
    IntegerMatrix ga = random_matrix(rng, 2, n, -2, 2);
    IntegerMatrix gb = random_matrix(rng, 2, n, -2, 2);
    IntegerLattice a(n, ga), b(n, gb);
    IntegerLattice s = lattice_sum(a, b), i = lattice_intersection(a, b);

    // commutative, associative with a third lattice, idempotent
    CHECK(lattice_sum(b, a) == s);
    CHECK(lattice_intersection(b, a) == i);
    CHECK(lattice_sum(a, a) == a);
    CHECK(lattice_intersection(a, a) == a);
    IntegerLattice c(n, random_matrix(rng, 1, n, -2, 2));
    CHECK(lattice_sum(lattice_sum(a, b), c) == lattice_sum(a, lattice_sum(b, c)));
    CHECK(lattice_intersection(lattice_intersection(a, b), c) ==
          lattice_intersection(a, lattice_intersection(b, c)));

    // inclusion chain and the rank identity
    for (int r = 0; r < i.rank(); ++r) {
      CHECK(a.contains(i.basis().row(r)));
      CHECK(b.contains(i.basis().row(r)));
    }
    for (int r = 0; r < a.rank(); ++r) CHECK(s.contains(a.basis().row(r)));
    CHECK(a.rank() + b.rank() == s.rank() + i.rank());

    // spot-check membership against bounded enumeration
    std::vector<IntVec> rows_a, rows_b;
    for (int r = 0; r < 2; ++r) {
      rows_a.push_back(ga.row(r));
      rows_b.push_back(gb.row(r));
    }
    for (int k = 0; k < 6; ++k) {
      IntVec v(n);
      for (int j = 0; j < n; ++j) v[j] = int(rng() % 7) - 3;
      bool in_a = enumerated_member(rows_a, v, 4);
      // enumeration bound is generous for entries this small
      if (in_a != a.contains(v)) CHECK(a.contains(v) == enumerated_member(rows_a, v, 8));
      bool in_both = a.contains(v) && b.contains(v);
      CHECK(in_both == i.contains(v));
    }
  }
}

TEST_CASE("quotient_presentation examples") {
  // Z^2 / <(2,0)> = Z + Z/2
  auto p = quotient_presentation(2, IntegerLattice(2, mat({vec({2, 0})})));
  CHECK(p.free_rank() == 1);
  REQUIRE(p.torsion().size() == 1);
  CHECK(p.torsion()[0] == 2);

  // Z^2 / Z^2 = 0
  auto q = quotient_presentation(2, IntegerLattice(2, IntegerMatrix::identity(2)));
  CHECK(q.free_rank() == 0);
  CHECK(q.torsion().empty());

  // lens relation matrix [[1,q],[0,p]]: hand Smith form is diag(1,p)
  for (long pp : {2L, 3L, 5L, 7L}) {
    auto lp = quotient_presentation(2, IntegerLattice(2, mat({vec({1, 1}), vec({0, pp})})));
    CHECK(lp.free_rank() == 0);
    REQUIRE(lp.torsion().size() == 1);
    CHECK(lp.torsion()[0] == pp);
  }
}

TEST_CASE("projection vanishes exactly on the sublattice") {
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + int(rng() % 3);
    IntegerLattice sub(n, random_matrix(rng, 1 + int(rng() % 3), n, -3, 3));
    auto pres = quotient_presentation(n, sub);
    CHECK(pres.free_rank() == n - sub.rank());
    for (int k = 0; k < 8; ++k) {
      IntVec v(n);
      for (int j = 0; j < n; ++j) v[j] = int(rng() % 11) - 5;
      CHECK(pres.project(v).is_zero() == sub.contains(v));
    }
    // members project to zero
    for (int r = 0; r < sub.rank(); ++r) CHECK(pres.project(sub.basis().row(r)).is_zero());
  }
}

TEST_CASE("projection is additive") {
  std::mt19937_64 rng(1005);
  IntegerLattice sub(3, mat({vec({2, 4, 0}), vec({0, 6, 3})}));
  auto pres = quotient_presentation(3, sub);
  for (int k = 0; k < 20; ++k) {
    IntVec v(3), w(3), s(3);
    for (int j = 0; j < 3; ++j) {
      v[j] = int(rng() % 9) - 4;
      w[j] = int(rng() % 9) - 4;
      s[j] = v[j] + w[j];
    }
    auto pv = pres.project(v), pw = pres.project(w), ps = pres.project(s);
    for (size_t j = 0; j < ps.free.size(); ++j) CHECK(ps.free[j] == pv.free[j] + pw.free[j]);
    for (size_t j = 0; j < ps.torsion.size(); ++j) {
      Int m = pres.torsion()[j];
      CHECK((pv.torsion[j] + pw.torsion[j]) % m == ps.torsion[j] % m);
    }
  }
}
