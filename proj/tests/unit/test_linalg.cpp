#include <functional>
#include <numeric>
#include <random>

#include "affmaps/linalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace affmaps;
using namespace affmaps::oracle;


TEST_CASE("hermite normal form") {
  auto I = IntegerMatrix::identity(2);
  auto hi = hermite_normal_form(I);
  CHECK(hi.H == I);
  CHECK(hi.U == I);
  IntegerMatrix A{{2, 4}, {1, 3}};
  auto hf = hermite_normal_form(A);
  CHECK(hf.U * A == hf.H);
  CHECK(hf.H == oracle_hnf(A));
  CHECK(abs(determinant(hf.U)) == 1);
}

TEST_CASE("hermite pivot of the printed kernel") {
  IntegerMatrix Kt{{5, 18, 11, 0}, {21, 80, 0, -33}};
  auto hf = hermite_normal_form(Kt);
  REQUIRE(hf.pivot_columns.size() == 2);
  CHECK(hf.H(0, hf.pivot_columns[0]) == 1);
  CHECK(hf.H(1, hf.pivot_columns[1]) == 22);
}

TEST_CASE("hermite form property") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 250; ++trial) {
    std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 5;
    auto A = random_matrix(rng, m, n, -6, 6);
    auto hf = hermite_normal_form(A);
    REQUIRE(hf.U * A == hf.H);
    CHECK(abs(determinant(hf.U)) == 1);
    CHECK(hf.H == oracle_hnf(A));
    for (std::size_t r = 0; r < hf.pivot_columns.size(); ++r) {
      std::size_t c = hf.pivot_columns[r];
      CHECK(hf.H(r, c) > 0);
      for (std::size_t i = 0; i < r; ++i) CHECK((hf.H(i, c) >= 0 && hf.H(i, c) < hf.H(r, c)));
      for (std::size_t i = r + 1; i < m; ++i) CHECK(hf.H(i, c) == 0);
    }
  }
}

TEST_CASE("smith normal form") {
  IntegerMatrix D{{2, 0}, {0, 3}};
  auto sf = smith_normal_form(D);
  CHECK(sf.diagonal == std::vector<Integer>{1, 6});
  CHECK(sf.U * D * sf.V == sf.S);
  auto I = IntegerMatrix::identity(3);
  CHECK(smith_normal_form(I).S == I);
  IntegerMatrix Z(2, 2);
  CHECK(smith_normal_form(Z).S == Z);
}

TEST_CASE("smith form property against minor gcds") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 250; ++trial) {
    std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    auto A = random_matrix(rng, m, n, -5, 5);
    auto sf = smith_normal_form(A);
    REQUIRE(sf.U * A * sf.V == sf.S);
    CHECK(abs(determinant(sf.U)) == 1);
    CHECK(abs(determinant(sf.V)) == 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(sf.S(i, j) == 0);
    Integer prev = 1;
    Integer running = 1;
    for (std::size_t k = 1; k <= sf.diagonal.size(); ++k) {
      const Integer& s = sf.diagonal[k - 1];
      CHECK(s >= 0);
      if (k > 1 && s != 0) CHECK(s % prev == 0);
      running *= s;
      CHECK(running == minor_gcd(A, k));
      prev = s;
    }
  }
}

TEST_CASE("integer kernel examples") {
  IntegerMatrix A{{-80, 21, 2, 0}, {-54, 15, 0, 2}};
  auto K = integer_kernel(A);
  REQUIRE(K.cols() == 2);
  CHECK(A * K == IntegerMatrix(2, 2));
  // the printed basis spans an index-11 sublattice of the saturated kernel
  std::vector<Integer> v1{5, 18, 11, 0}, v2{21, 80, 0, -33}, w{10, 38, 1, -15};
  CHECK(in_row_span_integral(K, v1));
  CHECK(in_row_span_integral(K, v2));
  CHECK(in_row_span_integral(K, w));
  IntegerMatrix printed{{5, 18, 11, 0}, {21, 80, 0, -33}};
  CHECK(minor_gcd(printed, 2) == 11 * minor_gcd(K.transpose(), 2));
  CHECK(canonical_lattice_basis(printed) == printed);
  CHECK(lattice_index(printed) == 11);
  CHECK(integer_kernel(IntegerMatrix::identity(3)).cols() == 0);
  CHECK(integer_kernel(IntegerMatrix(1, 3)) == IntegerMatrix::identity(3));
}

TEST_CASE("integer kernel property and saturation") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + trial % 3, n = 2 + (trial / 3) % 3;
    auto A = random_matrix(rng, m, n, -3, 3);
    auto K = integer_kernel(A);
    REQUIRE(K.rows() == n);
    CHECK(A * K == IntegerMatrix(m, K.cols()));
    CHECK(rank(K) + rank(A) == n);
    CHECK(K == integer_kernel(hermite_normal_form(A).H));
    std::vector<Integer> v(n);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == n) {
        IntegerMatrix col(n, 1);
        for (std::size_t k = 0; k < n; ++k) col(k, 0) = v[k];
        if (A * col == IntegerMatrix(m, 1)) CHECK(in_row_span_integral(K, v));
        return;
      }
      for (int x = -3; x <= 3; ++x) {
        v[i] = x;
        walk(i + 1);
      }
    };
    walk(0);
  }
}

TEST_CASE("unimodular extension") {
  IntegerMatrix V{{5, 21}, {18, 80}, {11, 0}, {0, -33}};
  auto t = unimodular_extension(V, 4);
  RationalMatrix printed{{5, Rational(21, 22), 0, 0},
                         {18, Rational(40, 11), 0, 0},
                         {11, 0, 1, 0},
                         {0, Rational(-3, 2), 0, 1}};
  CHECK(t.M == printed);
  CHECK(t.W == IntegerMatrix{{1, 0}, {0, 22}});
  CHECK(t.d == 2);
  IntegerMatrix e1{{1}, {0}};
  auto u = unimodular_extension(e1, 2);
  CHECK(u.M == RationalMatrix::identity(2));
  CHECK(u.W == IntegerMatrix{{1}});
  CHECK_THROWS_AS(unimodular_extension(IntegerMatrix{{1, 2}, {2, 4}}, 2), std::invalid_argument);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_matrix(rng, 3, 1, -9, 9);
    if (c == IntegerMatrix(3, 1)) continue;
    auto ext = unimodular_extension(c, 3);
    CHECK(determinant(ext.M) == 1);
    CHECK(inverse(ext.M) * ext.M == RationalMatrix::identity(3));
    for (std::size_t i = 0; i < 3; ++i) CHECK(ext.M(i, 0) * Rational(ext.W(0, 0)) == Rational(c(i, 0)));
  }
}

TEST_CASE("determinants agree with cofactor expansion") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    auto A = random_matrix(rng, n, n, -7, 7);
    CHECK(determinant(A) == cofactor_det(A));
    CHECK(determinant(to_rational(A)) == Rational(cofactor_det(A)));
  }
}
