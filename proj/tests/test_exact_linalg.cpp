#include <gtest/gtest.h>

#include <random>

#include "eschur/exact_linalg.hpp"
#include "oracles.hpp"

using namespace eschur;

TEST(DenseMatrix, ProductAndIdentity) {
  DenseMatrix<int> a(2, 3);
  a(0, 0) = 1;
  a(0, 2) = 2;
  a(1, 1) = 3;
  EXPECT_EQ(DenseMatrix<int>::identity(2) * a, a);
  EXPECT_EQ(a * DenseMatrix<int>::identity(3), a);
  EXPECT_THROW(a * a, std::invalid_argument);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(BareissDeterminant, SmallCases) {
  EXPECT_EQ(bareiss_determinant(DenseMatrix<Integer>(0, 0)), 1);
  DenseMatrix<Integer> m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  EXPECT_EQ(bareiss_determinant(m), -1);
  DenseMatrix<Integer> singular(3, 3, Integer(2));
  EXPECT_EQ(bareiss_determinant(singular), 0);
  EXPECT_THROW(bareiss_determinant(DenseMatrix<Integer>(2, 3)), std::invalid_argument);
}

TEST(BareissDeterminant, AgreesWithLeibnizOnRandomMatrices) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    DenseMatrix<Integer> m(n, n);
    std::vector<std::vector<Integer>> dense(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        // Sparse-ish so that zero pivots and row swaps actually occur.
        const int v = (rng() % 3 == 0) ? entry(rng) : 0;
        m(r, c) = v;
        dense[r][c] = v;
      }
    }
    EXPECT_EQ(bareiss_determinant(m), oracle::leibniz_determinant(dense));
  }
}

TEST(Nullspace, SimpleSystems) {
  // x0 - x1 = 0, x1 - x2 = 0 over three unknowns: spanned by (1,1,1).
  std::vector<SparseRow> eqs{{{0, 1}, {1, -1}}, {{1, 1}, {2, -1}}};
  const auto basis = nullspace(eqs, 3);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (std::vector<Rational>{1, 1, 1}));
  EXPECT_EQ(nullspace({}, 2).size(), 2u);
  // Unsorted input with a repeated column that cancels.
  std::vector<SparseRow> messy{{{2, 3}, {0, 2}, {2, -3}}};
  const auto b2 = nullspace(messy, 3);
  EXPECT_EQ(b2.size(), 2u);
  EXPECT_THROW(nullspace({{{5, 1}}}, 3), std::out_of_range);
}

TEST(Nullspace, FractionalSolutions) {
  // 2 x0 + 3 x1 = 0.
  const auto basis = nullspace({{{0, 2}, {1, 3}}}, 2);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0][0], Rational(-3, 2));
  EXPECT_EQ(basis[0][1], 1);
}

TEST(Nullspace, RandomSystemsAgreeWithDenseRank) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t unknowns = 2 + trial % 9;
    const std::size_t rows = 1 + (trial * 7) % 12;
    std::vector<SparseRow> eqs;
    std::vector<std::vector<Rational>> dense;
    for (std::size_t r = 0; r < rows; ++r) {
      SparseRow row;
      std::vector<Rational> d(unknowns, Rational(0));
      for (std::size_t c = 0; c < unknowns; ++c) {
        if (rng() % 3) continue;
        const int v = entry(rng);
        if (v == 0) continue;
        row.emplace_back(c, v);
        d[c] = v;
      }
      // Occasionally repeat a combination of earlier rows.
      if (r >= 2 && rng() % 4 == 0) {
        row.clear();
        for (std::size_t c = 0; c < unknowns; ++c) {
          d[c] = dense[r - 1][c] * 2 - dense[r - 2][c];
          if (d[c] != 0) row.emplace_back(c, Integer(numerator(d[c])));
        }
      }
      eqs.push_back(row);
      dense.push_back(d);
    }
    const auto basis = nullspace(eqs, unknowns);
    EXPECT_EQ(basis.size(), unknowns - oracle::dense_rank(dense));
    for (const auto& x : basis) {
      for (const auto& d : dense) {
        Rational dot = 0;
        for (std::size_t c = 0; c < unknowns; ++c) dot += d[c] * x[c];
        EXPECT_EQ(dot, 0);
      }
    }
    // The basis vectors are independent: stacking them gives full rank.
    EXPECT_EQ(oracle::dense_rank(basis), basis.size());
  }
}
