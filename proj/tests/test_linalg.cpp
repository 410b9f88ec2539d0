#include <gtest/gtest.h>

#include <boost/integer/common_factor.hpp>
#include <random>

#include "inccat/linalg.hpp"

using namespace inccat;

namespace {

Rational determinant(Matrix<Integer> a) {
  const std::size_t n = a.size();
  Matrix<Rational> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

TEST(RowReduce, RankAndKernel) {
  Matrix<Rational> a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(a), 2u);
  const auto k = kernel_basis(a, 3);
  ASSERT_EQ(k.size(), 1u);
  for (const auto& row : a) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * k[0][j];
    EXPECT_EQ(dot, 0);
  }
}

TEST(RowReduce, EmptyMatrixHasFullKernel) {
  EXPECT_EQ(kernel_basis({}, 3).size(), 3u);
  EXPECT_EQ(kernel_basis({}, 0).size(), 0u);
}

TEST(Smith, DiagonalExamples) {
  auto s = smith_normal_form({{2, 4}, {6, 8}}, 2);
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 4}));
  s = smith_normal_form({{2, 0}, {0, 3}}, 2);
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{1, 6}));
  EXPECT_EQ(s.free_rank(), 0u);
  EXPECT_EQ(s.torsion(), std::vector<Integer>{6});
  s = smith_normal_form({}, 3);
  EXPECT_EQ(s.free_rank(), 3u);
}

TEST(Smith, RowLatticeMembership) {
  const auto s = smith_normal_form({{2, 0}, {0, 3}}, 2);
  EXPECT_TRUE(s.in_row_lattice({2, 3}));
  EXPECT_TRUE(s.in_row_lattice({4, -9}));
  EXPECT_TRUE(s.in_row_lattice({0, 0}));
  EXPECT_FALSE(s.in_row_lattice({1, 0}));
  EXPECT_FALSE(s.in_row_lattice({1, 1}));
  const auto t = smith_normal_form({{1, 1, -1}}, 3);
  EXPECT_EQ(t.free_rank(), 2u);
  EXPECT_TRUE(t.in_row_lattice({-2, -2, 2}));
  EXPECT_FALSE(t.in_row_lattice({1, 0, 0}));
}

TEST(Smith, RandomMatricesSatisfyInvariants) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix<Integer> a(n, std::vector<Integer>(n));
    Integer g = 0;
    for (auto& row : a)
      for (auto& x : row) {
        x = entry(rng);
        g = boost::integer::gcd(g, abs(x));
      }
    const auto s = smith_normal_form(a, n);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
    if (!s.diagonal.empty()) {
      EXPECT_EQ(s.diagonal[0], g);
    }
    const Rational det = determinant(a);
    if (det != 0) {
      Integer prod = 1;
      for (const auto& d : s.diagonal) prod *= d;
      EXPECT_EQ(Rational(prod), abs(det));
    }
    EXPECT_EQ(abs(determinant(s.column_transform)), 1);
    for (int k = 0; k < 5; ++k) {
      std::vector<Integer> x(n, 0);
      for (std::size_t r = 0; r < n; ++r) {
        const int c = entry(rng);
        for (std::size_t j = 0; j < n; ++j) x[j] += c * a[r][j];
      }
      EXPECT_TRUE(s.in_row_lattice(x));
    }
  }
}
