#include <random>

#include <gtest/gtest.h>

#include "rtoric/families.hpp"
#include "rtoric/lattice.hpp"
#include "test_support.hpp"

namespace rtoric {
namespace {

using testing::big;

BigMatrix row_matrix(BigVector const &v) { return v.transpose(); }

TEST(Lattice, RankAndDeterminant)
{
  BigMatrix m(3, 3);
  m << 2, 0, 1, 1, 3, 2, 1, 1, 2;
  EXPECT_EQ(lattice::determinant(m), 6);
  EXPECT_EQ(lattice::rank(m), 3);
  m.row(2) = m.row(0) + m.row(1);
  EXPECT_EQ(lattice::rank(m), 2);
  EXPECT_EQ(lattice::determinant(m), 0);

  Matrix<long> small(2, 2);
  small << 0, 1, 1, 0;
  EXPECT_EQ(lattice::determinant(small), -1);
}

TEST(Lattice, KernelOfOnes)
{
  BigMatrix const k = lattice::integer_kernel(row_matrix(big({1, 1})));
  ASSERT_EQ(k.rows(), 1);
  EXPECT_TRUE(k.row(0) == row_matrix(big({1, -1})) || k.row(0) == row_matrix(big({-1, 1})));
}

TEST(Lattice, KernelProperties)
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(1, 60);
  for (int trial = 0; trial < 40; ++trial) {
    Index const n = 3 + trial % 4;
    BigMatrix a(1, n);
    for (Index c = 0; c < n; ++c) { a(0, c) = entry(rng); }
    BigMatrix const k = lattice::integer_kernel(a);
    EXPECT_EQ(k.rows(), n - 1);
    EXPECT_TRUE((a * k.transpose()).isZero());
    // Saturated: the kernel basis extends to a unimodular matrix, so its
    // maximal minors are coprime. Equivalently they are a / gcd(a) up to sign.
    auto const minors = lattice::maximal_minors(k);
    BigInt g = 0;
    for (Index c = 0; c < n; ++c) { g = boost::multiprecision::gcd(g, a(0, c)); }
    for (Index c = 0; c < n; ++c) { EXPECT_EQ(lattice::abs_value(BigInt(minors(c))), a(0, c) / g); }
  }
}

TEST(Lattice, HermiteNormalFormIsCanonical)
{
  BigMatrix m(2, 3);
  m << 2, 4, 6, 1, 3, 5;
  BigMatrix u(2, 2);
  u << 3, 1, 2, 1; // unimodular
  EXPECT_TRUE(lattice::same_row_lattice(m, BigMatrix(u * m)));
  BigMatrix doubled = m;
  doubled.row(0) *= 2;
  EXPECT_FALSE(lattice::same_row_lattice(m, doubled));
}

TEST(Lattice, GcdExampleKernel)
{
  LatticeMatrix const k = kernel_lattice_basis(row_matrix(big({15, 18, 24, 36})));
  EXPECT_EQ(k.rows.rows(), 3);
  EXPECT_TRUE((row_matrix(big({15, 18, 24, 36})) * k.rows.transpose()).isZero());
}

TEST(Lattice, MatrixC)
{
  for (int n = 4; n <= 7; ++n) {
    for (int b = 2; b <= 5; ++b) {
      auto const p = InstanceParams::make(1, b, n);
      LatticeMatrix const c = lattice_C(p);
      EXPECT_EQ(c.rows.rows(), n - 2);
      EXPECT_TRUE((matrix_B(p) * c.rows.transpose()).isZero());
      EXPECT_TRUE(lattice::same_row_lattice(c.rows, lattice::integer_kernel(matrix_B(p))));
    }
  }
  EXPECT_THROW(lattice_C(InstanceParams::make(1, 2, 3)), std::invalid_argument);
}

TEST(Lattice, MatrixL)
{
  auto const p = InstanceParams::make(1, 3, 4);
  LatticeMatrix const l = lattice_L(p);
  EXPECT_EQ(l.rows.rows(), 3);
  auto const minors = lattice::maximal_minors(l.rows);
  std::vector<BigInt> got;
  for (Index c = 0; c < minors.size(); ++c) { got.push_back(lattice::abs_value(BigInt(minors(c)))); }
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<BigInt>{40, 41, 44, 53}));

  for (int a = 1; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      for (int n = 3; n <= 7; ++n) {
        auto const q = InstanceParams::make(a, b, n);
        EXPECT_TRUE((row_matrix(generators(q)) * lattice_L(q).rows.transpose()).isZero());
      }
    }
  }
  EXPECT_THROW(lattice_L(InstanceParams::make(1, 2, 2)), std::invalid_argument);
}

} // namespace
} // namespace rtoric
