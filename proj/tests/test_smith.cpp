#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace aspherix;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

void expect_valid(IntMatrix const& a, SmithDecomposition const& s) {
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_TRUE(is_unimodular(s.U));
  EXPECT_TRUE(is_unimodular(s.V));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) {
        EXPECT_EQ(s.D(i, j), 0);
      }
  for (std::size_t t = 0; t < s.divisors.size(); ++t) {
    EXPECT_GE(s.divisors[t], 0);
    if (t + 1 < s.divisors.size()) {
      if (s.divisors[t] == 0) {
        EXPECT_EQ(s.divisors[t + 1], 0);
      } else {
        EXPECT_EQ(s.divisors[t + 1] % s.divisors[t], 0);
      }
    }
  }
}

}  // namespace

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = rng() % 5;
    IntMatrix a = oracle::random_int_matrix(rng, n, n, -9, 9);
    EXPECT_EQ(determinant(a), oracle::cofactor_det(a));
  }
}

TEST(Snf, WorkedExample) {
  IntMatrix a = int_matrix({{2, 4}, {6, 8}});
  auto s = snf(a);
  EXPECT_EQ(s.divisors, ints({2, 4}));
  expect_valid(a, s);
  EXPECT_EQ(oracle::gcd_of_minors_divisors(a), ints({2, 4}));
}

TEST(Snf, IdentityAndZero) {
  EXPECT_EQ(snf(identity_matrix<Integer>(4)).divisors, ints({1, 1, 1, 1}));
  auto z = snf(IntMatrix(3, 2, Integer(0)));
  EXPECT_EQ(z.rank(), 0u);
  EXPECT_EQ(z.divisors, ints({0, 0}));
  EXPECT_TRUE(snf(IntMatrix(0, 3, Integer(0))).divisors.empty());
}

TEST(Snf, RandomMatricesAgainstGcdOfMinors) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    IntMatrix a = oracle::random_int_matrix(rng, m, n, -9, 9);
    auto s = snf(a);
    expect_valid(a, s);
    EXPECT_EQ(s.divisors, oracle::gcd_of_minors_divisors(a));
  }
}

TEST(Snf, Deterministic) {
  std::mt19937_64 rng(43);
  IntMatrix a = oracle::random_int_matrix(rng, 4, 3, -9, 9);
  auto s1 = snf(a), s2 = snf(a);
  EXPECT_EQ(s1.U, s2.U);
  EXPECT_EQ(s1.V, s2.V);
}

TEST(Snf, InvariantUnderTranspositionAndUnimodularChanges) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    IntMatrix a = oracle::random_int_matrix(rng, m, n, -9, 9);
    auto d = elementary_divisors(a);
    EXPECT_EQ(elementary_divisors(a.transposed()), d);
    // a unimodular matrix is the U of some SNF
    IntMatrix p = snf(oracle::random_int_matrix(rng, m, m, -3, 3)).U;
    IntMatrix q = snf(oracle::random_int_matrix(rng, n, n, -3, 3)).V;
    EXPECT_EQ(elementary_divisors(p * a * q), d);
  }
}

TEST(Snf, LargeEntriesStayExact) {
  IntMatrix a = int_matrix({{1, 0}, {0, 1}});
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  auto s = snf(a);
  expect_valid(a, s);
  EXPECT_EQ(s.divisors[0], gcd(a(0, 0), a(1, 1)));
  EXPECT_EQ(s.divisors[0] * s.divisors[1], a(0, 0) * a(1, 1));
}

TEST(KernelBasis, Examples) {
  IntMatrix k = kernel_basis(int_matrix({{2, 0}}));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0), 0);
  EXPECT_EQ(abs(k(1, 0)), 1);

  EXPECT_EQ(kernel_basis(identity_matrix<Integer>(3)).cols(), 0u);
  IntMatrix z = kernel_basis(IntMatrix(1, 1, Integer(0)));
  ASSERT_EQ(z.cols(), 1u);
  EXPECT_EQ(abs(z(0, 0)), 1);
}

TEST(KernelBasis, RankNullityAndSaturation) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 5;
    IntMatrix a = oracle::random_int_matrix(rng, m, n, -4, 4);
    IntMatrix k = kernel_basis(a);
    EXPECT_EQ(rank(a) + k.cols(), n);
    EXPECT_TRUE(is_zero_matrix(a * k));
    // a Z-basis of a kernel spans a saturated lattice: all its divisors are 1
    for (auto const& d : elementary_divisors(k)) EXPECT_EQ(d, 1);
  }
}

TEST(Cokernel, Structure) {
  AbelianGroup g = cokernel(int_matrix({{2}, {0}}));
  EXPECT_EQ(g.free_rank, 1u);
  EXPECT_EQ(g.torsion, ints({2}));
  EXPECT_TRUE(cokernel(identity_matrix<Integer>(2)).is_trivial());
}

TEST(PairDivisors, Examples) {
  auto p1 = pair_divisors(identity_matrix<Integer>(2), int_matrix({{1}, {0}}));
  EXPECT_EQ(p1.divisors, ints({1}));
  EXPECT_EQ(p1.quotient.free_rank, 1u);
  EXPECT_TRUE(p1.quotient.torsion.empty());

  auto p2 = pair_divisors(int_matrix({{1}}), int_matrix({{2}}));
  EXPECT_EQ(p2.divisors, ints({2}));
  EXPECT_EQ(p2.quotient.free_rank, 0u);
  EXPECT_EQ(p2.quotient.torsion, ints({2}));

  IntMatrix amb = int_matrix({{1, 1}, {0, 2}, {1, 0}});
  auto p3 = pair_divisors(amb, amb);
  EXPECT_EQ(p3.divisors, ints({1, 1}));
  EXPECT_TRUE(p3.quotient.is_trivial());
}

TEST(PairDivisors, CoordinatesReproduceTheSubBasis) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix amb = kernel_basis(oracle::random_int_matrix(rng, 1, 4, -5, 5));
    IntMatrix coeff = oracle::random_int_matrix(rng, amb.cols(), 2, -3, 3);
    IntMatrix sub = amb * coeff;
    auto pd = pair_divisors(amb, sub);
    EXPECT_EQ(pd.coordinates, coeff);
    EXPECT_EQ(pd.divisors, elementary_divisors(coeff));
  }
}

TEST(PairDivisors, Errors) {
  EXPECT_THROW(pair_divisors(int_matrix({{2}, {0}}), int_matrix({{1}, {0}})), NotContained);
  EXPECT_THROW(pair_divisors(int_matrix({{1}, {0}}), int_matrix({{0}, {1}})), NotContained);
  EXPECT_THROW(pair_divisors(int_matrix({{1, 2}, {1, 2}}), int_matrix({{1}, {1}})), std::invalid_argument);
  EXPECT_THROW(pair_divisors(int_matrix({{1}}), int_matrix({{1}, {0}})), ShapeError);
}
