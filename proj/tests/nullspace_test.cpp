#include <gtest/gtest.h>

#include <random>

#include "moore57/block.hpp"
#include "moore57/error.hpp"
#include "moore57/exact_linalg.hpp"
#include "moore57/nullspace.hpp"
#include "oracles.hpp"

using namespace moore57;

TEST(NullSpace, RankOfCoefficientMatrix) { EXPECT_EQ(exact_rank(coefficient_matrix()), 19); }

TEST(NullSpace, BasisIsKroneckerProducts) { EXPECT_EQ(null_basis(), oracle::kron_basis()); }

TEST(NullSpace, BasisAnnihilated) {
  EXPECT_TRUE((coefficient_matrix() * null_basis()).isZero());
  for (int k = 0; k < kNullDim; ++k) EXPECT_TRUE((coefficient_matrix() * basis_vector(k)).isZero());
  EXPECT_EQ(exact_rank(null_basis()), 8);
}

TEST(NullSpace, LastEntryIsMinusCoefficientSum) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> dist(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    Coeffs n;
    for (int k = 0; k < kNullDim; ++k) n(k) = dist(rng);
    const Vec27 v = expand(n);
    EXPECT_EQ(v(26), -n.sum());
    EXPECT_EQ(coefficients_of(v), n);
  }
}

TEST(NullSpace, CoordinateVariables) {
  const auto& coords = coordinate_variables();
  for (int k = 0; k < kNullDim; ++k) {
    for (int j = 0; j < kNullDim; ++j) EXPECT_EQ(null_basis()(coords[k] - 1, j), k == j ? 1 : 0);
    const Triple t = var_triple(coords[k]);
    for (int i : t) EXPECT_LE(i, 2);
  }
}

TEST(NullSpace, RejectsNonKernelVectors) {
  Vec27 v = Vec27::Zero();
  v(0) = 1;
  try {
    coefficients_of(v);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInNullSpace);
  }
}

TEST(ExactLinalg, RankOfSmallMatrices) {
  Eigen::Matrix<Int, 3, 3> a;
  a << 2, 4, 6, 1, 2, 3, 0, 1, 1;
  EXPECT_EQ(exact_rank(a), 2);
  EXPECT_EQ(exact_rank(Eigen::Matrix<Int, 3, 3>::Identity()), 3);
  EXPECT_EQ(exact_rank(Eigen::Matrix<Int, 2, 4>::Zero()), 0);
}

TEST(ExactLinalg, Solve) {
  Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic> a(3, 2);
  a << 1, 1, 1, -1, 2, 0;
  Eigen::Matrix<Int, Eigen::Dynamic, 1> b(3);
  b << 5, 1, 6;
  const auto s = solve_exact(a, b);
  ASSERT_EQ(s.status, SolveStatus::Unique);
  EXPECT_EQ(s.x(0), 3);
  EXPECT_EQ(s.x(1), 2);
  b << 5, 1, 7;
  EXPECT_EQ(solve_exact(a, b).status, SolveStatus::Inconsistent);
  b << 1, 0, 1;
  EXPECT_EQ(solve_exact(a, b).status, SolveStatus::NonIntegral);
}
