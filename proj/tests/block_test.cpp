#include <gtest/gtest.h>

#include <random>

#include "moore57/block.hpp"
#include "moore57/error.hpp"
#include "moore57/expectations.hpp"
#include "oracles.hpp"

using namespace moore57;

namespace {

const IntersectionNumbers& p57() {
  static const IntersectionNumbers p = intersection_numbers(moore57_array());
  return p;
}

}  // namespace

TEST(Variables, Numbering) {
  EXPECT_EQ(var_index({1, 1, 1}), 1);
  EXPECT_EQ(var_index({3, 3, 3}), 27);
  EXPECT_EQ(var_index({3, 2, 3}), 24);
  EXPECT_EQ(var_index({3, 3, 2}), 26);
  EXPECT_EQ(var_index({1, 3, 3}), 9);
  for (int i = 1; i <= 27; ++i) EXPECT_EQ(var_index(var_triple(i)), i);
  EXPECT_THROW(var_triple(0), Error);
  EXPECT_THROW(var_triple(28), Error);
  EXPECT_THROW(var_index({0, 1, 1}), Error);
  EXPECT_THROW(var_index({1, 4, 1}), Error);
}

TEST(Blocks, Labels) {
  EXPECT_EQ(to_string(parse_block("322")), "322");
  EXPECT_THROW(parse_block("32"), Error);
  EXPECT_THROW(parse_block("402"), Error);
  EXPECT_THROW(parse_block("3a2"), Error);
}

TEST(Blocks, Admissibility) {
  EXPECT_FALSE(is_block_admissible(parse_block("111")));
  EXPECT_FALSE(is_block_admissible(parse_block("113")));
  EXPECT_FALSE(is_block_admissible(parse_block("131")));
  EXPECT_TRUE(is_block_admissible(parse_block("211")));
  EXPECT_TRUE(is_block_admissible(parse_block("333")));
  EXPECT_EQ(admissible_blocks().size(), 23u);
}

TEST(Blocks, CanonicalOrbitsCoverAdmissible) {
  const auto canon = canonical_blocks();
  ASSERT_EQ(canon.size(), 8u);
  std::size_t covered = 0;
  for (const BlockId& c : canon) {
    EXPECT_GE(c.u(), c.v());
    EXPECT_GE(c.v(), c.w());
    for (const BlockId& b : admissible_blocks()) covered += canonical_of(b) == c;
  }
  EXPECT_EQ(covered, 23u);
}

TEST(Blocks, ForcedZerosAgreeWithOracle) {
  for (const BlockId& b : admissible_blocks()) EXPECT_EQ(forced_zero_variables(b), oracle::structural_zeros(b)) << to_string(b);
}

TEST(Blocks, RhsErrors) {
  try {
    build_system(parse_block("111"), p57());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InadmissibleBlock);
  }
  EXPECT_THROW(build_system(parse_block("311"), p57()), Error);
}

TEST(Blocks, MatrixShape) {
  const Mat27& m = coefficient_matrix();
  // every variable appears once in each family
  for (int c = 0; c < 27; ++c) {
    for (int family = 0; family < 3; ++family) EXPECT_EQ(m.block(9 * family, c, 9, 1).sum(), 1);
  }
  EXPECT_EQ(m.sum(), 81);
}

// Matrix equations and the definitional oracle agree on random vectors.
TEST(Blocks, MatrixAgreesWithDefinition) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> dist(-5, 60);
  for (const BlockId& b : admissible_blocks()) {
    const BlockSystem sys = build_system(b, p57());
    for (int trial = 0; trial < 20; ++trial) {
      Vec27 x;
      for (int i = 0; i < 27; ++i) x(i) = dist(rng);
      const Vec27 r = sys.matrix() * x - sys.rhs;
      const int wrong = static_cast<int>((r.array() != 0).count());
      EXPECT_EQ(wrong, oracle::equation_violations(b, p57(), x)) << to_string(b);
    }
  }
}

TEST(Fixtures, SatisfyTheirSystems) {
  const auto fixtures = load_fixtures(default_data_dir() / "fixtures.txt");
  ASSERT_EQ(fixtures.size(), 8u);
  for (const auto& [block, x] : fixtures) {
    const BlockSystem sys = build_system(block, p57());
    EXPECT_TRUE((sys.matrix() * x - sys.rhs).isZero()) << to_string(block);
    EXPECT_EQ(oracle::equation_violations(block, p57(), x), 0);
    for (int v : sys.forced_zero) EXPECT_EQ(x(v - 1), 0) << to_string(block) << " x" << v;
  }
}

// Relabelling the three vertices maps solutions to solutions.
TEST(Symmetry, MapsFixturesToSolutions) {
  const auto fixtures = load_fixtures(default_data_dir() / "fixtures.txt");
  for (const auto& [block, x] : fixtures) {
    for (const Perm3& sigma : all_perm3()) {
      const BlockSolution s = apply_symmetry(sigma, block, x);
      EXPECT_TRUE(is_block_admissible(s.block));
      EXPECT_EQ(canonical_of(s.block), block);
      const BlockSystem sys = build_system(s.block, p57());
      EXPECT_TRUE((sys.matrix() * s.x - sys.rhs).isZero()) << to_string(block) << "->" << to_string(s.block);
      EXPECT_EQ(oracle::equation_violations(s.block, p57(), s.x), 0);
      for (int v : sys.forced_zero) EXPECT_EQ(s.x(v - 1), 0);
    }
  }
}

TEST(Symmetry, IdentityAndInverse) {
  const auto fixtures = load_fixtures(default_data_dir() / "fixtures.txt");
  const auto& [block, x] = *fixtures.find(parse_block("321"));
  const BlockSolution same = apply_symmetry({0, 1, 2}, block, x);
  EXPECT_EQ(same.block, block);
  EXPECT_EQ(same.x, x);
  const BlockSolution there = apply_symmetry({1, 2, 0}, block, x);
  const BlockSolution back = apply_symmetry({2, 0, 1}, there.block, there.x);
  EXPECT_EQ(back.block, block);
  EXPECT_EQ(back.x, x);
}
