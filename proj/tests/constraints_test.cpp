#include <gtest/gtest.h>

#include "moore57/constraints.hpp"
#include "moore57/error.hpp"
#include "moore57/grid_oracle.hpp"

using namespace moore57;

TEST(ConstraintSet, DeduplicatesAndConflicts) {
  ConstraintSet s;
  s.add(fixed_value(27, 1));
  s.add(fixed_value(27, 1));
  EXPECT_EQ(s.items().size(), 1u);
  try {
    s.add(fixed_value(27, 2));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConflictingConstraint);
  }
  EXPECT_THROW(s.add(fixed_value(3, -1)), Error);
  EXPECT_THROW(s.add(fixed_value(0, 1)), Error);
  EXPECT_THROW(s.add(non_negative(28)), Error);
}

TEST(ConstraintSet, Bounds) {
  ConstraintSet s;
  s.add(non_negative(1));
  s.add(upper_bound(1, 4));
  s.add(upper_bound(1, 2));
  s.add(fixed_value(2, 5));
  const auto b = s.bounds();
  EXPECT_EQ(b.lower[0], 0);
  EXPECT_EQ(b.upper[0], 2);
  EXPECT_EQ(b.lower[1], 5);
  EXPECT_EQ(b.upper[1], 5);
  EXPECT_FALSE(b.upper[2].has_value());
  EXPECT_FALSE(b.lower[2].has_value());
}

TEST(GridValue, ByNumberOfThrees) {
  EXPECT_EQ(lemma2_value(parse_block("222")), 0);
  EXPECT_EQ(lemma2_value(parse_block("322")), 1);
  EXPECT_EQ(lemma2_value(parse_block("332")), 0);
  EXPECT_EQ(lemma2_value(parse_block("333")), 53);
  EXPECT_EQ(lemma2_value(parse_block("211")), 0);
  EXPECT_EQ(lemma2_value(parse_block("331")), 0);
  EXPECT_EQ(lemma2_value(parse_block("321")), 1);
}

// The fixed value is what the grid model counts.
TEST(GridValue, MatchesGridModel) {
  for (int n : {5, 8, 56}) {
    const GridModel grid(n);
    for (const char* label : {"222", "322", "332", "333"}) {
      const auto t = place_pattern(grid, parse_block(label));
      EXPECT_EQ(lemma2_value(parse_block(label), n), common_linemates(grid, t.u, t.v, t.w)) << label << " n=" << n;
    }
  }
}

TEST(GridConstraints, PerBlock) {
  const auto c322 = lemma3_constraints(parse_block("322"));
  ASSERT_EQ(c322.size(), 1u);
  EXPECT_EQ(c322[0].kind, ConstraintKind::FixedValue);
  EXPECT_EQ(c322[0].index, 9);
  EXPECT_EQ(c322[0].value, 1);
  const auto c222 = lemma3_constraints(parse_block("222"));
  std::set<int> idx;
  for (const auto& c : c222) {
    EXPECT_EQ(c.kind, ConstraintKind::UpperBound);
    EXPECT_EQ(c.value, 2);
    idx.insert(c.index);
  }
  EXPECT_EQ(idx, (std::set<int>{9, 18, 21, 24, 25, 26}));
  EXPECT_TRUE(lemma3_constraints(parse_block("333")).empty());
}

TEST(Assemble, IncludesEverything) {
  const ConstraintSet s = assemble(parse_block("211"));
  const auto b = s.bounds();
  for (int i = 0; i < 27; ++i) EXPECT_EQ(b.lower[i].value_or(-1) >= 0, true);
  EXPECT_EQ(b.upper[26], 0);
  EXPECT_EQ(b.lower[26], 0);
  // x(1,1,1) is forced to zero in 211
  EXPECT_EQ(b.upper[0], 0);
  const auto b333 = assemble(parse_block("333")).bounds();
  EXPECT_EQ(b333.lower[26], 53);
  EXPECT_EQ(b333.upper[26], 53);
}
