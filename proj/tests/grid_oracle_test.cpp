#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "moore57/error.hpp"
#include "moore57/grid_oracle.hpp"

using namespace moore57;

namespace {

std::vector<GridVertex> vertices(int n) {
  std::vector<GridVertex> out;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) out.push_back({r, c});
  }
  return out;
}

int digit(const GridVertex& a, const GridVertex& b) { return GridModel::line_mates(a, b) ? 3 : 2; }

}  // namespace

TEST(Grid, Basics) {
  const GridModel g(6);
  EXPECT_EQ(g.linemate_count({2, 3}), 10);
  EXPECT_TRUE(GridModel::line_mates({1, 1}, {1, 4}));
  EXPECT_FALSE(GridModel::line_mates({1, 1}, {1, 1}));
  EXPECT_FALSE(GridModel::line_mates({1, 1}, {2, 2}));
  EXPECT_THROW(GridModel(3), Error);
  EXPECT_TRUE(rows_meet_columns_once(g));
}

TEST(Grid, PlacementRealisesPattern) {
  for (int n : {4, 5, 9}) {
    const GridModel g(n);
    for (const char* label : {"222", "322", "232", "223", "332", "323", "233", "333"}) {
      const BlockId p = parse_block(label);
      const auto t = place_pattern(g, p);
      EXPECT_TRUE(g.contains(t.u) && g.contains(t.v) && g.contains(t.w));
      EXPECT_EQ(digit(t.v, t.w), p.u()) << label;
      EXPECT_EQ(digit(t.u, t.w), p.v()) << label;
      EXPECT_EQ(digit(t.u, t.v), p.w()) << label;
    }
  }
  try {
    place_pattern(GridModel(5), parse_block("321"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unrealizable);
  }
}

// Every triple of distinct vertices, not only the placed one, gives the same
// count for its pattern.
TEST(Grid, CommonLinematesDependOnlyOnPattern) {
  for (int n : {4, 5}) {
    const GridModel g(n);
    const auto vs = vertices(n);
    std::map<int, std::set<int>> seen;  // number of 3s -> counts observed
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        for (std::size_t k = j + 1; k < vs.size(); ++k) {
          const int threes = (digit(vs[i], vs[j]) == 3) + (digit(vs[i], vs[k]) == 3) + (digit(vs[j], vs[k]) == 3);
          seen[threes].insert(common_linemates(g, vs[i], vs[j], vs[k]));
        }
      }
    }
    EXPECT_EQ(seen[0], std::set<int>{0});
    EXPECT_EQ(seen[1], std::set<int>{1});
    EXPECT_EQ(seen[2], std::set<int>{0});
    EXPECT_EQ(seen[3], std::set<int>{n - 3});
  }
}

TEST(Grid, CommonLinematesPlacedAt56) {
  const GridModel g(56);
  const std::map<std::string, int> want{{"222", 0}, {"322", 1}, {"332", 0}, {"333", 53}};
  for (const auto& [label, value] : want) {
    const auto t = place_pattern(g, parse_block(label));
    EXPECT_EQ(common_linemates(g, t.u, t.v, t.w), value) << label;
  }
}

TEST(Grid, PairCandidates) {
  for (int n : {4, 5, 6, 7}) {
    const GridModel g(n);
    const auto vs = vertices(n);
    for (const auto& a : vs) {
      for (const auto& b : vs) {
        if (a == b) continue;
        EXPECT_EQ(lemma3b_candidates(g, a, b), GridModel::line_mates(a, b) ? n - 2 : 2);
      }
    }
  }
}

TEST(Grid, LinesThroughUMissingTheLineVW) {
  for (int n : {5, 8, 56}) {
    const GridModel g(n);
    const auto t = place_pattern(g, parse_block("322"));
    EXPECT_EQ(lines_through_disjoint_from(g, t.u, t.v, t.w), 1);
  }
}
