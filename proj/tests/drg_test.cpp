#include <gtest/gtest.h>

#include "moore57/drg.hpp"
#include "moore57/error.hpp"
#include "moore57/expectations.hpp"
#include "oracles.hpp"

using namespace moore57;

namespace {

void expect_matches_graph(const IntersectionArray& arr, const SimpleGraph& g) {
  const auto counted = oracle::count_intersection_numbers(g);
  ASSERT_TRUE(counted.has_value());
  const IntersectionNumbers p = intersection_numbers(arr);
  for (int z = 0; z <= 3; ++z) {
    for (int x = 0; x <= 3; ++x) {
      for (int y = 0; y <= 3; ++y) EXPECT_EQ(p(z, x, y), (*counted)[z][x][y]) << z << x << y;
    }
  }
}

}  // namespace

TEST(IntersectionArray, ParseAndPrint) {
  EXPECT_EQ(parse_intersection_array("55,54,2;1,1,54"), moore57_array());
  EXPECT_EQ(parse_intersection_array(" [55, 54, 2 ; 1, 1, 54] "), moore57_array());
  EXPECT_EQ(to_string(moore57_array()), "55,54,2;1,1,54");
  EXPECT_EQ(moore57_array().a(1), 0);
  EXPECT_EQ(moore57_array().a(2), 52);
  EXPECT_EQ(moore57_array().a(3), 1);
}

TEST(IntersectionArray, ParseErrors) {
  for (const char* bad : {"55,54,2", "55,54;1,1,54", "a,b,c;1,1,1", "55,54,2;1,1,54;3", ""}) {
    try {
      parse_intersection_array(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
}

TEST(IntersectionArray, ValidateRejectsNonsense) {
  EXPECT_THROW(parse_intersection_array("3,2,2;2,1,3").validate(), Error);  // c1 must be 1
  EXPECT_THROW(parse_intersection_array("3,4,2;1,1,3").validate(), Error);
}

TEST(Multiplicities, Moore57) {
  const Multiplicities m = multiplicities(moore57_array());
  EXPECT_EQ(m[0], 1);
  Int sum = 0;
  for (Int v : m) sum += v;
  EXPECT_EQ(sum, 3136);
}

TEST(Multiplicities, NonIntegral) {
  try {
    multiplicities(parse_intersection_array("4,3,1;1,2,4"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NonIntegralMultiplicity || e.code() == ErrorCode::InfeasibleArray);
  }
}

TEST(IntersectionNumbers, HexagonByCounting) { expect_matches_graph(parse_intersection_array("2,1,1;1,1,2"), oracle::cycle(6)); }
TEST(IntersectionNumbers, HeptagonByCounting) { expect_matches_graph(parse_intersection_array("2,1,1;1,1,1"), oracle::cycle(7)); }
TEST(IntersectionNumbers, HeawoodByCounting) { expect_matches_graph(parse_intersection_array("3,2,2;1,1,3"), oracle::heawood()); }
TEST(IntersectionNumbers, CubeByCounting) { expect_matches_graph(parse_intersection_array("3,2,1;1,2,3"), oracle::cube()); }

TEST(IntersectionNumbers, Moore57Valencies) {
  const IntersectionNumbers p = intersection_numbers(moore57_array());
  EXPECT_EQ(p.k(), (Multiplicities{1, 55, 2970, 110}));
}

TEST(IntersectionNumbers, Moore57Tables) {
  const IntersectionNumbers p = intersection_numbers(moore57_array());
  Eigen::Matrix<Int, 3, 3> p1, p2, p3;
  p1 << 0, 54, 0, 54, 2808, 108, 0, 108, 2;
  p2 << 1, 52, 2, 52, 2811, 106, 2, 106, 2;
  p3 << 0, 54, 1, 54, 2862, 54, 1, 54, 54;
  EXPECT_EQ(p.inner(1), p1);
  EXPECT_EQ(p.inner(2), p2);
  EXPECT_EQ(p.inner(3), p3);
}

// Properties every table must satisfy, checked on several arrays.
TEST(IntersectionNumbers, Invariants) {
  for (const char* text : {"55,54,2;1,1,54", "2,1,1;1,1,2", "3,2,2;1,1,3", "3,2,1;1,2,3", "2,1,1;1,1,1"}) {
    const IntersectionNumbers p = intersection_numbers(parse_intersection_array(text));
    EXPECT_TRUE(check_invariants(p).empty()) << text;
    for (int z = 0; z <= 3; ++z) {
      for (int x = 0; x <= 3; ++x) {
        Int row = 0;
        for (int y = 0; y <= 3; ++y) {
          EXPECT_GE(p(z, x, y), 0);
          EXPECT_EQ(p(z, x, y), p(z, y, x));
          row += p(z, x, y);
          // k_z p^z_xy = k_x p^x_zy
          EXPECT_EQ(p.k()[z] * p(z, x, y), p.k()[x] * p(x, z, y));
          if (std::abs(x - y) > z || z > x + y) EXPECT_EQ(p(z, x, y), 0);
        }
        EXPECT_EQ(row, p.k()[x]);
      }
    }
  }
}

TEST(IntersectionNumbers, InfeasibleArray) {
  try {
    intersection_numbers(parse_intersection_array("3,1,1;1,1,1"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleArray);
  }
}

TEST(PublishedTables, OnlyTheKnownEntryDiffers) {
  const auto published = load_published_pnums(default_data_dir() / "published_pnums.txt");
  const auto diags = compare_with_published(intersection_numbers(moore57_array()), published);
  bool mismatch = false;
  for (const auto& d : diags) {
    EXPECT_EQ(d.z, 2);
    if (d.name == "published-entry-mismatch") {
      mismatch = true;
      EXPECT_EQ(d.x, 2);
      EXPECT_EQ(d.y, 1);
      EXPECT_EQ(d.computed, 52);
      EXPECT_EQ(d.published, 54);
    }
  }
  EXPECT_TRUE(mismatch);
}
