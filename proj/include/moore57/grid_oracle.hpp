#pragma once

// Rook's-graph model of the distance-3 graph: vertices of an n x n grid, two
// distinct vertices are line-mates when they share a row or a column. All
// counts below are exhaustive scans over the n^2 vertices.

#include <array>

#include "moore57/block.hpp"

namespace moore57 {

struct GridVertex {
  int row = 0;  // 1..n
  int col = 0;  // 1..n

  friend bool operator==(const GridVertex&, const GridVertex&) = default;
};

class GridModel {
 public:
  explicit GridModel(int n);

  int size() const { return n_; }
  bool contains(const GridVertex& v) const { return v.row >= 1 && v.row <= n_ && v.col >= 1 && v.col <= n_; }
  static bool line_mates(const GridVertex& a, const GridVertex& b) {
    return !(a == b) && (a.row == b.row || a.col == b.col);
  }

  int linemate_count(const GridVertex& v) const;

 private:
  int n_;
};

struct GridTriple {
  GridVertex u, v, w;
};

// Pattern digits: 3 = the pair shares a grid line, 2 = it does not, read as
// (U, V, W) = (vw, uw, uv). Throws Unrealizable for other digits or grids
// too small to host the pattern.
GridTriple place_pattern(const GridModel& grid, const BlockId& pattern);

// |{z not in {u,v,w} : z is a line-mate of u, v and w}|
int common_linemates(const GridModel& grid, const GridVertex& u, const GridVertex& v, const GridVertex& w);

// |{z not in {u,v} : z is a line-mate of u and v}|
int lemma3b_candidates(const GridModel& grid, const GridVertex& u, const GridVertex& v);

// Grid lines through u that meet no vertex of the line through v and w
// (v and w must be line-mates). For the (3,2,2) pattern this is 1: the single
// line whose matching to L gives u its unique neighbour on L. The rook model
// has no matchings, so this is as far as the value 1 can be checked here.
int lines_through_disjoint_from(const GridModel& grid, const GridVertex& u, const GridVertex& v, const GridVertex& w);

// Every row line meets every column line in exactly one vertex.
bool rows_meet_columns_once(const GridModel& grid);

}  // namespace moore57
