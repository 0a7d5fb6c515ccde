#include "moore57/grid_oracle.hpp"

#include <algorithm>

#include "moore57/error.hpp"

namespace moore57 {

GridModel::GridModel(int n) : n_(n) {
  if (n < 4) throw Error(ErrorCode::OutOfRange, "grid size must be at least 4, got " + std::to_string(n));
}

int GridModel::linemate_count(const GridVertex& v) const {
  int count = 0;
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) count += line_mates(v, {r, c}) ? 1 : 0;
  }
  return count;
}

GridTriple place_pattern(const GridModel& grid, const BlockId& pattern) {
  for (int x : pattern.d) {
    if (x != 2 && x != 3) {
      throw Error(ErrorCode::Unrealizable, "pattern " + to_string(pattern) + ": digits must be 2 or 3 in the grid model");
    }
  }
  const bool vw = pattern.u() == 3;
  const bool uw = pattern.v() == 3;
  const bool uv = pattern.w() == 3;
  const int lines = static_cast<int>(vw) + static_cast<int>(uw) + static_cast<int>(uv);
  GridTriple t;
  switch (lines) {
    case 3:
      t = {{1, 1}, {1, 2}, {1, 3}};
      break;
    case 0:
      t = {{1, 1}, {2, 2}, {3, 3}};
      break;
    case 1: {
      // the collinear pair on row 1, the third vertex off both their columns
      const GridVertex a{1, 1}, b{1, 2}, off{2, 3};
      if (vw) t = {off, a, b};
      else if (uw) t = {a, off, b};
      else t = {a, b, off};
      break;
    }
    default: {
      // the vertex shared by both lines sits at the corner
      const GridVertex corner{1, 1}, across{1, 2}, down{2, 1};
      if (!uv) t = {across, down, corner};       // w is the corner
      else if (!uw) t = {across, corner, down};  // v is the corner
      else t = {corner, across, down};           // u is the corner
      break;
    }
  }
  for (const GridVertex& p : {t.u, t.v, t.w}) {
    if (!grid.contains(p)) throw Error(ErrorCode::Unrealizable, "grid too small for pattern " + to_string(pattern));
  }
  return t;
}

int common_linemates(const GridModel& grid, const GridVertex& u, const GridVertex& v, const GridVertex& w) {
  int count = 0;
  for (int r = 1; r <= grid.size(); ++r) {
    for (int c = 1; c <= grid.size(); ++c) {
      const GridVertex z{r, c};
      if (z == u || z == v || z == w) continue;
      if (GridModel::line_mates(z, u) && GridModel::line_mates(z, v) && GridModel::line_mates(z, w)) ++count;
    }
  }
  return count;
}

int lemma3b_candidates(const GridModel& grid, const GridVertex& u, const GridVertex& v) {
  int count = 0;
  for (int r = 1; r <= grid.size(); ++r) {
    for (int c = 1; c <= grid.size(); ++c) {
      const GridVertex z{r, c};
      if (z == u || z == v) continue;
      if (GridModel::line_mates(z, u) && GridModel::line_mates(z, v)) ++count;
    }
  }
  return count;
}

int lines_through_disjoint_from(const GridModel& grid, const GridVertex& u, const GridVertex& v, const GridVertex& w) {
  if (!GridModel::line_mates(v, w)) throw Error(ErrorCode::Unrealizable, "v and w do not share a grid line");
  const bool by_row = v.row == w.row;
  auto on_l = [&](const GridVertex& z) { return by_row ? z.row == v.row : z.col == v.col; };
  int disjoint = 0;
  // u's row line, then u's column line
  for (int which = 0; which < 2; ++which) {
    bool meets = false;
    for (int t = 1; t <= grid.size() && !meets; ++t) {
      const GridVertex z = which == 0 ? GridVertex{u.row, t} : GridVertex{t, u.col};
      meets = on_l(z);
    }
    if (!meets) ++disjoint;
  }
  return disjoint;
}

bool rows_meet_columns_once(const GridModel& grid) {
  for (int r = 1; r <= grid.size(); ++r) {
    for (int c = 1; c <= grid.size(); ++c) {
      int meet = 0;
      for (int i = 1; i <= grid.size(); ++i) {
        for (int j = 1; j <= grid.size(); ++j) {
          const GridVertex z{i, j};
          const bool on_row = z.row == r;
          const bool on_col = z.col == c;
          meet += (on_row && on_col) ? 1 : 0;
        }
      }
      if (meet != 1) return false;
    }
  }
  return true;
}

}  // namespace moore57
