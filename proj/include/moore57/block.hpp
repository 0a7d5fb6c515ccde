#pragma once

// Block systems: for a fixed distance triple (U, V, W) the 27 triple
// intersection numbers x(i1,i2,i3) satisfy three families of nine equations
// with a shared 0/1 coefficient matrix M.

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "moore57/drg.hpp"
#include "moore57/types.hpp"

namespace moore57 {

// (U, V, W) = (d(v,w), d(u,w), d(u,v)).
struct BlockId {
  std::array<int, 3> d{};

  int u() const { return d[0]; }
  int v() const { return d[1]; }
  int w() const { return d[2]; }

  friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

BlockId parse_block(std::string_view label);  // "UVW", e.g. "322"
std::string to_string(const BlockId& block);

using Triple = std::array<int, 3>;

// Lexicographic position of (i1,i2,i3) as a 1-based variable number 1..27.
int var_index(const Triple& t);
Triple var_triple(int idx);

// 0-based storage offset; var_index(t) - 1.
inline int var_offset(const Triple& t) { return var_index(t) - 1; }

// True iff the distances can close a triangle in a girth-5 graph: the
// triangle inequality holds and the triple is not (1,1,1).
bool is_distance_triangle(int x, int y, int z);

bool is_block_admissible(const BlockId& block);

// 211, 221, 222, 321, 322, 331, 332, 333.
std::vector<BlockId> canonical_blocks();

// All 23 admissible ordered blocks.
std::vector<BlockId> admissible_blocks();

// Sorted descending representative.
BlockId canonical_of(const BlockId& block);

// Rows: family k (k = 0,1,2) sums over i_{k+1}; its nine rows are ordered
// lexicographically by the two remaining indices.
const Mat27& coefficient_matrix();

// Row of family k for the remaining index pair (first, second), 0-based.
inline int equation_row(int family, int first, int second) { return 9 * family + 3 * (first - 1) + (second - 1); }

// Right-hand side after folding in the index-0 variables. Family k at the
// remaining pair (i_a, i_b), a < b, is p(D_k, i_a, i_b) - [i_a = D_b][i_b = D_a]
// where D = (U, V, W).
Vec27 build_rhs(const BlockId& block, const IntersectionNumbers& p);

// 1-based variable numbers forced to zero by triangle/girth constraints.
std::set<int> forced_zero_variables(const BlockId& block);

struct BlockSystem {
  BlockId block;
  Vec27 rhs;
  std::set<int> forced_zero;

  const Mat27& matrix() const { return coefficient_matrix(); }
};

BlockSystem build_system(const BlockId& block, const IntersectionNumbers& p);

// sigma[k] names which old (index, distance) pair lands in position k.
using Perm3 = std::array<int, 3>;

std::array<Perm3, 6> all_perm3();

struct BlockSolution {
  BlockId block;
  Vec27 x;
};

BlockSolution apply_symmetry(const Perm3& sigma, const BlockId& block, const Vec27& x);

}  // namespace moore57
