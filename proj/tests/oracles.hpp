// Test-only reference computations. Nothing here calls the solver, the null
// space module or the block builder's matrix; they are rebuilt from
// definitions so the library can be checked against them.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "moore57/block.hpp"
#include "moore57/drg.hpp"
#include "moore57/graph.hpp"
#include "moore57/types.hpp"

namespace oracle {

using moore57::BlockId;
using moore57::Int;
using moore57::SimpleGraph;
using moore57::Vec27;

SimpleGraph cycle(int n);
SimpleGraph petersen();
SimpleGraph heawood();
SimpleGraph cube();

std::vector<std::vector<int>> distances(const SimpleGraph& g);

// p[z][x][y] counted over every pair at distance z; nullopt if the counts
// differ between pairs (graph not distance-regular).
using PTable = std::array<std::array<std::array<Int, 4>, 4>, 4>;
std::optional<PTable> count_intersection_numbers(const SimpleGraph& g);

// eps1 (x) eps2 (x) eps3 tensors, columns 111, 112, ..., 222.
Eigen::Matrix<Int, 27, 8> kron_basis();

// The counting equations of a block written directly from the definition:
// summing x over one index gives p(D_k, ia, ib) less one when the fixed
// vertex pair coincides. Returns the number of violated equations.
int equation_violations(const BlockId& block, const moore57::IntersectionNumbers& p, const Vec27& x);

// Variables that cannot be nonzero: a distance pair not realisable with the
// block distances, or a second common neighbour of two vertices that are
// both adjacent to the third.
std::set<int> structural_zeros(const BlockId& block);

bool constraints_hold(const BlockId& block, const Vec27& x);

struct SweepResult {
  std::set<std::vector<Int>> solutions;  // as 27-entry vectors
  std::uint64_t leaves = 0;
};

// Every n in [lo, hi]^8 with x0 + K n a constrained solution. Prefix pruning
// only drops prefixes that no completion inside the box can repair.
SweepResult sweep(const BlockId& block, const moore57::IntersectionNumbers& p, const Vec27& x0, Int lo, Int hi);

std::vector<Int> as_vector(const Vec27& x);

}  // namespace oracle
