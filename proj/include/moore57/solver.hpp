#pragma once

// Exhaustive enumeration of constrained non-negative integer solutions of a
// block system over the null lattice: x = x0 + C n, n in Z^8.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moore57/block.hpp"
#include "moore57/constraints.hpp"
#include "moore57/drg.hpp"
#include "moore57/types.hpp"

namespace moore57 {

// Closed interval on one null coefficient; std::nullopt means unbounded.
struct CoeffRange {
  std::optional<Int> lo;
  std::optional<Int> hi;

  bool bounded() const { return lo.has_value() && hi.has_value(); }
};

using CoeffBox = std::array<CoeffRange, kNullDim>;

// Some integer point of M x = rhs, ignoring the constraint set. Throws
// Infeasible if none exists.
Vec27 integer_point(const BlockSystem& system);

// Interval propagation of the affine functionals x0 + C n against the
// constraint bounds, to a fixpoint. Returns std::nullopt when the box is
// proved empty.
std::optional<CoeffBox> propagate_bounds(const Vec27& x0, const ConstraintSet& cons, CoeffBox box = {});

struct EnumerationOptions {
  unsigned threads = 1;
};

struct EnumerationResult {
  BlockId block;
  Vec27 base;                    // the lexicographically greatest solution
  std::vector<Coeffs> tuples;    // solutions[i] = base + expand(tuples[i])
  std::vector<Vec27> solutions;  // sorted lexicographically ascending
  CoeffBox root_box;             // propagation bounds relative to integer_point()

  std::size_t count() const { return solutions.size(); }
};

// Throws Infeasible when no constrained solution exists and UnboundedLattice
// when propagation leaves a coefficient unbounded.
EnumerationResult enumerate_solutions(const BlockSystem& system, const ConstraintSet& cons,
                                      const EnumerationOptions& options = {});

// Re-expresses tuples relative to another solution of the same system.
std::vector<Coeffs> tuples_relative_to(const EnumerationResult& result, const Vec27& base);

// Lexicographically greatest constrained solution.
Vec27 particular_solution(const BlockSystem& system, const ConstraintSet& cons);

struct Violation {
  std::string kind;  // "equation", "non-negative", "fixed-value", "upper-bound"
  int index = 0;     // 1-based equation row or variable number
  Int actual = 0;
  Int expected = 0;
};

std::vector<Violation> verify_solution(const BlockSystem& system, const ConstraintSet& cons, const Vec27& x);

bool lex_less(const Vec27& lhs, const Vec27& rhs);

// The eight canonical blocks in the order 333, 211, 221, 321, 331, 322, 222, 332.
std::vector<BlockId> summary_order();

struct BlockCount {
  BlockId block;
  std::size_t count = 0;
};

std::vector<BlockCount> summary(const IntersectionNumbers& p, const EnumerationOptions& options = {});

// Block 221 facts: values of x(3,3,1) across solutions and x(2,2,1) beside them.
struct DiscussionReport {
  std::vector<Int> x331;        // per solution, in result order
  std::vector<Int> x221;        // paired with x331
  bool x132_always_zero = false;
  bool x333_always_zero = false;
  bool x331_spans_0_to_2 = false;
  std::optional<Int> difference_when_x331_is_2;  // x(2,2,1) - x(3,3,1)
};

DiscussionReport discussion_report(const EnumerationResult& block221);

}  // namespace moore57
