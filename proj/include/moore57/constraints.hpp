#pragma once

// Per-block constraint sets beyond M x = rhs: non-negativity, forced zeros,
// the fixed value of x(3,3,3) from the grid structure of the distance-3
// graph, and the two sporadic families on blocks 322 and 222.

#include <optional>
#include <vector>

#include "moore57/block.hpp"
#include "moore57/types.hpp"

namespace moore57 {

enum class ConstraintKind { NonNegative, FixedValue, UpperBound };

struct Constraint {
  ConstraintKind kind = ConstraintKind::NonNegative;
  int index = 1;  // 1-based variable number
  Int value = 0;  // unused for NonNegative

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

inline Constraint non_negative(int index) { return {ConstraintKind::NonNegative, index, 0}; }
inline Constraint fixed_value(int index, Int value) { return {ConstraintKind::FixedValue, index, value}; }
inline Constraint upper_bound(int index, Int bound) { return {ConstraintKind::UpperBound, index, bound}; }

const char* to_string(ConstraintKind kind);

class ConstraintSet {
 public:
  ConstraintSet() = default;

  // Throws ConflictingConstraint on a second FixedValue with a different value
  // at the same index, or on a negative FixedValue/UpperBound. Exact duplicates
  // are dropped.
  void add(const Constraint& c);

  const std::vector<Constraint>& items() const { return items_; }

  // Tightest [lower, upper] per variable implied by the set; empty when the
  // set says nothing on that side.
  struct Bounds {
    std::array<std::optional<Int>, kBlockSize> lower{};
    std::array<std::optional<Int>, kBlockSize> upper{};
  };
  Bounds bounds() const;

 private:
  std::vector<Constraint> items_;
};

// Common line-mates of u, v, w in the distance-3 grid; depends only on how
// many of U, V, W equal 3. `grid_size` is 56 for the degree-57 instance.
Int lemma2_value(const BlockId& block, Int grid_size = 56);

std::vector<Constraint> lemma3_constraints(const BlockId& block);

ConstraintSet assemble(const BlockId& block, Int grid_size = 56);

}  // namespace moore57
