#include "moore57/constraints.hpp"

#include <algorithm>

#include "moore57/error.hpp"

namespace moore57 {

const char* to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::NonNegative: return "NonNegative";
    case ConstraintKind::FixedValue: return "FixedValue";
    case ConstraintKind::UpperBound: return "UpperBound";
  }
  return "?";
}

void ConstraintSet::add(const Constraint& c) {
  if (c.index < 1 || c.index > kBlockSize) throw Error(ErrorCode::OutOfRange, "constraint index " + std::to_string(c.index));
  if (c.kind != ConstraintKind::NonNegative && c.value < 0) {
    throw Error(ErrorCode::ConflictingConstraint, std::string(to_string(c.kind)) + " with negative value at x(" +
                                                      std::to_string(c.index) + ")");
  }
  if (std::find(items_.begin(), items_.end(), c) != items_.end()) return;
  if (c.kind == ConstraintKind::FixedValue) {
    for (const auto& other : items_) {
      if (other.kind == ConstraintKind::FixedValue && other.index == c.index) {
        throw Error(ErrorCode::ConflictingConstraint, "x(" + std::to_string(c.index) + ") fixed to both " +
                                                          std::to_string(other.value) + " and " + std::to_string(c.value));
      }
    }
  }
  items_.push_back(c);
}

ConstraintSet::Bounds ConstraintSet::bounds() const {
  Bounds out;
  for (const auto& c : items_) {
    const auto k = static_cast<std::size_t>(c.index - 1);
    switch (c.kind) {
      case ConstraintKind::NonNegative:
        out.lower[k] = out.lower[k] ? std::max<Int>(*out.lower[k], 0) : 0;
        break;
      case ConstraintKind::FixedValue:
        out.lower[k] = out.lower[k] ? std::max(*out.lower[k], c.value) : c.value;
        out.upper[k] = out.upper[k] ? std::min(*out.upper[k], c.value) : c.value;
        break;
      case ConstraintKind::UpperBound:
        out.upper[k] = out.upper[k] ? std::min(*out.upper[k], c.value) : c.value;
        break;
    }
  }
  return out;
}

Int lemma2_value(const BlockId& block, Int grid_size) {
  if (!is_block_admissible(block)) throw Error(ErrorCode::InadmissibleBlock, "block " + to_string(block));
  const auto threes = std::count(block.d.begin(), block.d.end(), 3);
  switch (threes) {
    case 1: return 1;
    case 3: return grid_size - 3;
    default: return 0;
  }
}

std::vector<Constraint> lemma3_constraints(const BlockId& block) {
  if (!is_block_admissible(block)) throw Error(ErrorCode::InadmissibleBlock, "block " + to_string(block));
  if (block == BlockId{{3, 2, 2}}) return {fixed_value(var_index({1, 3, 3}), 1)};
  if (block == BlockId{{2, 2, 2}}) {
    std::vector<Constraint> out;
    for (const Triple& t : {Triple{1, 3, 3}, Triple{2, 3, 3}, Triple{3, 1, 3}, Triple{3, 2, 3}, Triple{3, 3, 1}, Triple{3, 3, 2}}) {
      out.push_back(upper_bound(var_index(t), 2));
    }
    return out;
  }
  return {};
}

ConstraintSet assemble(const BlockId& block, Int grid_size) {
  ConstraintSet set;
  for (int idx = 1; idx <= kBlockSize; ++idx) set.add(non_negative(idx));
  for (int idx : forced_zero_variables(block)) set.add(fixed_value(idx, 0));
  set.add(fixed_value(kBlockSize, lemma2_value(block, grid_size)));
  for (const auto& c : lemma3_constraints(block)) set.add(c);
  return set;
}

}  // namespace moore57
