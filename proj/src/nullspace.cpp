#include "moore57/nullspace.hpp"

#include "moore57/block.hpp"
#include "moore57/error.hpp"

namespace moore57 {

namespace {

Int epsilon(int which, int position) {
  // e_1 = (1, 0, -1), e_2 = (0, 1, -1)
  if (position == 3) return -1;
  return which == position ? 1 : 0;
}

}  // namespace

const Basis& null_basis() {
  static const Basis basis = [] {
    Basis out;
    for (int k = 0; k < kNullDim; ++k) {
      const int i = (k >> 2) + 1;
      const int j = ((k >> 1) & 1) + 1;
      const int l = (k & 1) + 1;
      for (int idx = 1; idx <= kBlockSize; ++idx) {
        const Triple t = var_triple(idx);
        out(idx - 1, k) = epsilon(i, t[0]) * epsilon(j, t[1]) * epsilon(l, t[2]);
      }
    }
    return out;
  }();
  return basis;
}

const std::array<int, kNullDim>& coordinate_variables() {
  static const std::array<int, kNullDim> vars = [] {
    std::array<int, kNullDim> out{};
    for (int k = 0; k < kNullDim; ++k) out[static_cast<std::size_t>(k)] = var_index({(k >> 2) + 1, ((k >> 1) & 1) + 1, (k & 1) + 1});
    return out;
  }();
  return vars;
}

Coeffs coefficients_of(const Vec27& v) {
  if (!(coefficient_matrix() * v).isZero()) throw Error(ErrorCode::NotInNullSpace, "M v != 0");
  Coeffs n;
  for (int k = 0; k < kNullDim; ++k) n(k) = v(coordinate_variables()[static_cast<std::size_t>(k)] - 1);
  return n;
}

}  // namespace moore57
