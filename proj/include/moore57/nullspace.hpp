#pragma once

// The integer null lattice of M. Basis vector X_ijk = e_i (x) e_j (x) e_k with
// e_1 = (1, 0, -1), e_2 = (0, 1, -1); coefficients are named
// (a, b, c, d, a', b', c', d') for (111, 112, 121, 122, 211, 212, 221, 222).

#include <array>
#include <string_view>

#include "moore57/types.hpp"

namespace moore57 {

inline constexpr std::array<std::string_view, kNullDim> kCoeffNames = {"a", "b", "c", "d", "a'", "b'", "c'", "d'"};

// 27x8, columns in coefficient order.
const Basis& null_basis();

// Column `k` of null_basis().
inline auto basis_vector(int k) { return null_basis().col(k); }

template <typename Derived>
Vec27 expand(const Eigen::MatrixBase<Derived>& n) {
  return null_basis() * n;
}

// Inverse of expand on the lattice. The basis has an identity 8x8 minor on the
// variables with all indices in {1, 2}, so the coefficients can be read off
// there. Throws NotInNullSpace when M v != 0.
Coeffs coefficients_of(const Vec27& v);

// 1-based variable numbers where null_basis() restricts to the identity.
const std::array<int, kNullDim>& coordinate_variables();

}  // namespace moore57
