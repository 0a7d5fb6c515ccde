#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace moore57 {

using Int = std::int64_t;

// Block systems always have 27 unknowns x(i1,i2,i3), i_k in {1,2,3}, and 27
// equations (three families of nine).
inline constexpr int kBlockSize = 27;
inline constexpr int kNullDim = 8;

template <typename Scalar>
using BlockVector = Eigen::Matrix<Scalar, kBlockSize, 1>;
template <typename Scalar>
using BlockMatrix = Eigen::Matrix<Scalar, kBlockSize, kBlockSize>;
template <typename Scalar>
using NullMatrix = Eigen::Matrix<Scalar, kBlockSize, kNullDim>;
template <typename Scalar>
using CoeffVector = Eigen::Matrix<Scalar, kNullDim, 1>;

using Vec27 = BlockVector<Int>;
using Mat27 = BlockMatrix<Int>;
using Basis = NullMatrix<Int>;
using Coeffs = CoeffVector<Int>;

}  // namespace moore57
