#pragma once

// Fraction-free (Bareiss) elimination over integral Eigen scalars. Every
// product and sum is overflow-checked; a non-exact Bareiss division means the
// input was not integral or the scalar type was too narrow, and throws.

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "moore57/error.hpp"

namespace moore57 {

namespace detail {

template <typename T>
T checked_mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "product overflow in exact elimination");
  return out;
}

template <typename T>
T checked_sub(T a, T b) {
  T out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "difference overflow in exact elimination");
  return out;
}

template <typename T>
T exact_div(T a, T b) {
  if (a % b != 0) throw Error(ErrorCode::Overflow, "inexact Bareiss division");
  return a / b;
}

// Row echelon form in place. Only the first `pivot_cols` columns are eligible
// for pivots; trailing columns ride along (augmented right-hand sides).
// Returns the pivot column of each echelon row.
template <typename Scalar>
std::vector<Eigen::Index> bareiss_echelon(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                                          Eigen::Index pivot_cols) {
  static_assert(std::is_integral_v<Scalar> || std::is_same_v<Scalar, __int128>,
                "exact elimination needs an integral scalar");
  std::vector<Eigen::Index> pivots;
  Scalar prev = 1;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < pivot_cols && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar pivot = a(row, col);
    for (Eigen::Index i = row + 1; i < a.rows(); ++i) {
      const Scalar lead = a(i, col);
      for (Eigen::Index j = col + 1; j < a.cols(); ++j) {
        a(i, j) = exact_div(checked_sub(checked_mul(pivot, a(i, j)), checked_mul(lead, a(row, j))), prev);
      }
      a(i, col) = 0;
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work = m;
  return static_cast<Eigen::Index>(detail::bareiss_echelon(work, work.cols()).size());
}

enum class SolveStatus { Unique, Inconsistent, NonIntegral, Underdetermined };

template <typename Scalar>
struct ExactSolution {
  SolveStatus status;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
};

// Solves A x = b over the integers when A has full column rank.
template <typename DerivedA, typename DerivedB>
ExactSolution<typename DerivedA::Scalar> solve_exact(const Eigen::MatrixBase<DerivedA>& a,
                                                     const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work(a.rows(), n + 1);
  work.leftCols(n) = a;
  work.col(n) = b.template cast<Scalar>();
  const auto pivots = detail::bareiss_echelon(work, n);

  ExactSolution<Scalar> out{SolveStatus::Unique, {}};
  const auto rank = static_cast<Eigen::Index>(pivots.size());
  for (Eigen::Index i = rank; i < work.rows(); ++i) {
    if (work(i, n) != 0) {
      out.status = SolveStatus::Inconsistent;
      return out;
    }
  }
  if (rank < n) {
    out.status = SolveStatus::Underdetermined;
    return out;
  }
  out.x.setZero(n);
  for (Eigen::Index r = rank - 1; r >= 0; --r) {
    const Eigen::Index c = pivots[static_cast<std::size_t>(r)];
    Scalar acc = work(r, n);
    for (Eigen::Index j = c + 1; j < n; ++j) acc = detail::checked_sub(acc, detail::checked_mul(work(r, j), out.x(j)));
    if (acc % work(r, c) != 0) {
      out.status = SolveStatus::NonIntegral;
      out.x.resize(0);
      return out;
    }
    out.x(c) = acc / work(r, c);
  }
  return out;
}

}  // namespace moore57
