#pragma once

// Diameter-3 distance-regular graph parameters: intersection arrays, vertex
// multiplicities k_i and the intersection numbers p^Z_{XY}.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "moore57/types.hpp"

namespace moore57 {

inline constexpr int kDiameter = 3;

struct IntersectionArray {
  std::array<Int, 3> b{};  // b0, b1, b2
  std::array<Int, 3> c{};  // c1, c2, c3

  Int valency() const { return b[0]; }
  // a_i = b0 - b_i - c_i, with b3 = 0.
  Int a(int i) const;
  Int b_at(int i) const { return i < kDiameter ? b[static_cast<std::size_t>(i)] : 0; }
  Int c_at(int i) const { return i == 0 ? 0 : c[static_cast<std::size_t>(i - 1)]; }

  // Throws Error(InvalidArray) when the ordering/positivity invariants fail.
  void validate() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// The degree-57 Moore graph's second subconstituent parameters.
IntersectionArray moore57_array();

// Accepts "b0,b1,b2;c1,c2,c3" with optional whitespace and brackets.
IntersectionArray parse_intersection_array(std::string_view text);
std::string to_string(const IntersectionArray& arr);

using Multiplicities = std::array<Int, 4>;

// k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}. Throws NonIntegralMultiplicity.
Multiplicities multiplicities(const IntersectionArray& arr);

// p(Z, X, Y) for Z, X, Y in {0..3}. The 4x4 matrix for distance Z holds the
// index-0 border explicitly.
class IntersectionNumbers {
 public:
  using Table = Eigen::Matrix<Int, 4, 4>;

  IntersectionNumbers() = default;
  IntersectionNumbers(std::array<Table, 4> tables, Multiplicities k) : tables_(tables), k_(k) {}

  Int operator()(int z, int x, int y) const { return tables_[static_cast<std::size_t>(z)](x, y); }
  const Table& matrix(int z) const { return tables_[static_cast<std::size_t>(z)]; }
  const Multiplicities& k() const { return k_; }

  // Human-facing 3x3 block (indices 1..3) for distance z.
  Eigen::Matrix<Int, 3, 3> inner(int z) const { return matrix(z).bottomRightCorner<3, 3>(); }

 private:
  std::array<Table, 4> tables_{};
  Multiplicities k_{};
};

struct InvariantViolation {
  std::string name;
  int z = 0, x = 0, y = 0;
  Int value = 0;
  Int expected = 0;
};

// Symmetry, index-0 border, row sums and triangle zeros.
std::vector<InvariantViolation> check_invariants(const IntersectionNumbers& p);

// Throws InfeasibleArray if any entry is negative or non-integral, or if the
// result fails check_invariants.
IntersectionNumbers intersection_numbers(const IntersectionArray& arr);

// Comparison of computed numbers against a published 3x3 table set.
// "published-entry-mismatch": the published entry differs from the computed one.
// "published-asymmetry": published (x,y) and (y,x) disagree; `computed` then
// holds the published (x,y) entry and `published` its transpose partner.
struct PublishedDiagnostic {
  std::string name;  // "published-entry-mismatch" or "published-asymmetry"
  int z = 0, x = 0, y = 0;
  Int computed = 0;
  Int published = 0;
};

using PublishedTables = std::array<Eigen::Matrix<Int, 3, 3>, 3>;  // Z = 1, 2, 3

std::vector<PublishedDiagnostic> compare_with_published(const IntersectionNumbers& p,
                                                        const PublishedTables& published);

}  // namespace moore57
