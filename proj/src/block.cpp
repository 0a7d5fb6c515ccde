#include "moore57/block.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "moore57/error.hpp"

namespace moore57 {

namespace {

// The two indices other than `family`, in increasing order.
std::array<int, 2> others(int family) {
  switch (family) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

void require_digits(const std::array<int, 3>& v, const char* what) {
  for (int x : v) {
    if (x < 1 || x > 3) {
      std::ostringstream os;
      os << what << " component " << x << " outside {1,2,3}";
      throw Error(ErrorCode::OutOfRange, os.str());
    }
  }
}

}  // namespace

BlockId parse_block(std::string_view label) {
  if (label.size() != 3) throw Error(ErrorCode::Parse, "block label must be three digits: '" + std::string(label) + "'");
  BlockId block;
  for (std::size_t k = 0; k < 3; ++k) {
    if (label[k] < '1' || label[k] > '3') {
      throw Error(ErrorCode::Parse, "block label digits must be 1..3: '" + std::string(label) + "'");
    }
    block.d[k] = label[k] - '0';
  }
  return block;
}

std::string to_string(const BlockId& block) {
  std::string s;
  for (int x : block.d) s.push_back(static_cast<char>('0' + x));
  return s;
}

int var_index(const Triple& t) {
  require_digits(t, "variable triple");
  return 9 * (t[0] - 1) + 3 * (t[1] - 1) + t[2];
}

Triple var_triple(int idx) {
  if (idx < 1 || idx > kBlockSize) throw Error(ErrorCode::OutOfRange, "variable index " + std::to_string(idx) + " outside 1..27");
  const int z = idx - 1;
  return {z / 9 + 1, (z / 3) % 3 + 1, z % 3 + 1};
}

bool is_distance_triangle(int x, int y, int z) {
  const int m = std::max({x, y, z});
  if (m > x + y + z - m) return false;
  return !(x == 1 && y == 1 && z == 1);
}

bool is_block_admissible(const BlockId& block) {
  require_digits(block.d, "block");
  return is_distance_triangle(block.u(), block.v(), block.w());
}

std::vector<BlockId> canonical_blocks() {
  std::vector<BlockId> out;
  for (int u = 1; u <= 3; ++u) {
    for (int v = 1; v <= u; ++v) {
      for (int w = 1; w <= v; ++w) {
        BlockId b{{u, v, w}};
        if (is_block_admissible(b)) out.push_back(b);
      }
    }
  }
  return out;
}

std::vector<BlockId> admissible_blocks() {
  std::vector<BlockId> out;
  for (int u = 1; u <= 3; ++u) {
    for (int v = 1; v <= 3; ++v) {
      for (int w = 1; w <= 3; ++w) {
        BlockId b{{u, v, w}};
        if (is_block_admissible(b)) out.push_back(b);
      }
    }
  }
  return out;
}

BlockId canonical_of(const BlockId& block) {
  BlockId out = block;
  std::sort(out.d.begin(), out.d.end(), std::greater<>());
  return out;
}

const Mat27& coefficient_matrix() {
  static const Mat27 m = [] {
    Mat27 out = Mat27::Zero();
    for (int col = 0; col < kBlockSize; ++col) {
      const Triple t = var_triple(col + 1);
      for (int family = 0; family < 3; ++family) {
        const auto [a, b] = others(family);
        out(equation_row(family, t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)]), col) = 1;
      }
    }
    return out;
  }();
  return m;
}

Vec27 build_rhs(const BlockId& block, const IntersectionNumbers& p) {
  if (!is_block_admissible(block)) throw Error(ErrorCode::InadmissibleBlock, "block " + to_string(block));
  Vec27 rhs;
  for (int family = 0; family < 3; ++family) {
    const auto [a, b] = others(family);
    const int dk = block.d[static_cast<std::size_t>(family)];
    const int da = block.d[static_cast<std::size_t>(a)];
    const int db = block.d[static_cast<std::size_t>(b)];
    for (int ia = 1; ia <= 3; ++ia) {
      for (int ib = 1; ib <= 3; ++ib) {
        // the single vertex z coinciding with the summed-out vertex
        const Int coincide = (ia == db && ib == da) ? 1 : 0;
        const Int value = p(dk, ia, ib) - coincide;
        if (value < 0) {
          std::ostringstream os;
          os << "block " << to_string(block) << " family " << family + 1 << " at (" << ia << ',' << ib << ") = " << value;
          throw Error(ErrorCode::NegativeRhs, os.str());
        }
        rhs(equation_row(family, ia, ib)) = value;
      }
    }
  }
  return rhs;
}

std::set<int> forced_zero_variables(const BlockId& block) {
  if (!is_block_admissible(block)) throw Error(ErrorCode::InadmissibleBlock, "block " + to_string(block));
  std::set<int> out;
  for (int idx = 1; idx <= kBlockSize; ++idx) {
    const Triple t = var_triple(idx);
    for (int family = 0; family < 3; ++family) {
      const auto [a, b] = others(family);
      const int ia = t[static_cast<std::size_t>(a)];
      const int ib = t[static_cast<std::size_t>(b)];
      const int da = block.d[static_cast<std::size_t>(a)];
      const int db = block.d[static_cast<std::size_t>(b)];
      const bool bad_triangle = !is_distance_triangle(ia, ib, block.d[static_cast<std::size_t>(family)]);
      const bool unit_square = ia == 1 && ib == 1 && da == 1 && db == 1;
      if (bad_triangle || unit_square) out.insert(idx);
    }
  }
  return out;
}

BlockSystem build_system(const BlockId& block, const IntersectionNumbers& p) {
  return {block, build_rhs(block, p), forced_zero_variables(block)};
}

std::array<Perm3, 6> all_perm3() {
  return {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
}

BlockSolution apply_symmetry(const Perm3& sigma, const BlockId& block, const Vec27& x) {
  auto sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Perm3{0, 1, 2}) throw Error(ErrorCode::OutOfRange, "sigma is not a permutation of {0,1,2}");
  BlockSolution out;
  for (std::size_t k = 0; k < 3; ++k) out.block.d[k] = block.d[static_cast<std::size_t>(sigma[k])];
  for (int idx = 1; idx <= kBlockSize; ++idx) {
    const Triple t = var_triple(idx);
    Triple image;
    for (std::size_t k = 0; k < 3; ++k) image[k] = t[static_cast<std::size_t>(sigma[k])];
    out.x(var_offset(image)) = x(idx - 1);
  }
  return out;
}

}  // namespace moore57
