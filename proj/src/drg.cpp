#include "moore57/drg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "moore57/error.hpp"

namespace moore57 {

Int IntersectionArray::a(int i) const { return b[0] - b_at(i) - c_at(i); }

void IntersectionArray::validate() const {
  std::ostringstream why;
  if (!(b[0] >= b[1] && b[1] >= b[2] && b[2] >= 1)) why << "need b0 >= b1 >= b2 >= 1; ";
  if (!(c[0] == 1 && c[0] <= c[1] && c[1] <= c[2] && c[2] <= b[0])) why << "need 1 = c1 <= c2 <= c3 <= b0; ";
  for (int i = 1; i <= kDiameter; ++i) {
    if (a(i) < 0) why << "a" << i << " = " << a(i) << " is negative; ";
  }
  if (!why.str().empty()) throw Error(ErrorCode::InvalidArray, to_string(*this) + ": " + why.str());
}

IntersectionArray moore57_array() { return {{55, 54, 2}, {1, 1, 54}}; }

IntersectionArray parse_intersection_array(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '[' || ch == ']' || ch == '{' || ch == '}') continue;
    cleaned.push_back(ch);
  }
  const auto semi = cleaned.find(';');
  if (semi == std::string::npos || cleaned.find(';', semi + 1) != std::string::npos) {
    throw Error(ErrorCode::Parse, "intersection array needs exactly one ';': '" + std::string(text) + "'");
  }
  auto parse_three = [&](std::string_view part) {
    std::array<Int, 3> out{};
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos <= part.size()) {
      const auto comma = std::min(part.find(',', pos), part.size());
      const auto field = part.substr(pos, comma - pos);
      Int value = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || count == 3) {
        throw Error(ErrorCode::Parse, "malformed intersection array: '" + std::string(text) + "'");
      }
      out[count++] = value;
      pos = comma + 1;
    }
    if (count != 3) throw Error(ErrorCode::Parse, "expected three values per half: '" + std::string(text) + "'");
    return out;
  };
  const std::string_view view(cleaned);
  IntersectionArray arr{parse_three(view.substr(0, semi)), parse_three(view.substr(semi + 1))};
  return arr;
}

std::string to_string(const IntersectionArray& arr) {
  std::ostringstream os;
  os << arr.b[0] << ',' << arr.b[1] << ',' << arr.b[2] << ';' << arr.c[0] << ',' << arr.c[1] << ',' << arr.c[2];
  return os.str();
}

Multiplicities multiplicities(const IntersectionArray& arr) {
  arr.validate();
  Multiplicities k{1, 0, 0, 0};
  for (int i = 0; i < kDiameter; ++i) {
    const Int num = k[static_cast<std::size_t>(i)] * arr.b_at(i);
    const Int den = arr.c_at(i + 1);
    if (num % den != 0) {
      std::ostringstream os;
      os << "k" << i << " * b" << i << " = " << num << " is not divisible by c" << (i + 1) << " = " << den;
      throw Error(ErrorCode::NonIntegralMultiplicity, os.str());
    }
    k[static_cast<std::size_t>(i + 1)] = num / den;
  }
  return k;
}

std::vector<InvariantViolation> check_invariants(const IntersectionNumbers& p) {
  std::vector<InvariantViolation> out;
  const auto& k = p.k();
  for (int z = 1; z <= kDiameter; ++z) {
    for (int x = 0; x <= kDiameter; ++x) {
      Int row = 0;
      for (int y = 0; y <= kDiameter; ++y) {
        const Int v = p(z, x, y);
        row += v;
        if (v < 0) out.push_back({"non-negative", z, x, y, v, 0});
        if (v != p(z, y, x)) out.push_back({"symmetry", z, x, y, v, p(z, y, x)});
        const bool outside = std::abs(x - y) > z || x + y < z;
        if (outside && v != 0) out.push_back({"triangle-zero", z, x, y, v, 0});
      }
      if (row != k[static_cast<std::size_t>(x)]) out.push_back({"row-sum", z, x, -1, row, k[static_cast<std::size_t>(x)]});
      const Int border = x == z ? 1 : 0;
      if (p(z, x, 0) != border) out.push_back({"border", z, x, 0, p(z, x, 0), border});
    }
  }
  return out;
}

IntersectionNumbers intersection_numbers(const IntersectionArray& arr) {
  const Multiplicities k = multiplicities(arr);
  using Table = IntersectionNumbers::Table;

  // intersection matrices: (L_i)(h, j) = p^h_{ij}; L_1 is tridiagonal in the
  // array parameters and L_{i+1} follows from A A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}.
  std::array<Table, 4> l;
  l[0] = Table::Identity();
  l[1].setZero();
  for (int h = 0; h <= kDiameter; ++h) {
    if (h > 0) l[1](h, h - 1) = arr.c_at(h);
    l[1](h, h) = h == 0 ? 0 : arr.a(h);
    if (h < kDiameter) l[1](h, h + 1) = arr.b_at(h);
  }
  for (int i = 1; i < kDiameter; ++i) {
    const Table num = l[1] * l[static_cast<std::size_t>(i)] - arr.b_at(i - 1) * l[static_cast<std::size_t>(i - 1)] -
                      arr.a(i) * l[static_cast<std::size_t>(i)];
    const Int den = arr.c_at(i + 1);
    for (int r = 0; r < 4; ++r) {
      for (int s = 0; s < 4; ++s) {
        if (num(r, s) % den != 0) {
          throw Error(ErrorCode::InfeasibleArray, to_string(arr) + ": non-integral intersection number");
        }
      }
    }
    l[static_cast<std::size_t>(i + 1)] = num / den;
  }

  std::array<Table, 4> tables;
  for (int z = 0; z <= kDiameter; ++z) {
    for (int x = 0; x <= kDiameter; ++x) {
      for (int y = 0; y <= kDiameter; ++y) tables[static_cast<std::size_t>(z)](x, y) = l[static_cast<std::size_t>(x)](z, y);
    }
  }
  IntersectionNumbers p(tables, k);
  const auto bad = check_invariants(p);
  if (!bad.empty()) {
    std::ostringstream os;
    os << to_string(arr) << ": " << bad.front().name << " fails at p(" << bad.front().z << ',' << bad.front().x << ','
       << bad.front().y << ") = " << bad.front().value;
    throw Error(ErrorCode::InfeasibleArray, os.str());
  }
  return p;
}

std::vector<PublishedDiagnostic> compare_with_published(const IntersectionNumbers& p,
                                                        const PublishedTables& published) {
  std::vector<PublishedDiagnostic> out;
  for (int z = 1; z <= kDiameter; ++z) {
    const auto& table = published[static_cast<std::size_t>(z - 1)];
    for (int x = 1; x <= kDiameter; ++x) {
      for (int y = 1; y <= kDiameter; ++y) {
        const Int pub = table(x - 1, y - 1);
        if (pub != p(z, x, y)) out.push_back({"published-entry-mismatch", z, x, y, p(z, x, y), pub});
        if (x < y && pub != table(y - 1, x - 1)) out.push_back({"published-asymmetry", z, x, y, pub, table(y - 1, x - 1)});
      }
    }
  }
  return out;
}

}  // namespace moore57
