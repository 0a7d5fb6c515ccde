#include "moore57/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "moore57/error.hpp"
#include "moore57/nullspace.hpp"

namespace moore57 {

Vec27 parse_solution(std::string_view text) {
  std::vector<Int> values;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw Error(ErrorCode::Parse, "bad integer '" + token + "'");
    values.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == '-' || (ch >= '0' && ch <= '9')) {
      token.push_back(ch);
    } else if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '[' || ch == ']' || ch == '(' || ch == ')') {
      flush();
    } else {
      throw Error(ErrorCode::Parse, std::string("unexpected character '") + ch + "' in solution vector");
    }
  }
  flush();
  if (values.size() != kBlockSize) {
    throw Error(ErrorCode::Parse, "solution needs 27 entries, got " + std::to_string(values.size()));
  }
  Vec27 x;
  for (int i = 0; i < kBlockSize; ++i) x(i) = values[static_cast<std::size_t>(i)];
  return x;
}

std::string format_vector(const Vec27& x, std::string_view sep) {
  std::ostringstream os;
  for (int i = 0; i < kBlockSize; ++i) os << (i ? sep : "") << x(i);
  return os.str();
}

std::string format_coeffs(const Coeffs& n, std::string_view sep) {
  std::ostringstream os;
  for (int i = 0; i < kNullDim; ++i) os << (i ? sep : "") << n(i);
  return os.str();
}

nlohmann::json to_json(const IntersectionNumbers& p) {
  nlohmann::json j;
  j["k"] = p.k();
  for (int z = 1; z <= kDiameter; ++z) {
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 1; x <= kDiameter; ++x) {
      std::vector<Int> row;
      for (int y = 1; y <= kDiameter; ++y) row.push_back(p(z, x, y));
      rows.push_back(row);
    }
    j["p" + std::to_string(z)] = rows;
  }
  return j;
}

nlohmann::json to_json(const ConstraintSet& cons) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cons.items()) out.push_back({{"kind", to_string(c.kind)}, {"index", c.index}, {"value", c.value}});
  return out;
}

nlohmann::json to_json(const EnumerationResult& result) {
  nlohmann::json j;
  j["block"] = to_string(result.block);
  j["count"] = result.count();
  j["base"] = std::vector<Int>(result.base.data(), result.base.data() + kBlockSize);
  nlohmann::json tuples = nlohmann::json::array();
  for (const auto& n : result.tuples) tuples.push_back(std::vector<Int>(n.data(), n.data() + kNullDim));
  j["tuples"] = tuples;
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& x : result.solutions) sols.push_back(std::vector<Int>(x.data(), x.data() + kBlockSize));
  j["solutions"] = sols;
  return j;
}

nlohmann::json to_json(const PermSystem& sys) {
  nlohmann::json j;
  j["degree"] = sys.degree();
  nlohmann::json theta = nlohmann::json::object();
  for (const auto& [key, p] : sys.pairs()) {
    std::vector<int> one_based;
    for (int v : p) one_based.push_back(v + 1);
    theta[std::to_string(key.first) + "," + std::to_string(key.second)] = one_based;
  }
  j["theta"] = theta;
  return j;
}

PermSystem perm_system_from_json(const nlohmann::json& j) {
  try {
    PermSystem sys(j.at("degree").get<int>());
    for (const auto& [key, value] : j.at("theta").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::Parse, "theta key '" + key + "' is not \"i,j\"");
      const int i = std::stoi(key.substr(0, comma));
      const int k = std::stoi(key.substr(comma + 1));
      Permutation p;
      for (int v : value.get<std::vector<int>>()) p.push_back(v - 1);
      sys.set(i, k, std::move(p));
    }
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

nlohmann::json to_json(const HReport& rep) {
  return {{"d_parts", rep.d_parts},
          {"part_sizes", rep.part_sizes},
          {"regular", rep.regular},
          {"one_neighbour_per_part", rep.one_neighbour_per_part},
          {"no_triangles_or_squares", rep.no_short_cycles},
          {"all", rep.all()}};
}

nlohmann::json to_json(const MooreReport& rep) {
  nlohmann::json j{{"is_moore", rep.is_moore}, {"order", rep.order}, {"regular", rep.regular}, {"diagnostic", rep.diagnostic}};
  j["girth"] = rep.girth ? nlohmann::json(*rep.girth) : nlohmann::json(nullptr);
  j["diameter"] = rep.diameter ? nlohmann::json(*rep.diameter) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const std::vector<Violation>& violations) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : violations) {
    out.push_back({{"kind", v.kind}, {"index", v.index}, {"actual", v.actual}, {"expected", v.expected}});
  }
  return out;
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace moore57
