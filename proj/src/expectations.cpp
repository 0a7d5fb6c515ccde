#include "moore57/expectations.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "moore57/error.hpp"
#include "moore57/io.hpp"
#include "moore57/nullspace.hpp"

#ifndef MOORE57_DATA_DIR
#define MOORE57_DATA_DIR "data"
#endif

namespace moore57 {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + file.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(const std::filesystem::path& file, std::size_t lineno, const std::string& why) {
  throw Error(ErrorCode::Parse, file.string() + ":" + std::to_string(lineno) + ": " + why);
}

}  // namespace

std::filesystem::path default_data_dir() { return MOORE57_DATA_DIR; }

std::map<BlockId, Vec27> load_fixtures(const std::filesystem::path& file) {
  std::map<BlockId, Vec27> out;
  const auto lines = read_lines(file);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) bad_line(file, i + 1, "expected 'UVW: values'");
    try {
      out[parse_block(trim(line.substr(0, colon)))] = parse_solution(line.substr(colon + 1));
    } catch (const Error& e) {
      bad_line(file, i + 1, e.what());
    }
  }
  return out;
}

std::map<BlockId, std::size_t> load_counts(const std::filesystem::path& file) {
  std::map<BlockId, std::size_t> out;
  const auto lines = read_lines(file);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string label;
    std::size_t count = 0;
    if (!(is >> label >> count)) bad_line(file, i + 1, "expected 'UVW count'");
    out[parse_block(label)] = count;
  }
  return out;
}

Listing load_listing(const std::filesystem::path& file) {
  std::vector<int> column_of(kNullDim);  // printed column -> canonical coefficient
  for (int k = 0; k < kNullDim; ++k) column_of[static_cast<std::size_t>(k)] = k;
  Listing out;
  std::string current_case;
  const auto lines = read_lines(file);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream is(line.substr(1));
      std::string key;
      is >> key;
      if (key == "columns:") {
        for (int k = 0; k < kNullDim; ++k) {
          std::string name;
          if (!(is >> name)) bad_line(file, i + 1, "columns header needs eight names");
          const auto it = std::find(kCoeffNames.begin(), kCoeffNames.end(), name);
          if (it == kCoeffNames.end()) bad_line(file, i + 1, "unknown coefficient name '" + name + "'");
          column_of[static_cast<std::size_t>(k)] = static_cast<int>(it - kCoeffNames.begin());
        }
      } else if (key == "case") {
        std::getline(is, current_case);
        current_case = trim(current_case);
        out.case_order.push_back(current_case);
      }
      continue;
    }
    std::istringstream is(line);
    Coeffs n;
    for (int k = 0; k < kNullDim; ++k) {
      Int v = 0;
      if (!(is >> v)) bad_line(file, i + 1, "expected eight integers");
      n(column_of[static_cast<std::size_t>(k)]) = v;
    }
    out.tuples.push_back(n);
    out.case_of.push_back(current_case);
  }
  return out;
}

PublishedTables load_published_pnums(const std::filesystem::path& file) {
  PublishedTables out;
  int which = -1;
  int row = 0;
  const auto lines = read_lines(file);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    if (line.size() == 3 && line[0] == 'p' && line[2] == ':') {
      which = line[1] - '1';
      if (which < 0 || which > 2) bad_line(file, i + 1, "expected p1:, p2: or p3:");
      row = 0;
      continue;
    }
    if (which < 0 || row > 2) bad_line(file, i + 1, "row outside a p-block");
    std::istringstream is(line);
    for (int c = 0; c < 3; ++c) {
      if (!(is >> out[static_cast<std::size_t>(which)](row, c))) bad_line(file, i + 1, "expected three integers");
    }
    ++row;
  }
  return out;
}

}  // namespace moore57
