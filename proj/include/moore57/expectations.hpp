#pragma once

// Loaders for the version-controlled expectation files under data/. These
// are reference values to check computations against; nothing in the
// computation layer reads them.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "moore57/block.hpp"
#include "moore57/drg.hpp"
#include "moore57/types.hpp"

namespace moore57 {

// Directory baked in at build time; overridable at run time.
std::filesystem::path default_data_dir();

// "UVW: x1, x2, ..., x27" lines; '#' starts a comment.
std::map<BlockId, Vec27> load_fixtures(const std::filesystem::path& file);

// "UVW count" lines.
std::map<BlockId, std::size_t> load_counts(const std::filesystem::path& file);

// Coefficient listing. A "# columns: ..." header names the printed column
// order (any permutation of a b c d a' b' c' d'); "# case <label>" headers
// group the rows that follow. Tuples are returned in canonical order.
struct Listing {
  std::vector<Coeffs> tuples;
  std::vector<std::string> case_of;  // parallel to tuples; empty label when ungrouped
  std::vector<std::string> case_order;
};

Listing load_listing(const std::filesystem::path& file);

// Three 3x3 blocks "p1:", "p2:", "p3:" each followed by three rows.
PublishedTables load_published_pnums(const std::filesystem::path& file);

}  // namespace moore57
