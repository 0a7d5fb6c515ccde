#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace moore57 {

// Undirected simple graph on vertices 0..n-1 with optional part labels.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edges_; }

  // Rejects self-loops and duplicates (returns false).
  bool add_edge(int a, int b);
  bool adjacent(int a, int b) const;
  const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

  std::vector<std::pair<int, int>> edges() const;  // a < b, sorted

  void set_parts(std::vector<int> part_of) { parts_ = std::move(part_of); }
  const std::optional<std::vector<int>>& parts() const { return parts_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edges_ = 0;
  std::optional<std::vector<int>> parts_;
};

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const SimpleGraph& g);

// Largest eccentricity, or nullopt when disconnected.
std::optional<int> diameter(const SimpleGraph& g);

bool has_triangle(const SimpleGraph& g);
bool has_square(const SimpleGraph& g);

// One "u v" line per edge, 0-based, a < b.
void write_edge_list(std::ostream& os, const SimpleGraph& g);

}  // namespace moore57
