#include "moore57/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "moore57/error.hpp"

namespace moore57 {

SimpleGraph::SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {}

bool SimpleGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= order() || b >= order()) throw Error(ErrorCode::OutOfRange, "edge endpoint outside graph");
  if (a == b || adjacent(a, b)) return false;
  adj_[static_cast<std::size_t>(a)].push_back(b);
  adj_[static_cast<std::size_t>(b)].push_back(a);
  ++edges_;
  return true;
}

bool SimpleGraph::adjacent(int a, int b) const {
  const auto& na = neighbours(a);
  return std::find(na.begin(), na.end(), b) != na.end();
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < order(); ++a) {
    for (int b : neighbours(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> bfs_distances(const SimpleGraph& g, int source, std::vector<int>* parent = nullptr) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (parent) parent->assign(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(v)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      if (parent) (*parent)[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

std::optional<int> girth(const SimpleGraph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> parent;
  for (int s = 0; s < g.order(); ++s) {
    const auto dist = bfs_distances(g, s, &parent);
    // any non-tree edge closes a closed walk through s of length d(a)+d(b)+1,
    // and the minimum over all sources is the girth
    for (int a = 0; a < g.order(); ++a) {
      if (dist[static_cast<std::size_t>(a)] < 0) continue;
      for (int b : g.neighbours(a)) {
        if (parent[static_cast<std::size_t>(a)] == b || parent[static_cast<std::size_t>(b)] == a) continue;
        best = std::min(best, dist[static_cast<std::size_t>(a)] + dist[static_cast<std::size_t>(b)] + 1);
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<int> diameter(const SimpleGraph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool has_triangle(const SimpleGraph& g) {
  for (const auto& [a, b] : g.edges()) {
    for (int c : g.neighbours(a)) {
      if (c != b && g.adjacent(b, c)) return true;
    }
  }
  return false;
}

bool has_square(const SimpleGraph& g) {
  // two distinct vertices with two common neighbours
  std::vector<int> common(static_cast<std::size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) {
    std::fill(common.begin(), common.end(), 0);
    for (int m : g.neighbours(a)) {
      for (int b : g.neighbours(m)) {
        if (b != a && ++common[static_cast<std::size_t>(b)] >= 2) return true;
      }
    }
  }
  return false;
}

void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  for (const auto& [a, b] : g.edges()) os << a << ' ' << b << '\n';
}

}  // namespace moore57
