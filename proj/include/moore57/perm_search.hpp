#pragma once

// Permutation systems for the distance-2 subgraph H of a Moore graph of
// degree d: d parts of d-1 vertices, and the edges between parts i < j form a
// bijection theta_ij. A Moore graph exists iff some system yields an H with
// no triangles or squares.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moore57/graph.hpp"

namespace moore57 {

// One-line notation on {0, .., m-1}.
using Permutation = std::vector<int>;

Permutation identity_permutation(int m);
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);
bool fixed_point_free(const Permutation& p);

class PermSystem {
 public:
  // degree parts of degree - 1 elements each
  explicit PermSystem(int degree) : PermSystem(degree, degree - 1) {}
  // The reduced systems psi of the lifted form have d - 1 parts of d - 1
  // elements, so part count and size are independent here.
  PermSystem(int parts, int part_size);

  int degree() const { return d_; }
  int part_size() const { return m_; }

  // Parts are 1-based, i != j. theta(j, i) is the inverse of theta(i, j).
  void set(int i, int j, Permutation p);
  Permutation theta(int i, int j) const;
  bool has(int i, int j) const;

  // Every pair 1 <= i < j <= d assigned with a valid permutation.
  bool complete() const;

  const std::map<std::pair<int, int>, Permutation>& pairs() const { return theta_; }

 private:
  int d_;
  int m_;
  std::map<std::pair<int, int>, Permutation> theta_;  // keys with i < j
};

// Applies theta along a walk of parts: x in part path[0] maps to
// theta(path[n-2], path[n-1])( ... theta(path[0], path[1])(x)).
Permutation follow(const PermSystem& sys, const std::vector<int>& path);

// Vertex (part i, element x) is (i - 1) * (d - 1) + x.
SimpleGraph build_h(const PermSystem& sys);

struct HReport {
  bool d_parts = false;
  bool part_sizes = false;
  bool regular = false;
  bool one_neighbour_per_part = false;
  bool no_short_cycles = false;

  bool all() const { return d_parts && part_sizes && regular && one_neighbour_per_part && no_short_cycles; }
};

HReport verify_h(const SimpleGraph& h, int d);

// Vertex 0 is the centre, 1..d its neighbours, d+1.. the vertices of H in
// order; neighbour i is joined to all of part i.
SimpleGraph assemble_moore(const SimpleGraph& h, int d);

struct MooreReport {
  bool is_moore = false;
  int order = 0;
  bool regular = false;
  std::optional<int> girth;
  std::optional<int> diameter;
  std::string diagnostic;
};

MooreReport is_moore(const SimpleGraph& g, int d);

// psi has d - 1 parts of d - 1 elements; the lift has d parts with
// theta_ij = psi_ij for j < d and theta_id = identity.
PermSystem cor6_lift(const PermSystem& psi);

struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchOutcome { Found, ExhaustedNoSolution, BudgetExceeded };
const char* to_string(SearchOutcome outcome);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::ExhaustedNoSolution;
  std::optional<PermSystem> system;
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  SearchBudget budget;
  // Shuffles the order in which images are tried; verdicts of exhaustive runs
  // do not depend on it.
  std::optional<std::uint64_t> seed;
  // Fix theta_id = identity for every i (the normalized form). Disabling it
  // searches the full product space.
  bool normalize = true;
};

// Backtracking over the pairs in lexicographic order, one image at a time,
// rejecting any triangle or square the new edge closes in the partial H.
SearchResult search(int d, const SearchOptions& options = {});

}  // namespace moore57
