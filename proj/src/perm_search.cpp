#include "moore57/perm_search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "moore57/error.hpp"

namespace moore57 {

Permutation identity_permutation(int m) {
  Permutation p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return out;
}

bool fixed_point_free(const Permutation& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == static_cast<int>(x)) return false;
  }
  return true;
}

PermSystem::PermSystem(int parts, int part_size) : d_(parts), m_(part_size) {
  if (parts < 1 || part_size < 1) throw Error(ErrorCode::InvalidPermSystem, "need at least one part of one element");
}

void PermSystem::set(int i, int j, Permutation p) {
  if (i < 1 || j < 1 || i > d_ || j > d_ || i == j) throw Error(ErrorCode::InvalidPermSystem, "bad part pair");
  if (static_cast<int>(p.size()) != part_size() || !is_permutation(p)) {
    throw Error(ErrorCode::InvalidPermSystem, "theta must permute " + std::to_string(part_size()) + " elements");
  }
  if (i < j) theta_[{i, j}] = std::move(p);
  else theta_[{j, i}] = inverse(p);
}

bool PermSystem::has(int i, int j) const { return theta_.count({std::min(i, j), std::max(i, j)}) > 0; }

Permutation PermSystem::theta(int i, int j) const {
  const auto it = theta_.find({std::min(i, j), std::max(i, j)});
  if (it == theta_.end()) throw Error(ErrorCode::InvalidPermSystem, "pair unassigned");
  return i < j ? it->second : inverse(it->second);
}

bool PermSystem::complete() const { return theta_.size() == static_cast<std::size_t>(d_ * (d_ - 1) / 2); }

Permutation follow(const PermSystem& sys, const std::vector<int>& path) {
  Permutation out = identity_permutation(sys.part_size());
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const Permutation step = sys.theta(path[s], path[s + 1]);
    for (int& v : out) v = step[static_cast<std::size_t>(v)];
  }
  return out;
}

SimpleGraph build_h(const PermSystem& sys) {
  const int d = sys.degree();
  const int m = sys.part_size();
  SimpleGraph h(d * m);
  std::vector<int> parts(static_cast<std::size_t>(d * m));
  for (int v = 0; v < d * m; ++v) parts[static_cast<std::size_t>(v)] = v / m;
  for (const auto& [key, p] : sys.pairs()) {
    const auto [i, j] = key;
    for (int x = 0; x < m; ++x) h.add_edge((i - 1) * m + x, (j - 1) * m + p[static_cast<std::size_t>(x)]);
  }
  h.set_parts(std::move(parts));
  return h;
}

HReport verify_h(const SimpleGraph& h, int d) {
  HReport rep;
  if (!h.parts() || static_cast<int>(h.parts()->size()) != h.order()) return rep;
  const auto& part = *h.parts();
  std::vector<int> sizes(static_cast<std::size_t>(d), 0);
  bool labels_ok = true;
  for (int p : part) {
    if (p < 0 || p >= d) labels_ok = false;
    else ++sizes[static_cast<std::size_t>(p)];
  }
  rep.d_parts = labels_ok && std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; });
  rep.part_sizes = labels_ok && std::all_of(sizes.begin(), sizes.end(), [d](int s) { return s == d - 1; });
  rep.regular = true;
  rep.one_neighbour_per_part = labels_ok;
  for (int v = 0; v < h.order(); ++v) {
    rep.regular &= h.degree(v) == d - 1;
    if (!labels_ok) continue;
    std::vector<int> per_part(static_cast<std::size_t>(d), 0);
    for (int w : h.neighbours(v)) ++per_part[static_cast<std::size_t>(part[static_cast<std::size_t>(w)])];
    for (int p = 0; p < d; ++p) {
      const int want = p == part[static_cast<std::size_t>(v)] ? 0 : 1;
      rep.one_neighbour_per_part &= per_part[static_cast<std::size_t>(p)] == want;
    }
  }
  rep.no_short_cycles = !has_triangle(h) && !has_square(h);
  return rep;
}

SimpleGraph assemble_moore(const SimpleGraph& h, int d) {
  if (!h.parts()) throw Error(ErrorCode::InvalidPermSystem, "H carries no part labels");
  SimpleGraph g(1 + d + h.order());
  for (int i = 1; i <= d; ++i) g.add_edge(0, i);
  for (int v = 0; v < h.order(); ++v) {
    g.add_edge(1 + (*h.parts())[static_cast<std::size_t>(v)], d + 1 + v);
    for (int w : h.neighbours(v)) {
      if (v < w) g.add_edge(d + 1 + v, d + 1 + w);
    }
  }
  return g;
}

MooreReport is_moore(const SimpleGraph& g, int d) {
  MooreReport rep;
  rep.order = g.order();
  rep.regular = true;
  for (int v = 0; v < g.order(); ++v) rep.regular &= g.degree(v) == d;
  std::ostringstream why;
  if (rep.order != d * d + 1) why << "order " << rep.order << " != " << d * d + 1 << "; ";
  if (!rep.regular) why << "not " << d << "-regular; ";
  // girth and diameter are only meaningful to report on the right order
  if (rep.order == d * d + 1 && rep.regular) {
    rep.girth = girth(g);
    rep.diameter = diameter(g);
    if (rep.girth != 5) why << "girth " << (rep.girth ? std::to_string(*rep.girth) : "inf") << " != 5; ";
    if (rep.diameter != 2) why << "diameter " << (rep.diameter ? std::to_string(*rep.diameter) : "inf") << " != 2; ";
  }
  rep.diagnostic = why.str();
  rep.is_moore = rep.diagnostic.empty();
  if (rep.is_moore) rep.diagnostic = "order " + std::to_string(rep.order) + ", " + std::to_string(d) + "-regular, girth 5, diameter 2";
  return rep;
}

PermSystem cor6_lift(const PermSystem& psi) {
  const int d = psi.degree() + 1;
  if (psi.part_size() != d - 1) throw Error(ErrorCode::InvalidPermSystem, "psi must act on as many elements as it has parts");
  PermSystem out(d);
  for (const auto& [key, p] : psi.pairs()) out.set(key.first, key.second, p);
  for (int i = 1; i < d; ++i) out.set(i, d, identity_permutation(d - 1));
  return out;
}

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found: return "Found";
    case SearchOutcome::ExhaustedNoSolution: return "ExhaustedNoSolution";
    case SearchOutcome::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

namespace {

class PartialH {
 public:
  explicit PartialH(int n) : words_((static_cast<std::size_t>(n) + 63) / 64), bits_(static_cast<std::size_t>(n) * words_), nbrs_(static_cast<std::size_t>(n)) {}

  // True when edge a-b would close a triangle or a square.
  bool closes_short_cycle(int a, int b) const {
    if (intersects(a, b)) return true;
    for (int c : nbrs_[static_cast<std::size_t>(a)]) {
      if (intersects(c, b)) return true;
    }
    return false;
  }

  void add(int a, int b) {
    set(a, b, true);
    set(b, a, true);
    nbrs_[static_cast<std::size_t>(a)].push_back(b);
    nbrs_[static_cast<std::size_t>(b)].push_back(a);
  }

  // Edges are removed in reverse insertion order.
  void remove_last(int a, int b) {
    set(a, b, false);
    set(b, a, false);
    nbrs_[static_cast<std::size_t>(a)].pop_back();
    nbrs_[static_cast<std::size_t>(b)].pop_back();
  }

 private:
  bool intersects(int a, int b) const {
    const auto* ra = &bits_[static_cast<std::size_t>(a) * words_];
    const auto* rb = &bits_[static_cast<std::size_t>(b) * words_];
    for (std::size_t k = 0; k < words_; ++k) {
      if (ra[k] & rb[k]) return true;
    }
    return false;
  }

  void set(int row, int col, bool on) {
    auto& word = bits_[static_cast<std::size_t>(row) * words_ + static_cast<std::size_t>(col) / 64];
    const std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(col) % 64);
    word = on ? (word | mask) : (word & ~mask);
  }

  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> nbrs_;
};

struct Slot {
  int i, j, x;
};

}  // namespace

SearchResult search(int d, const SearchOptions& options) {
  if (d < 2) throw Error(ErrorCode::InvalidPermSystem, "degree must be at least 2");
  const int m = d - 1;
  auto vid = [m](int part, int x) { return (part - 1) * m + x; };

  PartialH h(d * m);
  const int last_free_part = options.normalize ? d - 1 : d;
  if (options.normalize) {
    for (int i = 1; i < d; ++i) {
      for (int x = 0; x < m; ++x) h.add(vid(i, x), vid(d, x));
    }
  }

  std::vector<Slot> slots;
  for (int i = 1; i <= last_free_part; ++i) {
    for (int j = i + 1; j <= last_free_part; ++j) {
      for (int x = 0; x < m; ++x) slots.push_back({i, j, x});
    }
  }
  std::vector<std::vector<int>> order(slots.size(), identity_permutation(m));
  if (options.seed) {
    std::mt19937_64 rng(*options.seed);
    for (auto& o : order) std::shuffle(o.begin(), o.end(), rng);
  }

  // used[pair][y]: image y already taken within the slot's pair
  const auto pair_of = [&](std::size_t s) { return s / static_cast<std::size_t>(m); };
  std::vector<std::vector<bool>> used(slots.size() / static_cast<std::size_t>(std::max(m, 1)) + 1, std::vector<bool>(static_cast<std::size_t>(m), false));
  std::vector<int> next(slots.size() + 1, 0);
  std::vector<int> chosen(slots.size(), -1);

  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  std::ptrdiff_t pos = 0;
  const auto n_slots = static_cast<std::ptrdiff_t>(slots.size());
  while (pos >= 0 && pos < n_slots) {
    const auto s = static_cast<std::size_t>(pos);
    const Slot& slot = slots[s];
    bool placed = false;
    for (int k = next[s]; k < m; ++k) {
      const int y = order[s][static_cast<std::size_t>(k)];
      if (used[pair_of(s)][static_cast<std::size_t>(y)]) continue;
      if (options.budget.node_limit && result.nodes >= *options.budget.node_limit) {
        result.outcome = SearchOutcome::BudgetExceeded;
        return result;
      }
      ++result.nodes;
      if (options.budget.time_limit && (result.nodes & 0xfff) == 0 &&
          std::chrono::steady_clock::now() - start > *options.budget.time_limit) {
        result.outcome = SearchOutcome::BudgetExceeded;
        return result;
      }
      const int a = vid(slot.i, slot.x);
      const int b = vid(slot.j, y);
      if (h.closes_short_cycle(a, b)) continue;
      h.add(a, b);
      used[pair_of(s)][static_cast<std::size_t>(y)] = true;
      chosen[s] = y;
      next[s] = k + 1;
      next[s + 1] = 0;
      placed = true;
      break;
    }
    if (placed) {
      ++pos;
      continue;
    }
    --pos;
    if (pos >= 0) {
      const auto back = static_cast<std::size_t>(pos);
      const Slot& prev = slots[back];
      h.remove_last(vid(prev.i, prev.x), vid(prev.j, chosen[back]));
      used[pair_of(back)][static_cast<std::size_t>(chosen[back])] = false;
      chosen[back] = -1;
    }
  }

  if (pos < 0) {
    result.outcome = SearchOutcome::ExhaustedNoSolution;
    return result;
  }

  PermSystem sys(d);
  for (std::size_t s = 0; s < slots.size(); s += static_cast<std::size_t>(m)) {
    Permutation p(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) p[static_cast<std::size_t>(x)] = chosen[s + static_cast<std::size_t>(x)];
    sys.set(slots[s].i, slots[s].j, std::move(p));
  }
  if (options.normalize) {
    for (int i = 1; i < d; ++i) sys.set(i, d, identity_permutation(m));
  }
  const SimpleGraph found_h = build_h(sys);
  if (!verify_h(found_h, d).all() || !is_moore(assemble_moore(found_h, d), d).is_moore) {
    throw std::logic_error("search produced a system that fails verification");
  }
  result.outcome = SearchOutcome::Found;
  result.system = std::move(sys);
  return result;
}

}  // namespace moore57
