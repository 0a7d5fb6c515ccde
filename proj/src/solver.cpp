#include "moore57/solver.hpp"

#include <algorithm>
#include <future>

#include "moore57/error.hpp"
#include "moore57/exact_linalg.hpp"
#include "moore57/nullspace.hpp"

namespace moore57 {

namespace {

constexpr int kMaxPropagationRounds = 1000;

bool tighten_lo(CoeffRange& r, Int v) {
  if (!r.lo || v > *r.lo) {
    r.lo = v;
    return true;
  }
  return false;
}

bool tighten_hi(CoeffRange& r, Int v) {
  if (!r.hi || v < *r.hi) {
    r.hi = v;
    return true;
  }
  return false;
}

// min and max of c * n over the range; nullopt when unbounded on that side.
std::optional<Int> term_min(Int c, const CoeffRange& r) {
  if (c > 0) return r.lo ? std::optional<Int>(c * *r.lo) : std::nullopt;
  return r.hi ? std::optional<Int>(c * *r.hi) : std::nullopt;
}

std::optional<Int> term_max(Int c, const CoeffRange& r) {
  if (c > 0) return r.hi ? std::optional<Int>(c * *r.hi) : std::nullopt;
  return r.lo ? std::optional<Int>(c * *r.lo) : std::nullopt;
}

struct Searcher {
  const Vec27& x0;
  const ConstraintSet& cons;
  std::vector<Coeffs> found;

  void run(const CoeffBox& box) {
    int next = -1;
    for (int j = 0; j < kNullDim; ++j) {
      if (*box[static_cast<std::size_t>(j)].lo != *box[static_cast<std::size_t>(j)].hi) {
        next = j;
        break;
      }
    }
    if (next < 0) {
      Coeffs n;
      for (int j = 0; j < kNullDim; ++j) n(j) = *box[static_cast<std::size_t>(j)].lo;
      const auto bounds = cons.bounds();
      const Vec27 x = x0 + expand(n);
      for (int i = 0; i < kBlockSize; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if ((bounds.lower[k] && x(i) < *bounds.lower[k]) || (bounds.upper[k] && x(i) > *bounds.upper[k])) return;
      }
      found.push_back(n);
      return;
    }
    const auto& range = box[static_cast<std::size_t>(next)];
    for (Int v = *range.lo; v <= *range.hi; ++v) {
      CoeffBox child = box;
      child[static_cast<std::size_t>(next)] = {v, v};
      if (auto narrowed = propagate_bounds(x0, cons, child)) run(*narrowed);
    }
  }
};

}  // namespace

Vec27 integer_point(const BlockSystem& system) {
  // The coordinate variables carry the null lattice; pinning them to zero
  // leaves a square-determined 19-column system.
  const auto& coords = coordinate_variables();
  std::vector<int> free_cols;
  for (int idx = 1; idx <= kBlockSize; ++idx) {
    if (std::find(coords.begin(), coords.end(), idx) == coords.end()) free_cols.push_back(idx - 1);
  }
  Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic> reduced(kBlockSize, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) reduced.col(static_cast<Eigen::Index>(j)) = system.matrix().col(free_cols[j]);
  const auto sol = solve_exact(reduced, system.rhs);
  if (sol.status != SolveStatus::Unique) {
    throw Error(ErrorCode::Infeasible, "block " + to_string(system.block) + " has no integer solution of M x = rhs");
  }
  Vec27 x = Vec27::Zero();
  for (std::size_t j = 0; j < free_cols.size(); ++j) x(free_cols[j]) = sol.x(static_cast<Eigen::Index>(j));
  return x;
}

std::optional<CoeffBox> propagate_bounds(const Vec27& x0, const ConstraintSet& cons, CoeffBox box) {
  const auto bounds = cons.bounds();
  const Basis& c = null_basis();
  for (int round = 0; round < kMaxPropagationRounds; ++round) {
    bool changed = false;
    for (int r = 0; r < kBlockSize; ++r) {
      const auto rk = static_cast<std::size_t>(r);
      const bool has_lower = bounds.lower[rk].has_value();
      const bool has_upper = bounds.upper[rk].has_value();
      const Int lower = bounds.lower[rk].value_or(0) - x0(r);
      const Int upper = bounds.upper[rk].value_or(0) - x0(r);
      for (int j = 0; j < kNullDim; ++j) {
        const Int cj = c(r, j);
        if (cj == 0) continue;
        std::optional<Int> others_min = 0, others_max = 0;
        for (int i = 0; i < kNullDim; ++i) {
          if (i == j || c(r, i) == 0) continue;
          const auto& ri = box[static_cast<std::size_t>(i)];
          const auto mn = term_min(c(r, i), ri);
          const auto mx = term_max(c(r, i), ri);
          others_min = (others_min && mn) ? std::optional<Int>(*others_min + *mn) : std::nullopt;
          others_max = (others_max && mx) ? std::optional<Int>(*others_max + *mx) : std::nullopt;
        }
        auto& rj = box[static_cast<std::size_t>(j)];
        // lower <= cj * n_j + others <= upper
        if (has_lower && others_max) {
          const Int bound = lower - *others_max;
          changed |= cj > 0 ? tighten_lo(rj, bound) : tighten_hi(rj, -bound);
        }
        if (has_upper && others_min) {
          const Int bound = upper - *others_min;
          changed |= cj > 0 ? tighten_hi(rj, bound) : tighten_lo(rj, -bound);
        }
        if (rj.lo && rj.hi && *rj.lo > *rj.hi) return std::nullopt;
      }
    }
    if (!changed) break;
  }
  return box;
}

bool lex_less(const Vec27& lhs, const Vec27& rhs) {
  return std::lexicographical_compare(lhs.data(), lhs.data() + kBlockSize, rhs.data(), rhs.data() + kBlockSize);
}

EnumerationResult enumerate_solutions(const BlockSystem& system, const ConstraintSet& cons,
                                      const EnumerationOptions& options) {
  const Vec27 x0 = integer_point(system);
  const auto root = propagate_bounds(x0, cons);
  if (!root) throw Error(ErrorCode::Infeasible, "block " + to_string(system.block) + ": constraints admit no solution");
  for (int j = 0; j < kNullDim; ++j) {
    if (!(*root)[static_cast<std::size_t>(j)].bounded()) {
      throw Error(ErrorCode::UnboundedLattice, "block " + to_string(system.block) + ": coefficient " +
                                                   std::string(kCoeffNames[static_cast<std::size_t>(j)]) + " is unbounded");
    }
  }

  // Partition on the first coefficient; each worker owns a contiguous slice.
  const Int first_lo = *(*root)[0].lo;
  const Int first_hi = *(*root)[0].hi;
  const Int span = first_hi - first_lo + 1;
  const Int workers = std::clamp<Int>(options.threads, 1, span);
  std::vector<std::future<std::vector<Coeffs>>> jobs;
  for (Int w = 0; w < workers; ++w) {
    const Int lo = first_lo + span * w / workers;
    const Int hi = first_lo + span * (w + 1) / workers - 1;
    auto job = [&x0, &cons, root, lo, hi] {
      CoeffBox slice = *root;
      slice[0] = {lo, hi};
      Searcher s{x0, cons, {}};
      if (auto narrowed = propagate_bounds(x0, cons, slice)) s.run(*narrowed);
      return std::move(s.found);
    };
    jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, job));
  }

  std::vector<Vec27> solutions;
  for (auto& job : jobs) {
    for (const Coeffs& n : job.get()) solutions.push_back(x0 + expand(n));
  }
  if (solutions.empty()) throw Error(ErrorCode::Infeasible, "block " + to_string(system.block) + ": constraints admit no solution");
  std::sort(solutions.begin(), solutions.end(), lex_less);

  EnumerationResult out;
  out.block = system.block;
  out.base = solutions.back();
  out.solutions = std::move(solutions);
  out.root_box = *root;
  out.tuples = tuples_relative_to(out, out.base);
  return out;
}

std::vector<Coeffs> tuples_relative_to(const EnumerationResult& result, const Vec27& base) {
  std::vector<Coeffs> out;
  out.reserve(result.solutions.size());
  for (const Vec27& x : result.solutions) out.push_back(coefficients_of(x - base));
  return out;
}

Vec27 particular_solution(const BlockSystem& system, const ConstraintSet& cons) {
  return enumerate_solutions(system, cons).base;
}

std::vector<Violation> verify_solution(const BlockSystem& system, const ConstraintSet& cons, const Vec27& x) {
  std::vector<Violation> out;
  const Vec27 lhs = system.matrix() * x;
  for (int r = 0; r < kBlockSize; ++r) {
    if (lhs(r) != system.rhs(r)) out.push_back({"equation", r + 1, lhs(r), system.rhs(r)});
  }
  for (const auto& c : cons.items()) {
    const Int v = x(c.index - 1);
    switch (c.kind) {
      case ConstraintKind::NonNegative:
        if (v < 0) out.push_back({"non-negative", c.index, v, 0});
        break;
      case ConstraintKind::FixedValue:
        if (v != c.value) out.push_back({"fixed-value", c.index, v, c.value});
        break;
      case ConstraintKind::UpperBound:
        if (v > c.value) out.push_back({"upper-bound", c.index, v, c.value});
        break;
    }
  }
  return out;
}

std::vector<BlockId> summary_order() {
  std::vector<BlockId> out;
  for (const char* label : {"333", "211", "221", "321", "331", "322", "222", "332"}) out.push_back(parse_block(label));
  return out;
}

std::vector<BlockCount> summary(const IntersectionNumbers& p, const EnumerationOptions& options) {
  std::vector<BlockCount> out;
  for (const BlockId& block : summary_order()) {
    const auto result = enumerate_solutions(build_system(block, p), assemble(block), options);
    out.push_back({block, result.count()});
  }
  return out;
}

DiscussionReport discussion_report(const EnumerationResult& block221) {
  DiscussionReport rep;
  const int i331 = var_index({3, 3, 1}) - 1;
  const int i221 = var_index({2, 2, 1}) - 1;
  const int i132 = var_index({1, 3, 2}) - 1;
  const int i333 = var_index({3, 3, 3}) - 1;
  rep.x132_always_zero = true;
  rep.x333_always_zero = true;
  for (const Vec27& x : block221.solutions) {
    rep.x331.push_back(x(i331));
    rep.x221.push_back(x(i221));
    rep.x132_always_zero &= x(i132) == 0;
    rep.x333_always_zero &= x(i333) == 0;
    if (x(i331) == 2) rep.difference_when_x331_is_2 = x(i221) - x(i331);
  }
  auto sorted = rep.x331;
  std::sort(sorted.begin(), sorted.end());
  rep.x331_spans_0_to_2 = sorted == std::vector<Int>{0, 1, 2};
  return rep;
}

}  // namespace moore57
