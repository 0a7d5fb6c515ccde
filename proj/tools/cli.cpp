#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moore57/block.hpp"
#include "moore57/constraints.hpp"
#include "moore57/drg.hpp"
#include "moore57/error.hpp"
#include "moore57/exact_linalg.hpp"
#include "moore57/expectations.hpp"
#include "moore57/grid_oracle.hpp"
#include "moore57/io.hpp"
#include "moore57/nullspace.hpp"
#include "moore57/perm_search.hpp"
#include "moore57/solver.hpp"

namespace moore57::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

enum class Format { Table, Json, Tsv };

struct Config {
  std::string array = "55,54,2;1,1,54";
  std::string format = "table";
  std::string output;
  std::string data_dir;
  unsigned threads = 1;

  std::string block_label = "all";
  bool check = false;
  bool show_solutions = false;

  std::string fixtures;
  std::string counts;
  std::string grid_range = "5:10";

  int grid_n = 56;
  std::string pattern;

  int degree = 0;
  std::string budget_nodes;
  double budget_seconds = 0;
  std::optional<std::uint64_t> seed;
  std::string edges;
  bool no_normalize = false;

  Format fmt() const { return format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Table; }
  fs::path data() const { return data_dir.empty() ? default_data_dir() : fs::path(data_dir); }
  fs::path fixtures_file() const { return fixtures.empty() ? data() / "fixtures.txt" : fs::path(fixtures); }
  fs::path counts_file() const { return counts.empty() ? data() / "counts.txt" : fs::path(counts); }
};

// Result of one command: rendered text plus exit status.
struct Outcome {
  std::string text;
  int status = kOk;
};

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <typename Range>
std::vector<std::string> to_strings(const Range& r) {
  std::vector<std::string> out;
  for (const auto& v : r) out.push_back(std::to_string(v));
  return out;
}

std::vector<std::string> coeff_cells(const Coeffs& n) {
  return to_strings(std::vector<Int>(n.data(), n.data() + kNullDim));
}

std::vector<std::string> vector_cells(const Vec27& x) {
  return to_strings(std::vector<Int>(x.data(), x.data() + kBlockSize));
}

std::vector<BlockId> select_blocks(const std::string& label) {
  if (label == "all") return summary_order();
  const BlockId block = parse_block(label);
  const auto canon = canonical_blocks();
  if (std::find(canon.begin(), canon.end(), block) == canon.end()) {
    throw Error(ErrorCode::Parse, "'" + label + "' is not one of the canonical blocks " +
                                      "211, 221, 222, 321, 322, 331, 332, 333");
  }
  return {block};
}

// ---- pnums ---------------------------------------------------------------

Outcome cmd_pnums(const Config& cfg) {
  const IntersectionArray arr = parse_intersection_array(cfg.array);
  const IntersectionNumbers p = intersection_numbers(arr);
  Int total = 0;
  for (Int v : p.k()) total += v;

  std::vector<PublishedDiagnostic> diagnostics;
  const fs::path published = cfg.data() / "published_pnums.txt";
  if (arr == moore57_array() && fs::exists(published)) diagnostics = compare_with_published(p, load_published_pnums(published));

  std::ostringstream os;
  switch (cfg.fmt()) {
    case Format::Json: {
      json j = to_json(p);
      j["array"] = to_string(arr);
      j["total"] = total;
      j["diagnostics"] = json::array();
      for (const auto& d : diagnostics) {
        j["diagnostics"].push_back(
            {{"name", d.name}, {"z", d.z}, {"x", d.x}, {"y", d.y}, {"computed", d.computed}, {"published", d.published}});
      }
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Tsv:
      os << "k\t" << join(to_strings(p.k()), "\t") << '\n';
      for (int z = 1; z <= kDiameter; ++z) {
        for (int x = 1; x <= kDiameter; ++x) {
          os << 'p' << z << '\t' << x;
          for (int y = 1; y <= kDiameter; ++y) os << '\t' << p(z, x, y);
          os << '\n';
        }
      }
      break;
    case Format::Table:
      os << "array " << to_string(arr) << '\n';
      os << "k = (" << join(to_strings(p.k()), ", ") << "), total " << total << '\n';
      for (int z = 1; z <= kDiameter; ++z) {
        os << "p" << z << ":\n";
        std::vector<std::vector<std::string>> rows;
        for (int x = 1; x <= kDiameter; ++x) {
          std::vector<std::string> row;
          for (int y = 1; y <= kDiameter; ++y) row.push_back(std::to_string(p(z, x, y)));
          rows.push_back(row);
        }
        os << aligned_table(rows);
      }
      for (const auto& d : diagnostics) {
        os << "diagnostic " << d.name << " p" << d.z << "(" << d.x << "," << d.y << "): ";
        if (d.name == "published-asymmetry") {
          os << "printed " << d.computed << " vs transposed " << d.published << '\n';
        } else {
          os << "computed " << d.computed << ", printed " << d.published << '\n';
        }
      }
      break;
  }
  return {os.str(), kOk};
}

// ---- blocks --------------------------------------------------------------

IntersectionNumbers numbers(const Config& cfg) { return intersection_numbers(parse_intersection_array(cfg.array)); }

Outcome cmd_blocks_list(const Config& cfg) {
  std::ostringstream os;
  json out = json::array();
  for (const BlockId& block : canonical_blocks()) {
    std::vector<std::string> orbit;
    for (const BlockId& other : admissible_blocks()) {
      if (canonical_of(other) == block) orbit.push_back(to_string(other));
    }
    const auto zeros = forced_zero_variables(block);
    if (cfg.fmt() == Format::Json) {
      out.push_back({{"block", to_string(block)}, {"orbit", orbit}, {"forced_zero", zeros}});
    } else if (cfg.fmt() == Format::Tsv) {
      os << to_string(block) << '\t' << join(orbit, ",") << '\t' << zeros.size() << '\n';
    } else {
      os << to_string(block) << "  orbit {" << join(orbit, ", ") << "}  forced zeros " << zeros.size() << '\n';
    }
  }
  if (cfg.fmt() == Format::Json) os << out.dump(2) << '\n';
  return {os.str(), kOk};
}

Outcome cmd_blocks_build(const Config& cfg) {
  const IntersectionNumbers p = numbers(cfg);
  std::ostringstream os;
  json all = json::array();
  for (const BlockId& block : select_blocks(cfg.block_label)) {
    const BlockSystem sys = build_system(block, p);
    const ConstraintSet cons = assemble(block);
    if (cfg.fmt() == Format::Json) {
      json j;
      j["block"] = to_string(block);
      j["rhs"] = std::vector<Int>(sys.rhs.data(), sys.rhs.data() + kBlockSize);
      j["forced_zero"] = sys.forced_zero;
      j["constraints"] = to_json(cons);
      json m = json::array();
      for (int r = 0; r < kBlockSize; ++r) {
        std::vector<Int> row;
        for (int c = 0; c < kBlockSize; ++c) row.push_back(sys.matrix()(r, c));
        m.push_back(row);
      }
      j["matrix"] = m;
      all.push_back(j);
    } else if (cfg.fmt() == Format::Tsv) {
      os << to_string(block) << "\trhs\t" << format_vector(sys.rhs, "\t") << '\n';
    } else {
      os << "block " << to_string(block) << '\n';
      static const char* summed[] = {"i1", "i2", "i3"};
      for (int family = 0; family < 3; ++family) {
        os << "  family " << family + 1 << " (sum over " << summed[family] << "):";
        for (int r = 0; r < 9; ++r) os << ' ' << sys.rhs(9 * family + r);
        os << '\n';
      }
      os << "  forced zero: " << join(to_strings(sys.forced_zero), " ") << '\n';
      os << "  constraints:";
      for (const auto& c : cons.items()) {
        if (c.kind == ConstraintKind::NonNegative) continue;
        os << ' ' << (c.kind == ConstraintKind::FixedValue ? "x(" + std::to_string(c.index) + ")=" : "x(" + std::to_string(c.index) + ")<=")
           << c.value;
      }
      os << "  (all variables non-negative)\n";
    }
  }
  if (cfg.fmt() == Format::Json) os << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
  return {os.str(), kOk};
}

Outcome cmd_blocks_enumerate(const Config& cfg) {
  const IntersectionNumbers p = numbers(cfg);
  std::map<BlockId, std::size_t> expected;
  if (cfg.check) expected = load_counts(cfg.counts_file());
  std::ostringstream os;
  json all = json::array();
  int status = kOk;
  for (const BlockId& block : select_blocks(cfg.block_label)) {
    const EnumerationResult res = enumerate_solutions(build_system(block, p), assemble(block), {cfg.threads});
    std::string check_note;
    bool ok = true;
    if (cfg.check) {
      const auto it = expected.find(block);
      ok = it != expected.end() && it->second == res.count();
      if (!ok) status = kVerificationFailed;
      check_note = ok ? "matches stored count" : "MISMATCH with stored count";
    }
    switch (cfg.fmt()) {
      case Format::Json: {
        json j = to_json(res);
        if (cfg.check) j["check"] = ok;
        all.push_back(j);
        break;
      }
      case Format::Tsv:
        for (std::size_t i = 0; i < res.count(); ++i) {
          os << to_string(block) << '\t' << i + 1 << '\t' << format_coeffs(res.tuples[i], "\t") << '\t'
             << format_vector(res.solutions[i], "\t") << '\n';
        }
        break;
      case Format::Table: {
        os << "Block " << to_string(block) << ": " << res.count() << " solution" << (res.count() == 1 ? "" : "s");
        if (!check_note.empty()) os << " (" << check_note << ")";
        os << "\n  base x = (" << format_vector(res.base, ", ") << ")\n";
        std::vector<std::vector<std::string>> rows;
        rows.emplace_back(kCoeffNames.begin(), kCoeffNames.end());
        // listed like the hand derivation: largest solution (n = 0) first
        for (std::size_t i = res.count(); i-- > 0;) {
          auto row = coeff_cells(res.tuples[i]);
          if (cfg.show_solutions) {
            row.push_back("|");
            for (auto& cell : vector_cells(res.solutions[i])) row.push_back(cell);
          }
          rows.push_back(row);
        }
        os << aligned_table(rows);
        break;
      }
    }
  }
  if (cfg.fmt() == Format::Json) os << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
  return {os.str(), status};
}

Outcome cmd_blocks_summary(const Config& cfg) {
  const auto counts = summary(numbers(cfg), {cfg.threads});
  int status = kOk;
  std::vector<std::string> mismatches;
  if (cfg.check) {
    const auto expected = load_counts(cfg.counts_file());
    for (const auto& bc : counts) {
      const auto it = expected.find(bc.block);
      if (it == expected.end() || it->second != bc.count) {
        status = kVerificationFailed;
        mismatches.push_back(to_string(bc.block));
      }
    }
  }
  std::size_t total = 0;
  for (const auto& bc : counts) total += bc.count;
  std::ostringstream os;
  switch (cfg.fmt()) {
    case Format::Json: {
      json j;
      j["counts"] = json::object();
      j["order"] = json::array();
      for (const auto& bc : counts) {
        j["counts"][to_string(bc.block)] = bc.count;
        j["order"].push_back(to_string(bc.block));
      }
      j["total"] = total;
      if (cfg.check) {
        j["check"] = status == kOk;
        j["mismatches"] = mismatches;
      }
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Tsv:
      for (const auto& bc : counts) os << to_string(bc.block) << '\t' << bc.count << '\n';
      break;
    case Format::Table: {
      std::vector<std::string> head{"Block"}, body{"Count"};
      for (const auto& bc : counts) {
        head.push_back(to_string(bc.block));
        body.push_back(std::to_string(bc.count));
      }
      os << aligned_table({head, body});
      os << "total " << total << '\n';
      if (cfg.check) os << (status == kOk ? "check: all counts match stored expectations\n" : "check: MISMATCH in " + join(mismatches, ", ") + "\n");
      break;
    }
  }
  return {os.str(), status};
}

// ---- verify --------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "grid range must look like 5:10, got '" + text + "'");
  }
}

std::vector<Check> grid_checks(int lo, int hi) {
  std::vector<Check> out;
  for (int n = lo; n <= hi; ++n) {
    const GridModel grid(n);
    for (const char* label : {"222", "322", "332", "333"}) {
      const BlockId pattern = parse_block(label);
      const auto t = place_pattern(grid, pattern);
      const int got = common_linemates(grid, t.u, t.v, t.w);
      const Int want = lemma2_value(pattern, n);
      out.push_back({"grid n=" + std::to_string(n) + " common line-mates " + label, got == want,
                     "got " + std::to_string(got) + ", want " + std::to_string(want)});
    }
    const auto t = place_pattern(grid, parse_block("222"));
    const int cand = lemma3b_candidates(grid, t.u, t.v);
    out.push_back({"grid n=" + std::to_string(n) + " non-collinear pair candidates", cand == 2, "got " + std::to_string(cand)});
    out.push_back({"grid n=" + std::to_string(n) + " rows meet columns once", rows_meet_columns_once(grid), ""});
  }
  return out;
}

Outcome cmd_verify(const Config& cfg) {
  std::vector<Check> checks;
  const IntersectionNumbers p = numbers(cfg);

  std::map<BlockId, Vec27> fixtures;
  try {
    fixtures = load_fixtures(cfg.fixtures_file());
  } catch (const Error& e) {
    checks.push_back({"fixture file", false, e.what()});
  }
  for (const BlockId& block : canonical_blocks()) {
    const std::string name = "fixture " + to_string(block);
    const auto it = fixtures.find(block);
    if (it == fixtures.end()) {
      checks.push_back({name, false, "missing"});
      continue;
    }
    const auto violations = verify_solution(build_system(block, p), assemble(block), it->second);
    std::string detail;
    for (const auto& v : violations) {
      detail += v.kind + "@" + std::to_string(v.index) + " (" + std::to_string(v.actual) + " vs " + std::to_string(v.expected) + ") ";
    }
    checks.push_back({name, violations.empty(), detail});
  }

  const auto& m = coefficient_matrix();
  const auto rank = exact_rank(m);
  checks.push_back({"rank(M) = 19", rank == 19, "rank " + std::to_string(rank)});
  checks.push_back({"M * null basis = 0", (m * null_basis()).isZero(), ""});
  checks.push_back({"null basis rank 8", exact_rank(null_basis()) == 8, ""});
  bool z_ok = true;
  for (int k = 0; k < kNullDim; ++k) z_ok &= null_basis()(kBlockSize - 1, k) == -1;
  checks.push_back({"entry 27 of every basis vector is -1", z_ok, ""});

  const auto [lo, hi] = parse_range(cfg.grid_range);
  for (auto& c : grid_checks(lo, hi)) checks.push_back(std::move(c));

  const bool all_ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  std::ostringstream os;
  if (cfg.fmt() == Format::Json) {
    json j = json::array();
    for (const auto& c : checks) j.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    os << json{{"passed", all_ok}, {"checks", j}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      os << (c.passed ? "PASS" : "FAIL") << (cfg.fmt() == Format::Tsv ? "\t" : "  ") << c.name;
      if (!c.passed && !c.detail.empty()) os << (cfg.fmt() == Format::Tsv ? "\t" : ": ") << c.detail;
      os << '\n';
    }
  }
  return {os.str(), all_ok ? kOk : kVerificationFailed};
}

// ---- grid-oracle -----------------------------------------------------------

Outcome cmd_grid(const Config& cfg) {
  const GridModel grid(cfg.grid_n);
  std::vector<std::string> labels;
  if (cfg.pattern.empty()) labels = {"222", "322", "332", "333"};
  else labels = {cfg.pattern};
  json patterns = json::array();
  for (const auto& label : labels) {
    const BlockId pattern = parse_block(label);
    const auto t = place_pattern(grid, pattern);
    patterns.push_back({{"pattern", label},
                        {"u", {t.u.row, t.u.col}},
                        {"v", {t.v.row, t.v.col}},
                        {"w", {t.w.row, t.w.col}},
                        {"common_linemates", common_linemates(grid, t.u, t.v, t.w)}});
  }
  const GridVertex origin{1, 1};
  const int apart = lemma3b_candidates(grid, origin, {2, 2});
  const int together = lemma3b_candidates(grid, origin, {1, 2});
  const auto t322 = place_pattern(grid, parse_block("322"));
  const json j{{"n", cfg.grid_n},
               {"linemates_per_vertex", grid.linemate_count(origin)},
               {"patterns", patterns},
               {"pair_candidates", {{"non_collinear", apart}, {"collinear", together}}},
               {"lines_through_u_disjoint_from_vw_line_322", lines_through_disjoint_from(grid, t322.u, t322.v, t322.w)},
               {"rows_meet_columns_once", rows_meet_columns_once(grid)}};
  std::ostringstream os;
  if (cfg.fmt() == Format::Table) {
    os << "grid " << cfg.grid_n << "x" << cfg.grid_n << '\n';
    for (const auto& pj : patterns) os << "  pattern " << pj["pattern"].get<std::string>() << ": " << pj["common_linemates"] << " common line-mates\n";
    os << "  pair candidates: non-collinear " << apart << ", collinear " << together << '\n';
  } else if (cfg.fmt() == Format::Tsv) {
    for (const auto& pj : patterns) os << pj["pattern"].get<std::string>() << '\t' << pj["common_linemates"] << '\n';
  } else {
    os << j.dump(2) << '\n';
  }
  return {os.str(), kOk};
}

// ---- search --------------------------------------------------------------

Outcome cmd_search(const Config& cfg) {
  if (cfg.degree < 2) throw Error(ErrorCode::Parse, "--degree must be at least 2");
  SearchOptions opts;
  if (!cfg.budget_nodes.empty()) opts.budget.node_limit = parse_count(cfg.budget_nodes);
  if (cfg.budget_seconds > 0) opts.budget.time_limit = std::chrono::milliseconds(static_cast<long long>(cfg.budget_seconds * 1000));
  opts.seed = cfg.seed;
  opts.normalize = !cfg.no_normalize;
  const SearchResult res = search(cfg.degree, opts);

  json j{{"degree", cfg.degree}, {"outcome", to_string(res.outcome)}, {"nodes", res.nodes}};
  std::optional<SimpleGraph> moore;
  if (res.system) {
    const SimpleGraph h = build_h(*res.system);
    moore = assemble_moore(h, cfg.degree);
    j["system"] = to_json(*res.system);
    j["h"] = to_json(verify_h(h, cfg.degree));
    j["moore"] = to_json(is_moore(*moore, cfg.degree));
  }
  if (moore && !cfg.edges.empty()) {
    std::ofstream edges(cfg.edges);
    if (!edges) throw Error(ErrorCode::Parse, "cannot write " + cfg.edges);
    write_edge_list(edges, *moore);
  }
  std::ostringstream os;
  if (cfg.fmt() == Format::Json) {
    os << j.dump(2) << '\n';
  } else {
    os << "degree " << cfg.degree << ": " << to_string(res.outcome) << " after " << res.nodes << " nodes\n";
    if (res.system) {
      os << "system " << j["system"].dump() << '\n';
      os << "moore graph: " << j["moore"]["diagnostic"].get<std::string>() << '\n';
    }
  }
  return {os.str(), res.outcome == SearchOutcome::BudgetExceeded ? kBudgetExceeded : kOk};
}

// ---- report --------------------------------------------------------------

Outcome cmd_report(const Config& cfg) {
  const BlockId block = parse_block("221");
  const auto res = enumerate_solutions(build_system(block, numbers(cfg)), assemble(block), {cfg.threads});
  const DiscussionReport rep = discussion_report(res);
  const bool ok = rep.x331_spans_0_to_2 && rep.difference_when_x331_is_2 == 49 && rep.x132_always_zero;
  std::ostringstream os;
  if (cfg.fmt() == Format::Json) {
    json j{{"block", "221"},
           {"x331", rep.x331},
           {"x221", rep.x221},
           {"x132_always_zero", rep.x132_always_zero},
           {"x333_always_zero", rep.x333_always_zero},
           {"x331_spans_0_to_2", rep.x331_spans_0_to_2}};
    j["x221_minus_x331_when_x331_is_2"] = rep.difference_when_x331_is_2 ? json(*rep.difference_when_x331_is_2) : json(nullptr);
    os << j.dump(2) << '\n';
  } else {
    os << "block 221, " << res.count() << " solutions\n";
    for (std::size_t i = 0; i < rep.x331.size(); ++i) os << "  x(3,3,1) = " << rep.x331[i] << "  x(2,2,1) = " << rep.x221[i] << '\n';
    os << "  x(1,3,2) zero in every solution: " << (rep.x132_always_zero ? "yes" : "no") << '\n';
    os << "  x(3,3,3) zero in every solution: " << (rep.x333_always_zero ? "yes" : "no") << '\n';
    if (rep.difference_when_x331_is_2) os << "  x(2,2,1) - x(3,3,1) where x(3,3,1) = 2: " << *rep.difference_when_x331_is_2 << '\n';
  }
  return {os.str(), ok ? kOk : kVerificationFailed};
}

int exit_status_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
    case ErrorCode::OutOfRange:
    case ErrorCode::InadmissibleBlock:
    case ErrorCode::Unrealizable:
      return kUsage;
    default:
      return kVerificationFailed;
  }
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::Parse, "bad count '" + std::string(text) + "'");
    }
    return v;
  };
  auto power = [&](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (__builtin_mul_overflow(out, base, &out)) throw Error(ErrorCode::Parse, "count too large '" + std::string(text) + "'");
    }
    return out;
  };
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    return power(number(text.substr(0, caret)), number(text.substr(caret + 1)));
  }
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::uint64_t mantissa = number(text.substr(0, e));
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(mantissa, power(10, number(text.substr(e + 1))), &out)) {
      throw Error(ErrorCode::Parse, "count too large '" + std::string(text) + "'");
    }
    return out;
  }
  return number(text);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact-integer workbench for the degree-57 Moore graph feasibility systems", "moore57"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--array", cfg.array, "intersection array b0,b1,b2;c1,c2,c3")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "tsv"}))->capture_default_str();
  app.add_option("-o,--output", cfg.output, "write output to this file instead of stdout");
  app.add_option("--data-dir", cfg.data_dir, "directory holding the stored expectation files");
  app.add_option("--threads", cfg.threads, "workers for block enumeration")->check(CLI::Range(1u, 256u))->capture_default_str();

  std::function<Outcome()> action;

  auto* pnums = app.add_subcommand("pnums", "multiplicities and intersection numbers");
  pnums->callback([&] { action = [&] { return cmd_pnums(cfg); }; });

  auto* blocks = app.add_subcommand("blocks", "block systems: list | build | enumerate | summary");
  blocks->alias("block");
  blocks->require_subcommand(1);
  auto* list = blocks->add_subcommand("list", "canonical blocks and their orbits");
  list->callback([&] { action = [&] { return cmd_blocks_list(cfg); }; });
  auto* build = blocks->add_subcommand("build", "right-hand side, forced zeros and constraints of a block");
  build->add_option("block", cfg.block_label, "canonical block label or 'all'")->capture_default_str();
  build->callback([&] { action = [&] { return cmd_blocks_build(cfg); }; });
  auto* enumerate = blocks->add_subcommand("enumerate", "all constrained solutions of a block");
  enumerate->add_option("block", cfg.block_label, "canonical block label or 'all'")->capture_default_str();
  enumerate->add_flag("--check", cfg.check, "compare counts against the stored expectations");
  enumerate->add_flag("--solutions", cfg.show_solutions, "include the 27-entry vectors in table output");
  enumerate->add_option("--counts", cfg.counts, "stored counts file");
  enumerate->callback([&] { action = [&] { return cmd_blocks_enumerate(cfg); }; });
  auto* summ = blocks->add_subcommand("summary", "solution counts over the canonical blocks");
  summ->add_flag("--check", cfg.check, "compare counts against the stored expectations");
  summ->add_option("--counts", cfg.counts, "stored counts file");
  summ->callback([&] { action = [&] { return cmd_blocks_summary(cfg); }; });

  auto* verify = app.add_subcommand("verify", "fixtures, null space and grid-oracle checks");
  verify->add_option("--fixtures", cfg.fixtures, "particular-solution fixture file");
  verify->add_option("--grid-range", cfg.grid_range, "grid sizes lo:hi for the line-mate checks")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(cfg); }; });

  auto* grid = app.add_subcommand("grid-oracle", "line-mate counts in the rook's-graph model");
  grid->add_option("-n,--n", cfg.grid_n, "grid size")->check(CLI::Range(4, 4096))->capture_default_str();
  grid->add_option("--pattern", cfg.pattern, "collinearity pattern UVW with digits 2 or 3");
  grid->callback([&] { action = [&] { return cmd_grid(cfg); }; });

  auto* srch = app.add_subcommand("search", "permutation-system existence search");
  srch->add_option("-d,--degree", cfg.degree, "Moore graph degree")->required();
  srch->add_option("--budget-nodes", cfg.budget_nodes, "node limit, e.g. 1000000, 1e6 or 10^6");
  srch->add_option("--budget-seconds", cfg.budget_seconds, "wall-clock limit");
  srch->add_option("--seed", cfg.seed, "shuffle the try-order of images");
  srch->add_option("--edges", cfg.edges, "write the Moore graph edge list here when found");
  srch->add_flag("--no-normalize", cfg.no_normalize, "search without fixing theta_id = identity");
  srch->callback([&] { action = [&] { return cmd_search(cfg); }; });

  auto* report = app.add_subcommand("report", "block 221 cross-checks");
  report->callback([&] { action = [&] { return cmd_report(cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Outcome result;
  try {
    result = action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status_for(e);
  }

  if (cfg.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kUsage;
    }
    file << result.text;
  }
  if (result.status == kVerificationFailed) err << "verification failed\n";
  return result.status;
}

}  // namespace moore57::cli
