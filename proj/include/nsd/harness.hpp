#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsd/coloring.hpp"

namespace nsd {

enum class RunMode { Edge, Total, Both };
enum class EmitFormat { Jsonl, Csv };

struct RunOptions {
  RunMode mode = RunMode::Both;
  std::uint64_t seed = 0;
  int oracle_max_n = 0;  // oracle runs on graphs with n <= this; 0 disables it
  long long oracle_node_cap = 1'000'000'000;
  bool strict = false;
  bool fail_fast = false;
  int jobs = 1;
};

struct ColoringSummary {
  Method method = Method::Fallback;
  Method dispatched = Method::Case4;
  std::vector<int> colors_used;
  SolveStats stats;
  std::vector<int> edge_colors;
  std::vector<int> vertex_colors;  // total mode only
  bool verified = false;
  double millis = 0;
};

struct OracleSummary {
  std::optional<int> gndi;   // empty: unknown or not run
  std::optional<int> tgndi;
  long long nodes = 0;
  double millis = 0;
};

/// Everything the harness learns about one input graph.
struct GraphRecord {
  int index = 0;  // ordinal among processed graphs
  int line = 0;   // 1-based input line
  std::string g6;
  int n = 0;
  int edge_count = 0;
  int a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  std::optional<ColoringSummary> edge;
  std::optional<ColoringSummary> total;
  std::optional<OracleSummary> oracle;
  std::vector<std::string> failures;     // verification failures, solver errors
  std::vector<std::string> refutations;  // palette bound broken
};

struct RunSummary {
  long long graphs = 0;
  long long skipped = 0;
  long long parse_errors = 0;
  long long verification_failures = 0;
  long long refutations = 0;
  long long conjecture1_exceptions = 0;  // oracle gndi > 3
  long long oracle_checked = 0;
  std::map<std::string, long long> edge_methods;
  std::map<std::string, long long> total_methods;
  int max_edge_color = 0;
  int max_total_color = 0;
  double wall_ms = 0;
};

struct RunReport {
  std::vector<GraphRecord> records;
  RunSummary summary;
  bool strict = false;

  /// 0 iff no verification failure, no refutation and, under --strict, no
  /// parse error or skipped graph.
  int exit_code() const;
};

/// Reads graph6 lines, solves each connected cubic graph and collects the
/// outcome. Skips, parse errors and failures are logged to `log` with their
/// line numbers. Throws std::ios_base::failure on stream errors.
RunReport run_corpus(std::istream& in, const RunOptions& options, std::ostream& log);

/// One JSON object per record, then {"summary": ...}. Timings live under
/// "timing" keys so they can be stripped before comparing runs.
void write_jsonl(const RunReport& report, std::ostream& out);

/// Per-graph table with a header row.
void write_csv(const RunReport& report, std::ostream& out);

/// `count` connected cubic graphs on n vertices as graph6 lines, from the
/// configuration model seeded per attempt. With `dedup`, isomorphic repeats
/// are dropped; fewer than `count` lines come back when the classes run out
/// (the attempt budget is max(1000, 100 * count)). Throws Error(OddN).
std::vector<std::string> generate_corpus(int n, int count, std::uint64_t seed, bool dedup);

}  // namespace nsd
