#include "nsd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nsd/bipartition.hpp"
#include "nsd/error.hpp"
#include "nsd/generate.hpp"
#include "nsd/graph6.hpp"
#include "nsd/isomorphism.hpp"
#include "nsd/nsd_edge.hpp"
#include "nsd/nsd_total.hpp"
#include "nsd/oracle.hpp"

namespace nsd {
namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Input {
  int line = 0;
  std::string g6;
  Graph graph;
};

template <typename Coloring>
ColoringSummary summarize(const SolveOutcome<Coloring>& o) {
  ColoringSummary s;
  s.method = o.method;
  s.dispatched = o.dispatched;
  s.colors_used = o.colors_used;
  s.stats = o.stats;
  return s;
}

GraphRecord process(const Input& input, const RunOptions& options) {
  const Graph& g = input.graph;
  GraphRecord rec;
  rec.line = input.line;
  rec.g6 = input.g6;
  rec.n = g.order();
  rec.edge_count = g.size();

  const Decomposition d = decompose(g, max_mpartite_subgraph(g, 2, options.seed));
  rec.a1 = d.a1;
  rec.b1 = d.b1;
  rec.a2 = d.a2;
  rec.b2 = d.b2;

  if (options.mode != RunMode::Total) {
    const auto start = Clock::now();
    try {
      SolveOutcome<EdgeColoring> o = constructive_edge_coloring(g, d);
      ColoringSummary s = summarize(o);
      s.edge_colors = o.coloring.colors;
      // Independent re-check of what the solver hands back.
      s.verified = verify_nsd(g, o.coloring).ok;
      if (!s.verified) rec.failures.push_back("edge colouring failed re-verification");
      if (o.max_color() > 4) rec.refutations.push_back("edge colouring needs colour " + std::to_string(o.max_color()));
      s.millis = millis_since(start);
      rec.edge = std::move(s);
    } catch (const Error& e) {
      (e.code() == ErrorCode::Infeasible4 ? rec.refutations : rec.failures).push_back(e.what());
    } catch (const std::logic_error& e) {
      rec.failures.push_back(e.what());
    }
  }

  if (options.mode != RunMode::Edge) {
    const auto start = Clock::now();
    try {
      SolveOutcome<TotalColoring> o = constructive_total_coloring(g, d);
      ColoringSummary s = summarize(o);
      s.edge_colors = o.coloring.edge_colors;
      s.vertex_colors = o.coloring.vertex_colors;
      s.verified = verify_total(g, o.coloring).ok;
      if (!s.verified) rec.failures.push_back("total colouring failed re-verification");
      if (o.max_color() > 2) rec.refutations.push_back("total colouring needs colour " + std::to_string(o.max_color()));
      s.millis = millis_since(start);
      rec.total = std::move(s);
    } catch (const Error& e) {
      (e.code() == ErrorCode::Infeasible2 ? rec.refutations : rec.failures).push_back(e.what());
    } catch (const std::logic_error& e) {
      rec.failures.push_back(e.what());
    }
  }

  if (options.oracle_max_n > 0 && g.order() <= options.oracle_max_n) {
    const auto start = Clock::now();
    OracleSummary os;
    if (options.mode != RunMode::Total) {
      auto r = exact_gndi(g, 4, options.oracle_node_cap);
      os.nodes += r.nodes;
      os.gndi = r.value;
      if (r.status == ExactStatus::Infeasible) rec.refutations.push_back("oracle: no NSD edge colouring within 4 colours");
      if (os.gndi && rec.edge && *os.gndi > rec.edge->colors_used.back()) {
        rec.failures.push_back("oracle gndi exceeds the constructive palette");
      }
    }
    if (options.mode != RunMode::Edge) {
      auto r = exact_tgndi(g, 3, options.oracle_node_cap);
      os.nodes += r.nodes;
      os.tgndi = r.value;
      if (r.status == ExactStatus::Infeasible || (os.tgndi && *os.tgndi > 2)) {
        rec.refutations.push_back("oracle: no NSD total colouring within {1,2}");
      }
      if (os.tgndi && rec.total && *os.tgndi > rec.total->colors_used.back()) {
        rec.failures.push_back("oracle tgndi exceeds the constructive palette");
      }
    }
    os.millis = millis_since(start);
    rec.oracle = os;
  }
  return rec;
}

void tally(RunSummary& sum, const GraphRecord& rec) {
  ++sum.graphs;
  if (!rec.failures.empty()) ++sum.verification_failures;
  if (!rec.refutations.empty()) ++sum.refutations;
  if (rec.edge) {
    ++sum.edge_methods[std::string(to_string(rec.edge->method))];
    sum.max_edge_color = std::max(sum.max_edge_color, rec.edge->colors_used.back());
  }
  if (rec.total) {
    ++sum.total_methods[std::string(to_string(rec.total->method))];
    sum.max_total_color = std::max(sum.max_total_color, rec.total->colors_used.back());
  }
  if (rec.oracle) {
    ++sum.oracle_checked;
    if (rec.oracle->gndi && *rec.oracle->gndi > 3) ++sum.conjecture1_exceptions;
  }
}

json coloring_json(const ColoringSummary& s) {
  json j;
  j["method"] = to_string(s.method);
  j["dispatched"] = to_string(s.dispatched);
  j["colors_used"] = s.colors_used;
  j["verified"] = s.verified;
  j["conflicts_before_repair"] = s.stats.conflicts_before_repair;
  j["pair_operations"] = s.stats.pair_operations;
  j["pairing_deadlock"] = s.stats.pairing_deadlock;
  j["swapped_sides"] = s.stats.swapped_sides;
  j["rule_applications"] = s.stats.rule_applications;
  j["repair_steps"] = s.stats.repair_steps;
  j["fallback_nodes"] = s.stats.fallback_nodes;
  j["edge_colors"] = s.edge_colors;
  if (!s.vertex_colors.empty()) j["vertex_colors"] = s.vertex_colors;
  return j;
}

std::string method_or_empty(const std::optional<ColoringSummary>& s) {
  return s ? std::string(to_string(s->method)) : std::string();
}

std::string max_or_empty(const std::optional<ColoringSummary>& s) {
  return s ? std::to_string(s->colors_used.back()) : std::string();
}

std::string value_or_empty(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

int RunReport::exit_code() const {
  if (summary.verification_failures > 0 || summary.refutations > 0) return 1;
  if (strict && (summary.parse_errors > 0 || summary.skipped > 0)) return 1;
  return 0;
}

RunReport run_corpus(std::istream& in, const RunOptions& options, std::ostream& log) {
  const auto wall_start = Clock::now();
  RunReport report;
  report.strict = options.strict;

  std::vector<Input> inputs;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line == kGraph6Header) continue;
    try {
      Graph g = parse_graph6(line);
      if (!is_cubic(g)) {
        log << "line " << line_no << ": skipped, not cubic\n";
        ++report.summary.skipped;
        continue;
      }
      if (!is_connected(g)) {
        log << "line " << line_no << ": skipped, not connected\n";
        ++report.summary.skipped;
        continue;
      }
      inputs.push_back({line_no, line, std::move(g)});
    } catch (const Error& e) {
      log << "line " << line_no << ": parse error: " << e.what() << '\n';
      ++report.summary.parse_errors;
    }
  }
  if (in.bad()) throw std::ios_base::failure("input stream failed");

  std::vector<GraphRecord> records(inputs.size());
  const int jobs = options.fail_fast ? 1 : std::max(1, options.jobs);
  std::size_t done = inputs.size();
  if (jobs == 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      records[i] = process(inputs[i], options);
      if (options.fail_fast && (!records[i].failures.empty() || !records[i].refutations.empty())) {
        done = i + 1;
        log << "line " << inputs[i].line << ": stopping at first failure (--fail-fast)\n";
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) records[i] = process(inputs[i], options);
      });
    }
    for (auto& th : pool) th.join();
  }
  records.resize(done);

  for (std::size_t i = 0; i < records.size(); ++i) {
    GraphRecord& rec = records[i];
    rec.index = static_cast<int>(i);
    for (const auto& f : rec.failures) log << "line " << rec.line << ": FAILURE " << f << '\n';
    for (const auto& r : rec.refutations) log << "line " << rec.line << ": REFUTATION " << r << " [" << rec.g6 << "]\n";
    tally(report.summary, rec);
  }
  report.records = std::move(records);
  report.summary.wall_ms = millis_since(wall_start);
  return report;
}

void write_jsonl(const RunReport& report, std::ostream& out) {
  for (const GraphRecord& rec : report.records) {
    json j;
    j["index"] = rec.index;
    j["line"] = rec.line;
    j["g6"] = rec.g6;
    j["n"] = rec.n;
    j["edges"] = rec.edge_count;
    j["profile"] = {{"a1", rec.a1}, {"b1", rec.b1}, {"a2", rec.a2}, {"b2", rec.b2}};
    json timing = json::object();
    if (rec.edge) {
      j["edge"] = coloring_json(*rec.edge);
      timing["edge_ms"] = rec.edge->millis;
    }
    if (rec.total) {
      j["total"] = coloring_json(*rec.total);
      timing["total_ms"] = rec.total->millis;
    }
    if (rec.oracle) {
      j["oracle"] = {{"gndi", rec.oracle->gndi ? json(*rec.oracle->gndi) : json(nullptr)},
                     {"tgndi", rec.oracle->tgndi ? json(*rec.oracle->tgndi) : json(nullptr)},
                     {"nodes", rec.oracle->nodes}};
      timing["oracle_ms"] = rec.oracle->millis;
    }
    j["failures"] = rec.failures;
    j["refutations"] = rec.refutations;
    j["timing"] = timing;
    out << j.dump() << '\n';
  }
  const RunSummary& s = report.summary;
  json sum;
  sum["graphs"] = s.graphs;
  sum["skipped"] = s.skipped;
  sum["parse_errors"] = s.parse_errors;
  sum["verification_failures"] = s.verification_failures;
  sum["refutations"] = s.refutations;
  sum["conjecture1_exceptions"] = s.conjecture1_exceptions;
  sum["oracle_checked"] = s.oracle_checked;
  sum["edge_methods"] = s.edge_methods;
  sum["total_methods"] = s.total_methods;
  sum["max_edge_color"] = s.max_edge_color;
  sum["max_total_color"] = s.max_total_color;
  sum["exit_code"] = report.exit_code();
  sum["timing"] = {{"wall_ms", s.wall_ms}};
  out << json{{"summary", sum}}.dump() << '\n';
}

void write_csv(const RunReport& report, std::ostream& out) {
  out << "index,line,g6,n,a1,b1,a2,b2,edge_method,edge_max_color,total_method,total_max_color,gndi,tgndi,ok\n";
  for (const GraphRecord& rec : report.records) {
    // graph6 bytes never include ',' or '"', so no quoting is needed.
    out << rec.index << ',' << rec.line << ',' << rec.g6 << ',' << rec.n << ',' << rec.a1 << ',' << rec.b1 << ','
        << rec.a2 << ',' << rec.b2 << ',' << method_or_empty(rec.edge) << ',' << max_or_empty(rec.edge) << ','
        << method_or_empty(rec.total) << ',' << max_or_empty(rec.total) << ','
        << (rec.oracle ? value_or_empty(rec.oracle->gndi) : "") << ','
        << (rec.oracle ? value_or_empty(rec.oracle->tgndi) : "") << ','
        << (rec.failures.empty() && rec.refutations.empty() ? 1 : 0) << '\n';
  }
}

std::vector<std::string> generate_corpus(int n, int count, std::uint64_t seed, bool dedup) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "cubic graphs need an even vertex count, got " + std::to_string(n));
  std::vector<std::string> out;
  std::set<std::string> seen;
  const long long attempts = std::max<long long>(1000, 100LL * count);
  for (long long i = 0; i < attempts && static_cast<int>(out.size()) < count; ++i) {
    Graph g = random_cubic(n, splitmix64(seed + static_cast<std::uint64_t>(i)));
    if (!is_connected(g)) continue;
    if (dedup && !seen.insert(canonical_certificate(g)).second) continue;
    out.push_back(emit_graph6(g));
  }
  return out;
}

}  // namespace nsd
