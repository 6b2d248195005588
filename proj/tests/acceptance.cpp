// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nsd/bipartition.hpp"
#include "nsd/error.hpp"
#include "nsd/generate.hpp"
#include "nsd/graph6.hpp"
#include "nsd/isomorphism.hpp"
#include "nsd/nsd_edge.hpp"
#include "nsd/nsd_total.hpp"
#include "nsd/oracle.hpp"
#include "support.hpp"

using namespace nsd;
namespace ts = testsupport;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::vector<Graph> corpus(std::initializer_list<int> orders) {
  std::vector<Graph> out;
  for (int n : orders)
    for (Graph& g : enumerate_cubic(n)) out.push_back(std::move(g));
  return out;
}

std::string describe(const Graph& g) { return emit_graph6(g); }

Outcome edge_bound() {
  Outcome o;
  int count = 0;
  for (const Graph& g : corpus({4, 6, 8, 10})) {
    ++count;
    try {
      const auto s = solve_edge_coloring(g, 0);
      for (int c : s.coloring.colors)
        if (c < 1 || c > 4) o.fail(describe(g) + ": colour " + std::to_string(c));
      if (!ts::raw_distinguishing(g, ts::raw_sums(g, s.coloring.colors))) o.fail(describe(g) + ": sums clash");
    } catch (const std::exception& e) {
      o.fail(describe(g) + ": " + e.what());
    }
  }
  if (count != 27) o.fail("corpus has " + std::to_string(count) + " graphs, expected 27");
  if (o.pass) o.detail = std::to_string(count) + " graphs, all verified within {1,2,3,4}";
  return o;
}

Outcome total_bound() {
  Outcome o;
  int count = 0;
  int infeasible = 0;
  for (const Graph& g : corpus({4, 6, 8, 10})) {
    ++count;
    try {
      const auto s = solve_total_coloring(g, 0);
      for (int c : s.coloring.edge_colors)
        if (c != 1 && c != 2) o.fail(describe(g) + ": edge colour " + std::to_string(c));
      for (int c : s.coloring.vertex_colors)
        if (c != 1 && c != 2) o.fail(describe(g) + ": vertex colour " + std::to_string(c));
      if (!ts::raw_distinguishing(g, ts::raw_sums(g, s.coloring.edge_colors, s.coloring.vertex_colors)))
        o.fail(describe(g) + ": sums clash");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Infeasible2) ++infeasible;
      o.fail(describe(g) + ": " + e.what());
    } catch (const std::exception& e) {
      o.fail(describe(g) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " graphs, all verified within {1,2}, 0 Infeasible2";
  else o.detail += " (" + std::to_string(infeasible) + " Infeasible2)";
  return o;
}

Outcome degree_bound() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  const double probabilities[] = {0.1, 0.3, 0.5};
  int graphs = 0;
  int checks = 0;
  for (int trial = 0; trial < 504; ++trial) {
    const int n = 2 + trial % 29;
    const Graph g = ts::random_gnp(n, probabilities[trial % 3], rng);
    ++graphs;
    for (int m = 2; m <= 4 && m <= n; ++m) {
      const Partition p = max_mpartite_subgraph(g, m, static_cast<std::uint64_t>(trial));
      for (int v = 0; v < n; ++v) {
        int cross = 0;
        for (int w : g.neighbors(v)) cross += p.part[w] != p.part[v];
        const int need = (g.degree(v) * (m - 1) + m - 1) / m;
        ++checks;
        if (cross < need) o.fail("trial " + std::to_string(trial) + " m=" + std::to_string(m));
      }
    }
  }
  int cubic = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_cubic(4 + 2 * static_cast<int>(seed % 14), seed);
    const Partition p = max_mpartite_subgraph(g, 2, seed);
    std::vector<int> leftover(g.order(), 0);
    for (const Edge& e : g.edges()) {
      if (p.part[e.u] == p.part[e.v]) {
        ++leftover[e.u];
        ++leftover[e.v];
      }
    }
    for (int v = 0; v < g.order(); ++v)
      if (leftover[v] > 1) o.fail("cubic seed " + std::to_string(seed) + ": leftover is not a matching");
    ++cubic;
  }
  if (o.pass)
    o.detail = std::to_string(graphs) + " random graphs, " + std::to_string(checks) + " vertex checks, " +
               std::to_string(cubic) + " cubic leftovers are matchings";
  return o;
}

Outcome oracle_dominance() {
  Outcome o;
  int checked = 0;
  for (const Graph& g : corpus({4, 6, 8})) {
    const auto edge = solve_edge_coloring(g, 0);
    const auto total = solve_total_coloring(g, 0);
    const auto gndi = exact_gndi(g, 4);
    const auto tgndi = exact_tgndi(g, 3);
    if (gndi.status != ExactStatus::Feasible || tgndi.status != ExactStatus::Feasible) {
      o.fail(describe(g) + ": oracle undecided");
      continue;
    }
    if (*gndi.value > edge.max_color()) o.fail(describe(g) + ": gndi above constructive palette");
    if (*gndi.value > 3) o.fail(describe(g) + ": gndi = " + std::to_string(*gndi.value));
    if (*tgndi.value > 2) o.fail(describe(g) + ": tgndi = " + std::to_string(*tgndi.value));
    if (*tgndi.value > total.max_color()) o.fail(describe(g) + ": tgndi above constructive palette");
    ++checked;
  }
  const int k4 = ts::brute_force_min(complete_graph(4), 4, false);
  const int k2 = ts::brute_force_min(complete_graph(2), 3, true);
  if (k4 != 3) o.fail("brute force gndi(K4) = " + std::to_string(k4));
  if (k2 != 2) o.fail("brute force tgndi(K2) = " + std::to_string(k2));
  if (exact_gndi(complete_graph(4), 4).value != 3) o.fail("oracle gndi(K4) != 3");
  if (exact_tgndi(complete_graph(2), 3).value != 2) o.fail("oracle tgndi(K2) != 2");
  if (o.pass) o.detail = std::to_string(checked) + " graphs; gndi(K4)=3, tgndi(K2)=2";
  return o;
}

Outcome case_arithmetic() {
  Outcome o;
  const Graph k33 = complete_bipartite(3, 3);
  const Decomposition d = decompose(k33, max_mpartite_subgraph(k33, 2, 0));
  const auto total = constructive_total_coloring(k33, d);
  if (total.method != Method::Case1) o.fail("K33 total colouring not from case1");
  const auto t = ts::raw_sums(k33, total.coloring.edge_colors, total.coloring.vertex_colors);
  for (int v : d.vx)
    if (t[v] != 4) o.fail("K33: t(x) = " + std::to_string(t[v]));
  for (int v : d.vy)
    if (t[v] != 5) o.fail("K33: t(y) = " + std::to_string(t[v]));

  int fired = 0;
  for (const Graph& g : corpus({4, 6, 8, 10, 12})) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Decomposition dec = decompose(g, max_mpartite_subgraph(g, 2, seed));
      const auto s = constructive_edge_coloring(g, dec);
      if (s.dispatched != Method::Case2) continue;
      ++fired;
      if (s.method != Method::Case2) {
        o.fail(describe(g) + ": case2 needed repair");
        continue;
      }
      const Decomposition oriented = s.stats.swapped_sides ? dec.swapped() : dec;
      const auto sums = ts::raw_sums(g, s.coloring.colors);
      for (int v : oriented.vx)
        if (sums[v] != 3 && sums[v] != 5 && sums[v] != 7 && sums[v] != 9) o.fail(describe(g) + ": sigma(x) off");
      for (int v : oriented.vy)
        if (sums[v] != 4 && sums[v] != 6) o.fail(describe(g) + ": sigma(y) off");
    }
  }
  if (fired == 0) o.fail("case2 never fired on the corpus");
  if (o.pass) o.detail = "K33 t = 4 | 5; case2 fired " + std::to_string(fired) + " times with exact sigma sets";
  return o;
}

Outcome enumerator_counts() {
  Outcome o;
  const std::vector<std::pair<int, std::size_t>> expected{{4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}};
  std::ostringstream summary;
  for (auto [n, count] : expected) {
    EnumerationStats low_stats, high_stats;
    const auto low = enumerate_cubic(n, StubOrder::LowestFirst, low_stats);
    const auto high = enumerate_cubic(n, StubOrder::HighestFirst, high_stats);
    if (low.size() != count || high.size() != count)
      o.fail("n=" + std::to_string(n) + ": " + std::to_string(low.size()) + "/" + std::to_string(high.size()));
    std::set<std::string> a, b;
    for (const Graph& g : low) {
      a.insert(canonical_certificate(g));
      if (!is_cubic(g) || !is_connected(g)) o.fail("n=" + std::to_string(n) + ": bad representative");
    }
    for (const Graph& g : high) b.insert(canonical_certificate(g));
    if (a != b) o.fail("n=" + std::to_string(n) + ": orders disagree");
    if (a.size() != low.size()) o.fail("n=" + std::to_string(n) + ": isomorphic duplicates");
    summary << n << ':' << low.size() << ' ';
  }
  if (o.pass) o.detail = summary.str() + "under both orders";
  return o;
}

Outcome codec() {
  Outcome o;
  if (ts::reference_graph6(4, ts::pairs_of(complete_graph(4))) != "C~") o.fail("reference encoder disagrees on K4");
  if (emit_graph6(complete_graph(4)) != "C~") o.fail("K4 emitted as " + emit_graph6(complete_graph(4)));
  int round_trips = 0;
  for (const Graph& g : corpus({4, 6, 8, 10, 12})) {
    const std::string text = emit_graph6(g);
    if (parse_graph6(text) != g || text != ts::reference_graph6(g.order(), ts::pairs_of(g))) o.fail(text);
    ++round_trips;
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> order(0, 62);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = ts::random_gnp(order(rng), density(rng), rng);
    const std::string text = emit_graph6(g);
    if (parse_graph6(text) != g || text != ts::reference_graph6(g.order(), ts::pairs_of(g))) o.fail(text);
    ++round_trips;
  }
  if (o.pass) o.detail = std::to_string(round_trips) + " round trips; K4 -> C~";
  return o;
}

std::string run_tool(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  pclose(pipe);
  return out;
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("nsd_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto input = dir / "cubic10.g6";
  {
    std::ofstream f(input);
    for (const Graph& g : enumerate_cubic(10)) f << emit_graph6(g) << '\n';
  }
  const std::string command = std::string(NSDTOOL_PATH) + " solve --seed 7 --input " + input.string() + " 2>/dev/null";
  const std::regex timing(R"("timing":\{[^}]*\})");
  const std::string a = std::regex_replace(run_tool(command), timing, "");
  const std::string b = std::regex_replace(run_tool(command), timing, "");
  std::filesystem::remove_all(dir);
  const auto lines = std::count(a.begin(), a.end(), '\n');
  if (lines != 20) o.fail("expected 20 JSONL lines, got " + std::to_string(lines));
  if (a != b) o.fail("runs differ");
  if (o.pass) o.detail = std::to_string(lines) + " JSONL lines identical modulo timing";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "edge colouring within {1,2,3,4} on n=4..10", 60, edge_bound},
      {2, "total colouring within {1,2} on n=4..10", 120, total_bound},
      {3, "m-partite degree bound and matching leftover", 30, degree_bound},
      {4, "oracle dominance, gndi <= 3, tgndi <= 2 for n <= 8", 300, oracle_dominance},
      {5, "exact case arithmetic (K33 total, case2 sigma sets)", 60, case_arithmetic},
      {6, "enumerator counts 1,2,5,19,85 under two orders", 600, enumerator_counts},
      {7, "graph6 round trip and K4 -> C~", 60, codec},
      {8, "solve --seed 7 deterministic on n=10", 120, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) o.fail("took " + std::to_string(seconds) + " s");
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s | %s | %.2f s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
