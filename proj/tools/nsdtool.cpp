#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "nsd/error.hpp"
#include "nsd/generate.hpp"
#include "nsd/graph6.hpp"
#include "nsd/harness.hpp"
#include "nsd/oracle.hpp"

namespace {

// Opens `path` for writing, or hands back std::cout for "-" and "".
std::ostream& output(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path);
  if (!*holder) throw std::runtime_error("cannot open " + path + " for writing");
  return *holder;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighbour-sum-distinguishing colourings of cubic graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  std::string mode = "both";
  std::string emit = "jsonl";
  bool oracle = false;
  int oracle_max_n = 0;
  long long oracle_cap = nsd::kDefaultOracleNodeCap;
  std::uint64_t seed = 0;
  bool strict = false;
  bool fail_fast = false;
  int jobs = 1;

  auto* solve = app.add_subcommand("solve", "Colour every connected cubic graph in a graph6 stream");
  solve->add_option("--input,-i", input, "graph6 file, '-' for stdin")->capture_default_str();
  solve->add_option("--mode", mode, "edge, total or both")
      ->check(CLI::IsMember({"edge", "total", "both"}))
      ->capture_default_str();
  solve->add_flag("--oracle", oracle, "Cross-check with exact search on graphs with n <= 8");
  solve->add_option("--oracle-max-n", oracle_max_n, "Cross-check with exact search on graphs with n <= K")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--oracle-node-cap", oracle_cap, "Node budget for each exact search")->capture_default_str();
  solve->add_option("--seed", seed, "Seed for the bipartition local search")->capture_default_str();
  solve->add_option("--emit", emit, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  solve->add_option("--out,-o", out_path, "Output file, stdout by default");
  solve->add_flag("--strict", strict, "Non-zero exit on parse errors or skipped graphs as well");
  solve->add_flag("--fail-fast", fail_fast, "Stop at the first failure");
  solve->add_option("--jobs,-j", jobs, "Worker threads, 0 for hardware concurrency")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  int gen_n = 10;
  int gen_count = 10;
  bool dedup = false;
  auto* gen = app.add_subcommand("gen", "Random connected cubic graphs from the configuration model");
  gen->add_option("--n", gen_n, "Vertex count (even)")->required();
  gen->add_option("--count", gen_count, "Number of graphs")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--seed", seed, "Base seed")->capture_default_str();
  gen->add_flag("--dedup", dedup, "Drop isomorphic repeats");
  gen->add_option("--out,-o", out_path, "Output file, stdout by default");

  int enum_n = 8;
  auto* enumerate = app.add_subcommand("enum", "All connected cubic graphs on n <= 12 vertices, up to isomorphism");
  enumerate->add_option("--n", enum_n, "Vertex count in {4, 6, 8, 10, 12}")->required();
  enumerate->add_option("--out,-o", out_path, "Output file, stdout by default");

  CLI11_PARSE(app, argc, argv);

  try {
    std::unique_ptr<std::ofstream> holder;
    if (*solve) {
      nsd::RunOptions options;
      options.mode = mode == "edge" ? nsd::RunMode::Edge : mode == "total" ? nsd::RunMode::Total : nsd::RunMode::Both;
      options.seed = seed;
      options.oracle_max_n = oracle_max_n > 0 ? oracle_max_n : (oracle ? 8 : 0);
      options.oracle_node_cap = oracle_cap;
      options.strict = strict;
      options.fail_fast = fail_fast;
      options.jobs = jobs == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : jobs;

      nsd::RunReport report;
      if (input == "-") {
        report = nsd::run_corpus(std::cin, options, std::cerr);
      } else {
        std::ifstream in(input);
        if (!in) {
          std::cerr << "cannot open " << input << '\n';
          return 2;
        }
        report = nsd::run_corpus(in, options, std::cerr);
      }
      std::ostream& out = output(out_path, holder);
      if (emit == "csv") {
        nsd::write_csv(report, out);
      } else {
        nsd::write_jsonl(report, out);
      }
      const auto& s = report.summary;
      std::cerr << s.graphs << " graphs, " << s.skipped << " skipped, " << s.parse_errors << " parse errors, "
                << s.verification_failures << " failures, " << s.refutations << " refutations\n";
      return report.exit_code();
    }
    if (*gen) {
      std::ostream& out = output(out_path, holder);
      for (const auto& line : nsd::generate_corpus(gen_n, gen_count, seed, dedup)) out << line << '\n';
      return 0;
    }
    if (*enumerate) {
      std::ostream& out = output(out_path, holder);
      for (const auto& g : nsd::enumerate_cubic(enum_n)) out << nsd::emit_graph6(g) << '\n';
      return 0;
    }
  } catch (const nsd::Error& e) {
    std::cerr << "error (" << nsd::to_string(e.code()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
