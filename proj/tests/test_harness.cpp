#include <gtest/gtest.h>

#include <algorithm>
#include <regex>
#include <sstream>

#include "nsd/error.hpp"
#include "nsd/generate.hpp"
#include "nsd/graph6.hpp"
#include "nsd/harness.hpp"

using namespace nsd;

namespace {

RunReport run(const std::string& text, RunOptions options, std::string* log_out = nullptr) {
  std::istringstream in(text);
  std::ostringstream log;
  RunReport r = run_corpus(in, options, log);
  if (log_out) *log_out = log.str();
  return r;
}

std::string strip_timing(const std::string& jsonl) {
  return std::regex_replace(jsonl, std::regex(R"("timing":\{[^}]*\})"), "\"timing\":{}");
}

}  // namespace

TEST(Harness, EmptyInput) {
  const RunReport r = run("", {});
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.exit_code(), 0);
  std::ostringstream out;
  write_jsonl(r, out);
  EXPECT_NE(out.str().find("\"summary\""), std::string::npos);
}

TEST(Harness, ParseErrorIsLoggedWithLineNumber) {
  std::string log;
  RunOptions options;
  const RunReport r = run("C~\n!!\n", options, &log);
  EXPECT_EQ(r.summary.graphs, 1);
  EXPECT_EQ(r.summary.parse_errors, 1);
  EXPECT_NE(log.find("line 2"), std::string::npos);
  EXPECT_EQ(r.exit_code(), 0);
  options.strict = true;
  EXPECT_EQ(run("C~\n!!\n", options).exit_code(), 1);
}

TEST(Harness, SkipsNonCubic) {
  std::string log;
  const RunReport r = run("Cl\n", {}, &log);
  EXPECT_EQ(r.summary.skipped, 1);
  EXPECT_NE(log.find("not cubic"), std::string::npos);
}

TEST(Harness, SmallStreamWithOracle) {
  RunOptions options;
  options.oracle_max_n = 8;
  const RunReport r = run(">>graph6<<C~\nEFz_\n\nE{Sw\n", options);
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].line, 1);
  EXPECT_EQ(r.records[2].line, 4);
  for (const GraphRecord& rec : r.records) {
    ASSERT_TRUE(rec.edge && rec.total && rec.oracle);
    EXPECT_TRUE(rec.edge->verified);
    EXPECT_TRUE(rec.total->verified);
    EXPECT_TRUE(rec.failures.empty());
    EXPECT_TRUE(rec.refutations.empty());
  }
  EXPECT_EQ(*r.records[0].oracle->gndi, 3);
  EXPECT_EQ(r.summary.oracle_checked, 3);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Harness, ModeSelectsSolvers) {
  RunOptions options;
  options.mode = RunMode::Total;
  const RunReport r = run("C~\n", options);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_FALSE(r.records[0].edge.has_value());
  EXPECT_TRUE(r.records[0].total.has_value());
}

TEST(Harness, DeterministicAndThreadIndependent) {
  std::string corpus;
  for (const Graph& g : enumerate_cubic(10)) corpus += emit_graph6(g) + "\n";
  RunOptions options;
  options.seed = 7;
  std::ostringstream a, b;
  write_jsonl(run(corpus, options), a);
  options.jobs = 4;
  write_jsonl(run(corpus, options), b);
  EXPECT_EQ(strip_timing(a.str()), strip_timing(b.str()));
}

TEST(Harness, CsvHasHeaderAndRows) {
  std::ostringstream out;
  write_csv(run("C~\nE{Sw\n", {}), out);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("index,", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST(Generate, DedupExhaustsSmallClasses) {
  EXPECT_EQ(generate_corpus(4, 5, 1, true).size(), 1u);
  EXPECT_LE(generate_corpus(6, 100, 1, true).size(), 2u);
  EXPECT_EQ(generate_corpus(12, 10, 3, false).size(), 10u);
  EXPECT_EQ(generate_corpus(12, 10, 3, false), generate_corpus(12, 10, 3, false));
}

TEST(Generate, OddN) {
  try {
    generate_corpus(9, 1, 0, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddN);
  }
}
