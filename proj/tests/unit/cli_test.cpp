// Copyright 2026 The Tigris Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "support.hpp"
#include "tigris/classification.hpp"
#include "tigris/cli.hpp"
#include "tigris/config.hpp"
#include "tigris/fixtures.hpp"

namespace tigris {
namespace {

using namespace tigris::testing;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tigris");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

TEST(Cli, GenerateThenReplayRunningExample) {
  TempDir dir;
  const auto log = (dir / "log.jsonl").string();
  const auto conf = (dir / "example.conf").string();
  ASSERT_EQ(run_cli({"gen-fixture", "--fixture", "running-example", "--out", log,
                     "--config", conf}).code,
            cli::kExitOk);
  const Result r = run_cli({"replay", "--config", conf, "--input", log, "--out",
                            (dir / "half").string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("relevant: {ClinicService.findVets()}"), std::string::npos)
      << r.out;
  const auto half = read_json(dir / "half" / "summary.json");
  EXPECT_EQ(half.at("final_relevant"),
            nlohmann::json::array({"ClinicService.findVets()"}));

  ASSERT_EQ(run_cli({"replay", "--config", conf, "--input", log, "--rate", "1.0",
                     "--out", (dir / "full").string()}).code,
            cli::kExitOk);
  const auto full = read_json(dir / "full" / "summary.json");
  EXPECT_EQ(full.at("traces_emitted").get<int>(),
            2 * half.at("traces_emitted").get<int>());

  std::ifstream traces(dir / "half" / "traces.jsonl");
  std::size_t lines = 0;
  for (std::string l; std::getline(traces, l);) {
    const auto j = nlohmann::json::parse(l);
    EXPECT_EQ(j.at("occurrence_index").get<int>() % 2, 0);
    ++lines;
  }
  EXPECT_EQ(lines, half.at("traces_emitted").get<std::size_t>());
}

TEST(Cli, EmptyLogWarnsAndSucceeds) {
  TempDir dir;
  { std::ofstream(dir / "empty.jsonl"); }
  const Result r = run_cli({"replay", "--fixture", "uniform:1", "--out",
                            (dir / "o").string()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const Result e = run_cli({"replay", "--config",
                            TIGRIS_CONFIG_DIR "/running_example.conf",
                            "--input", (dir / "empty.jsonl").string(), "--out",
                            (dir / "o").string()});
  EXPECT_EQ(e.code, cli::kExitOk) << e.err;
  EXPECT_NE(e.err.find("empty"), std::string::npos);
}

TEST(Cli, SyntaxErrorShowsCaret) {
  TempDir dir;
  { std::ofstream(dir / "s.json") << R"({"values": {}})"; }
  const Result r = run_cli({"filter-eval", "more frequent U U expensive", "--input",
                            (dir / "s.json").string()});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find(std::string(18, ' ') + "^"), std::string::npos) << r.err;
}

TEST(Cli, ErrorExitCodes) {
  TempDir dir;
  EXPECT_EQ(run_cli({"gen-fixture", "--fixture", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"replay", "--config", (dir / "missing.conf").string(),
                     "--fixture", "uniform:5"}).code,
            cli::kExitIo);
  EXPECT_EQ(run_cli({"no-such-command"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"gen-fixture", "--fixture", "uniform:3", "--out",
                     "/nonexistent-dir/x.jsonl"}).code,
            cli::kExitIo);
}

TEST(Cli, FilterEvalMatchesBruteForce) {
  // Thirty types with random values for the four bound metrics.
  TempDir dir;
  Rng rng(5);
  nlohmann::json values = nlohmann::json::object();
  MetricSnapshot::Rows rows;
  const std::vector<std::pair<std::string, MetricKind>> metrics{
      {"COMPUTATION_PATTERN", MetricKind::builtin(MetricId::ComputationPattern)},
      {"INVOCATION_FREQUENCY", MetricKind::builtin(MetricId::InvocationFrequency)},
      {"USER_BEHAVIOR", MetricKind::builtin(MetricId::UserBehavior)},
      {"EXECUTION_TIME", MetricKind::builtin(MetricId::ExecutionTime)}};
  for (int t = 0; t < 30; ++t) {
    const std::string type = "svc.T" + std::to_string(t) + "()";
    for (const auto& [name, kind] : metrics) {
      const double v = static_cast<double>(1 + rng() % 1000);
      values[type][name] = v;
      rows[type][kind] = v;
    }
  }
  const std::string filter =
      "less changeable & more frequent & (more usage-pattern U (more expensive "
      "& less usage-pattern))";
  const std::vector<std::string> bindings{
      "changeable:COMPUTATION_PATTERN", "frequent:INVOCATION_FREQUENCY",
      "usage-pattern:USER_BEHAVIOR", "expensive:EXECUTION_TIME"};
  { std::ofstream(dir / "s.json") << nlohmann::json{{"bindings", bindings},
                                                     {"values", values}}.dump(); }
  const Result r = run_cli({"filter-eval", filter, "--input", (dir / "s.json").string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;

  std::vector<CriterionBinding> parsed;
  for (const auto& b : bindings) parsed.push_back(parse_binding(b));
  const FilterExpr expr = parse_filter(filter);
  const MetricSnapshot snapshot(0, rows);
  const GroupingTable table = group_for(expr, snapshot, parsed);
  std::vector<std::string> universe;
  for (const auto& [type, row] : rows) universe.push_back(type);
  std::string want = "relevant: {";
  bool first = true;
  for (const auto& t : reference_evaluate(expr, table, universe)) {
    want += (first ? "" : ", ") + t;
    first = false;
  }
  want += "}";
  EXPECT_NE(r.out.find(want), std::string::npos) << r.out << "\nwant " << want;
}

}  // namespace
}  // namespace tigris
