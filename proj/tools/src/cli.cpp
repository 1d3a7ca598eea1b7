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

#include "tigris/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tigris/classification.hpp"
#include "tigris/config.hpp"
#include "tigris/engine.hpp"
#include "tigris/errors.hpp"
#include "tigris/event_log.hpp"
#include "tigris/fixtures.hpp"
#include "tigris/grouping.hpp"
#include "tigris/replay.hpp"
#include "tigris/sampling.hpp"
#include "tigris/sink.hpp"
#include "tigris/static_metrics.hpp"

namespace tigris::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

struct Options {
  std::string config_path;
  std::string input_path;
  std::string out_path;
  std::string fixture;
  std::optional<double> rate;
  std::optional<std::int64_t> delay;
  std::uint64_t seed = kDefaultFixtureSeed;
  std::string filter;
  std::optional<std::int64_t> until_ns;
};

std::string format_set(const std::set<std::string>& items) {
  std::string s = "{";
  bool first = true;
  for (const auto& i : items) {
    if (!first) s += ", ";
    s += i;
    first = false;
  }
  return s + "}";
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

void print_grouping(std::ostream& out, const GroupingTable& table) {
  for (const auto& [criterion, g] : table.criteria()) {
    out << criterion_token(criterion) << " (" << g.binding.metric.name()
        << ", " << direction_name(g.binding.direction) << "): "
        << banding_method_name(g.method);
    if (g.normality) {
      out << ", KS D=" << g.normality->statistic
          << " p=" << g.normality->p_value;
    }
    out << '\n';
    for (Modifier m : kAllModifiers) {
      const auto members = g.members(m);
      if (members.empty()) continue;
      out << "  " << std::left << std::setw(6) << modifier_name(m)
          << std::right;
      for (std::size_t i = 0; i < members.size(); ++i) {
        out << (i == 0 ? " " : ", ") << members[i];
      }
      out << '\n';
    }
  }
}

// --- replay --------------------------------------------------------------

MonitoringConfig resolve_config(const Options& o) {
  MonitoringConfig config;
  if (!o.config_path.empty()) {
    config = load_config(o.config_path);
  } else if (!o.fixture.empty()) {
    config = parse_config(fixture_config_text(o.fixture), process_environment());
  } else {
    throw ConfigError("", "--config is required unless --fixture is given");
  }
  if (o.rate) config.sampling_percentage = *o.rate;
  if (o.delay) config.analysis_fixed_delay_s = *o.delay;
  return config;
}

int cmd_replay(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.input_path.empty() == o.fixture.empty()) {
    err << "error: replay needs exactly one of --input or --fixture\n";
    return kExitUsage;
  }
  const MonitoringConfig config = resolve_config(o);
  // Validated up front so a bad override is reported as such.
  sampling_period(config.sampling_percentage);
  if (config.analysis_fixed_delay_s <= 0) {
    throw InvalidDelay("--delay must be positive");
  }

  const fs::path out_dir = o.out_path.empty() ? fs::path(".") : fs::path(o.out_path);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  EngineOptions eo;
  eo.on_warning = [&err](std::string_view msg) {
    err << "warning: " << msg << '\n';
  };
  Engine engine(config, std::move(eo));
  engine.add_sink(std::make_shared<FileSink>(out_dir / "traces.jsonl",
                                             out_dir / "cycles.jsonl"));

  ReplaySummary summary;
  if (!o.fixture.empty()) {
    summary = replay(engine, generate_fixture(o.fixture, o.seed));
  } else {
    EventLogReader reader{fs::path(o.input_path)};
    summary = replay(engine, reader);
  }
  engine.flush_sinks();
  if (summary.events_read == 0) err << "warning: the event log is empty\n";

  ordered_json j;
  j["events"] = summary.events_read;
  j["admitted"] = summary.admitted;
  j["dropped"] = summary.dropped;
  j["cycles"] = summary.cycles.size();
  j["sampling_rate"] = config.sampling_percentage;
  j["sampling_period"] = sampling_period(config.sampling_percentage);
  j["traces_emitted"] = summary.traces_emitted;
  ordered_json sizes = ordered_json::array();
  for (const auto& c : summary.cycles) sizes.push_back(c.relevance.selected.size());
  j["relevant_set_sizes"] = std::move(sizes);
  j["final_relevant"] = summary.final_relevant;
  ordered_json per_type = ordered_json::object();
  for (const auto& [type, s] : summary.per_type) {
    ordered_json t;
    t["relevant_occurrences"] = s.relevant_occurrences;
    t["traces"] = s.traces;
    t["sampled_fraction"] =
        s.relevant_occurrences == 0
            ? 0.0
            : static_cast<double>(s.traces) /
                  static_cast<double>(s.relevant_occurrences);
    per_type[type] = std::move(t);
  }
  j["per_type"] = std::move(per_type);
  write_text(out_dir / "summary.json", j.dump(2) + "\n");

  out << "events " << summary.events_read << ", admitted " << summary.admitted
      << ", dropped " << summary.dropped << ", cycles " << summary.cycles.size()
      << ", traces " << summary.traces_emitted << '\n';
  for (const auto& c : summary.cycles) {
    out << "cycle " << c.cycle_index << ": selected "
        << format_set(c.relevance.selected) << " added "
        << format_set(c.relevance.added) << " removed "
        << format_set(c.relevance.removed) << '\n';
  }
  out << "relevant: " << format_set(summary.final_relevant) << '\n';
  return kExitOk;
}

// --- filter-eval ---------------------------------------------------------

CriterionBinding binding_from_json(const json& b) {
  if (b.is_string()) return parse_binding(b.get<std::string>());
  if (!b.is_object()) {
    throw ConfigError("bindings", "each binding must be a string or object");
  }
  std::string text = b.at("criterion").get<std::string>() + ":" +
                     b.at("metric").get<std::string>();
  if (b.contains("direction")) text += ":" + b.at("direction").get<std::string>();
  return parse_binding(text);
}

struct SnapshotFile {
  MetricSnapshot snapshot;
  std::vector<CriterionBinding> bindings;
  GroupingOptions grouping;
  std::string filter;
};

SnapshotFile load_snapshot_file(const fs::path& path) {
  const std::string text = read_text(path);
  const json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ConfigError("snapshot", path.string() + " is not a JSON object");
  }
  SnapshotFile f;
  if (auto it = doc.find("bindings"); it != doc.end()) {
    for (const auto& b : *it) f.bindings.push_back(binding_from_json(b));
  }
  if (auto it = doc.find("sigma_k"); it != doc.end()) {
    f.grouping.sigma_k = it->get<double>();
  }
  if (auto it = doc.find("filter"); it != doc.end()) {
    f.filter = it->get<std::string>();
  }
  MetricSnapshot::Rows rows;
  const auto values = doc.find("values");
  if (values == doc.end() || !values->is_object()) {
    throw ConfigError("values", "snapshot needs a \"values\" object");
  }
  for (const auto& [type, metrics] : values->items()) {
    auto& row = rows[type];
    for (const auto& [name, v] : metrics.items()) {
      if (!v.is_number()) {
        throw ConfigError("values", type + "/" + name + " is not a number");
      }
      row[MetricKind::parse(name)] = v.get<double>();
    }
  }
  f.snapshot = MetricSnapshot(0, std::move(rows));
  return f;
}

int cmd_filter_eval(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.input_path.empty()) {
    err << "error: filter-eval needs --input <snapshot.json>\n";
    return kExitUsage;
  }
  SnapshotFile f = load_snapshot_file(o.input_path);
  if (!o.config_path.empty()) {
    const MonitoringConfig config = load_config(o.config_path);
    f.bindings = config.bindings;
    f.grouping = config.grouping_options();
    if (f.filter.empty()) f.filter = config.criteria;
  }
  const std::string text = o.filter.empty() ? f.filter : o.filter;
  if (text.empty()) {
    err << "error: no filter given\n";
    return kExitUsage;
  }

  FilterExpr expr = FilterExpr::leaf(Modifier::Base, Criterion::Frequency);
  try {
    expr = parse_filter(text);
  } catch (const SyntaxError& e) {
    err << "syntax error at offset " << e.position() << ": " << e.what()
        << '\n'
        << "  " << text << '\n'
        << "  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  }

  const GroupingTable table = group_for(expr, f.snapshot, f.bindings, f.grouping);
  print_grouping(out, table);
  out << "filter: " << to_string(expr, OperatorStyle::Unicode) << '\n';
  out << "relevant: " << format_set(evaluate_filter(expr, table)) << '\n';
  return kExitOk;
}

// --- inspect -------------------------------------------------------------

int cmd_inspect(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.input_path.empty() == o.fixture.empty()) {
    err << "error: inspect needs exactly one of --input or --fixture\n";
    return kExitUsage;
  }
  std::optional<MonitoringConfig> config;
  if (!o.config_path.empty()) config = load_config(o.config_path);

  RegistryOptions ro;
  ro.on_warning = [&err](std::string_view msg) {
    err << "warning: " << msg << '\n';
  };
  if (config) {
    ro.session_cap = config->session_cap;
    for (const auto& m : config->required_metrics()) {
      if (m.id() == MetricId::StaticMetric) ro.metrics.push_back(m);
    }
    if (config->static_metric_file) {
      ro.static_metrics = std::make_shared<const StaticMetricTable>(
          load_static_metrics(*config->static_metric_file));
    }
  }
  StatsRegistry registry(ro);

  auto take = [&](const EventRecord& e) {
    if (o.until_ns && e.timestamp_ns >= *o.until_ns) return false;
    if (!config || admit_event(*config, e.event_type_id)) registry.record_event(e);
    return true;
  };
  if (!o.fixture.empty()) {
    for (const auto& e : generate_fixture(o.fixture, o.seed)) {
      if (!take(e)) break;
    }
  } else {
    EventLogReader reader{fs::path(o.input_path)};
    while (auto e = reader.next()) {
      if (!take(*e)) break;
    }
  }
  if (registry.event_type_count() == 0) {
    err << "warning: no events recorded\n";
    return kExitOk;
  }
  const MetricSnapshot snap = registry.snapshot();

  ordered_json values = ordered_json::object();
  for (const auto& [type, row] : snap.rows()) {
    out << type << '\n';
    ordered_json jrow = ordered_json::object();
    for (const auto& [metric, v] : row) {
      out << "  " << std::left << std::setw(22) << metric.name() << std::right
          << ' ' << v << '\n';
      jrow[metric.name()] = v;
    }
    values[type] = std::move(jrow);
  }

  if (config) {
    const GroupingTable table =
        group(snap, config->bindings, config->grouping_options());
    out << '\n';
    print_grouping(out, table);
    out << "relevant: " << format_set(evaluate_filter(config->filter, table))
        << '\n';
  }

  if (!o.out_path.empty()) {
    ordered_json j;
    if (config) {
      j["filter"] = config->criteria;
      ordered_json b = ordered_json::array();
      for (const auto& binding : config->bindings) b.push_back(format_binding(binding));
      j["bindings"] = std::move(b);
      j["sigma_k"] = config->sigma_k;
    }
    j["values"] = std::move(values);
    write_text(o.out_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

// --- gen-fixture ---------------------------------------------------------

int cmd_gen_fixture(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.fixture.empty()) {
    err << "error: gen-fixture needs --fixture <name>\n";
    return kExitUsage;
  }
  const auto events = generate_fixture(o.fixture, o.seed);
  if (o.out_path.empty()) {
    write_event_log(out, events);
  } else {
    write_event_log(fs::path(o.out_path), events);
    err << "wrote " << events.size() << " events to " << o.out_path << '\n';
  }
  if (!o.config_path.empty()) write_text(o.config_path, fixture_config_text(o.fixture));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tigris: two-phase adaptive monitoring over event logs"};
  app.require_subcommand(1, 1);
  Options o;

  auto* replay_cmd = app.add_subcommand(
      "replay", "Run the engine over an event log and write traces, cycle "
                "reports and a summary");
  replay_cmd->add_option("--config", o.config_path, "Monitoring config file");
  replay_cmd->add_option("--input", o.input_path, "Event log (.jsonl)");
  replay_cmd->add_option("--fixture", o.fixture, "Replay a generated fixture");
  replay_cmd->add_option("--out", o.out_path, "Output directory");
  replay_cmd->add_option("--rate", o.rate, "Override samplingPercentage");
  replay_cmd->add_option("--delay", o.delay, "Override analysisFixedDelay (s)");
  replay_cmd->add_option("--seed", o.seed, "Fixture seed");

  auto* eval_cmd = app.add_subcommand(
      "filter-eval", "Group a metric snapshot and evaluate a filter over it");
  eval_cmd->add_option("filter", o.filter, "Filter expression");
  eval_cmd->add_option("--input", o.input_path, "Snapshot JSON")->required();
  eval_cmd->add_option("--config", o.config_path,
                       "Take bindings (and the filter) from a config");

  auto* inspect_cmd = app.add_subcommand(
      "inspect", "Print the coarse metrics of an event log");
  inspect_cmd->add_option("--input", o.input_path, "Event log (.jsonl)");
  inspect_cmd->add_option("--fixture", o.fixture, "Inspect a generated fixture");
  inspect_cmd->add_option("--config", o.config_path, "Also group and classify");
  inspect_cmd->add_option("--out", o.out_path, "Write a snapshot JSON file");
  inspect_cmd->add_option("--until", o.until_ns,
                          "Only events with timestamp_ns below this value");
  inspect_cmd->add_option("--seed", o.seed, "Fixture seed");

  auto* gen_cmd = app.add_subcommand("gen-fixture", "Write a bundled event log");
  gen_cmd->add_option("--fixture", o.fixture,
                      "running-example[:n], workload-shift or uniform[:n]")
      ->required();
  gen_cmd->add_option("--out", o.out_path, "Output file (default stdout)");
  gen_cmd->add_option("--seed", o.seed, "Random seed");
  gen_cmd->add_option("--config", o.config_path,
                      "Also write the matching config here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (replay_cmd->parsed()) return cmd_replay(o, out, err);
    if (eval_cmd->parsed()) return cmd_filter_eval(o, out, err);
    if (inspect_cmd->parsed()) return cmd_inspect(o, out, err);
    return cmd_gen_fixture(o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed snapshot: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace tigris::cli
