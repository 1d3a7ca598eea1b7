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

#pragma once

// Two-phase monitoring engine.
//
// Every admitted event updates the coarse estimators. Periodically an
// analysis cycle snapshots them, groups event types into bands per
// criterion, evaluates the relevance filter and publishes the resulting
// relevance set. Occurrences of relevant types are then sampled
// systematically into detailed traces.
//
// Producers may call on_event() from any number of threads. The relevance
// set is published as an immutable object; a producer either sees the old
// set or the new one, never a mix.

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stop_token>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tigris/classification.hpp"
#include "tigris/config.hpp"
#include "tigris/metrics.hpp"
#include "tigris/report.hpp"
#include "tigris/sink.hpp"

namespace tigris {

struct EngineOptions {
  LeafSemantics leaf_semantics = LeafSemantics::Cumulative;
  std::size_t min_normal_sample = GroupingOptions{}.min_normal_sample;
  /// Receives non-fatal diagnostics (session-cap saturation, failed live
  /// cycles). May be called from producer threads.
  std::function<void(std::string_view)> on_warning;
};

class Engine {
 public:
  struct TypeSamplingStats {
    /// Occurrences observed while the type was relevant.
    std::uint64_t relevant_occurrences = 0;
    std::uint64_t traces = 0;
  };

  /// Loads config.static_metric_file when set (IoError, MalformedCsv,
  /// DuplicateKey).
  explicit Engine(MonitoringConfig config, EngineOptions options = {});
  Engine(MonitoringConfig config,
         std::shared_ptr<const StaticMetricTable> static_metrics,
         EngineOptions options = {});
  ~Engine();

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  /// Coarse update for every admitted event; a trace when the type is
  /// relevant and the sampler picks this occurrence. Non-admitted events
  /// only bump the drop counter. Throws InvalidEvent.
  std::optional<TraceEntry> on_event(const EventRecord& event);

  /// snapshot -> group -> classify -> publish. With nothing recorded yet the
  /// cycle is a no-op and the report has `empty` set.
  CycleReport run_cycle(std::int64_t now_ns);

  /// Throws InvalidRate. Applies to the next sampling decision.
  void set_sampling_rate(double rate);
  /// Throws InvalidDelay for non-positive values.
  void set_analysis_delay(std::int64_t seconds);
  double sampling_rate() const noexcept { return rate_.load(); }
  std::int64_t analysis_delay_s() const noexcept { return delay_s_.load(); }

  bool admits(std::string_view event_type) const noexcept;
  bool is_relevant(std::string_view event_type) const;
  RelevanceSet relevance() const;
  std::uint64_t cycles_run() const;

  std::uint64_t admitted_events() const noexcept { return admitted_.load(); }
  std::uint64_t dropped_events() const noexcept { return dropped_.load(); }
  std::uint64_t traces_emitted() const noexcept { return traces_total_.load(); }
  std::map<std::string, TypeSamplingStats> sampling_stats() const;

  const StatsRegistry& registry() const noexcept { return registry_; }
  const MonitoringConfig& config() const noexcept { return config_; }

  void add_sink(std::shared_ptr<TraceSink> sink);
  void flush_sinks();

  /// Live mode: run a cycle every analysis_delay_s() of wall-clock time on a
  /// background thread until stop() or destruction.
  void start(std::function<void(const CycleReport&)> on_cycle = {});
  void stop();
  bool running() const noexcept { return worker_.joinable(); }

 private:
  struct Totals {
    std::mutex mu;
    std::map<std::string, TypeSamplingStats> by_type;
  };
  struct TypeCounters;
  struct RelevanceState;

  std::shared_ptr<const RelevanceState> current_state() const;
  std::shared_ptr<TypeCounters> make_counters(const std::string& type);
  void emit(const TraceEntry& entry);
  void scheduler_loop(std::stop_token stop,
                      std::function<void(const CycleReport&)> on_cycle);
  void warn(std::string_view message) const;

  MonitoringConfig config_;
  EngineOptions options_;
  ScanScope scope_;
  std::shared_ptr<Totals> totals_;
  StatsRegistry registry_;

  std::atomic<double> rate_;
  std::atomic<std::uint64_t> period_;
  std::atomic<std::int64_t> delay_s_;

  std::atomic<std::uint64_t> admitted_{0};
  std::atomic<std::uint64_t> dropped_{0};
  std::atomic<std::uint64_t> traces_total_{0};
  std::atomic<std::uint64_t> traces_since_cycle_{0};

  // Read with std::atomic_load, replaced with std::atomic_store.
  std::shared_ptr<const RelevanceState> state_;
  std::mutex cycle_mu_;

  std::mutex sinks_mu_;
  std::vector<std::shared_ptr<TraceSink>> sinks_;

  std::mutex schedule_mu_;
  std::condition_variable_any schedule_cv_;
  std::jthread worker_;
};

}  // namespace tigris
