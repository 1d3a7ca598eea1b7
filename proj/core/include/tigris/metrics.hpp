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

// Coarse-grained phase: one cheap estimator per configured metric per event
// type, updated on every admitted event.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tigris/online_stats.hpp"
#include "tigris/static_metrics.hpp"

namespace tigris {

/// One observed execution of an event type.
struct EventRecord {
  std::string event_type_id;
  std::int64_t timestamp_ns = 0;
  std::int64_t duration_ns = 0;
  std::uint64_t return_size_bytes = 0;
  std::uint64_t input_digest = 0;
  std::uint32_t active_threads = 1;
  std::optional<std::string> session_id;
  bool raised_error = false;
  std::optional<std::uint64_t> memory_bytes;
  std::optional<double> energy_estimate;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// Throws InvalidEvent when a record breaks the field invariants.
void validate(const EventRecord& event);

enum class MetricId : std::uint8_t {
  ConcurrencyLevel,
  ComputationPattern,
  EnergyConsumption,
  ErrorLevel,
  ExecutionTime,
  InterArrivalTime,
  InvocationFrequency,
  MemoryConsumption,
  UserBehavior,
  StaticMetric,
};

enum class EstimatorShape : std::uint8_t {
  Counter,
  OnlineMean,
  OnlineStddev,
  DistinctCount,
  StaticLookup,
};

class MetricKind {
 public:
  MetricKind() = default;
  /// Built-in metric; `id` must not be StaticMetric.
  static MetricKind builtin(MetricId id);
  static MetricKind static_metric(std::string name);
  /// Accepts "INVOCATION_FREQUENCY", "Metrics.EXECUTION_TIME",
  /// "STATIC(cyclomatic)" (case-insensitive). Throws UnknownMetricBinding.
  static MetricKind parse(std::string_view text);

  MetricId id() const noexcept { return id_; }
  const std::string& static_name() const noexcept { return static_name_; }
  EstimatorShape shape() const noexcept;
  /// Canonical spelling accepted by parse().
  std::string name() const;

  friend auto operator<=>(const MetricKind&, const MetricKind&) = default;
  friend bool operator==(const MetricKind&, const MetricKind&) = default;

 private:
  MetricId id_ = MetricId::InvocationFrequency;
  std::string static_name_;
};

/// Every built-in (non-static) metric.
std::vector<MetricKind> builtin_metrics();

/// Raw estimator state for one event type.
struct EventTypeStats {
  std::string event_type_id;
  std::uint64_t invocations = 0;
  std::uint64_t errors = 0;
  OnlineStats execution_time;
  OnlineStats return_size;
  OnlineStats concurrency;
  OnlineStats inter_arrival;
  OnlineStats memory;
  OnlineStats energy;
  std::optional<std::int64_t> last_timestamp_ns;
  std::unordered_set<std::string> sessions;
  bool sessions_saturated = false;
};

/// Point-in-time scalar per (event type, metric). Immutable once built.
class MetricSnapshot {
 public:
  using Row = std::map<MetricKind, double>;
  using Rows = std::map<std::string, Row, std::less<>>;

  MetricSnapshot() = default;
  MetricSnapshot(std::int64_t taken_at_ns, Rows rows)
      : taken_at_ns_(taken_at_ns), rows_(std::move(rows)) {}

  std::int64_t taken_at_ns() const noexcept { return taken_at_ns_; }
  const Rows& rows() const noexcept { return rows_; }
  std::size_t event_type_count() const noexcept { return rows_.size(); }

  std::optional<double> value(std::string_view event_type,
                              const MetricKind& metric) const;
  /// Event types that have a defined value for `metric`.
  std::map<std::string, double> column(const MetricKind& metric) const;

  friend bool operator==(const MetricSnapshot&,
                         const MetricSnapshot&) = default;

 private:
  std::int64_t taken_at_ns_ = 0;
  Rows rows_;
};

struct RegistryOptions {
  /// Metrics reported by snapshot(). Invocation and error counters are always
  /// maintained.
  std::vector<MetricKind> metrics = builtin_metrics();
  /// Distinct sessions remembered per event type before UserBehavior
  /// saturates.
  std::size_t session_cap = 100000;
  std::shared_ptr<const StaticMetricTable> static_metrics;
  /// Called once per event type when its session set saturates.
  std::function<void(std::string_view)> on_warning;
};

/// Thread-safe registry of per-type estimators. record_event may be called
/// from any number of threads; updates to one event type are serialized by a
/// per-type lock, and snapshot() copies each type under that lock, so every
/// type is observed at some prefix of its update sequence.
class StatsRegistry {
 public:
  explicit StatsRegistry(RegistryOptions options = {});
  StatsRegistry(const StatsRegistry&) = delete;
  StatsRegistry& operator=(const StatsRegistry&) = delete;

  /// Throws InvalidEvent.
  void record_event(const EventRecord& event);

  /// Throws EmptyRegistry if nothing has been recorded.
  MetricSnapshot snapshot(std::int64_t taken_at_ns = 0) const;

  std::size_t event_type_count() const;
  std::uint64_t total_events() const;
  std::optional<EventTypeStats> stats_for(std::string_view event_type) const;
  const RegistryOptions& options() const noexcept { return options_; }

 private:
  struct Slot {
    mutable std::mutex mu;
    EventTypeStats stats;
  };
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  Slot& slot_for(const std::string& event_type);
  void update(EventTypeStats& stats, const EventRecord& event);
  MetricSnapshot::Row summarize(const EventTypeStats& stats) const;

  RegistryOptions options_;
  std::uint32_t enabled_mask_ = 0;
  mutable std::shared_mutex map_mu_;
  std::unordered_map<std::string, std::unique_ptr<Slot>, StringHash,
                     std::equal_to<>>
      slots_;
};

}  // namespace tigris
