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

#include "tigris/metrics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "tigris/errors.hpp"

namespace tigris {
namespace {

struct MetricNameEntry {
  MetricId id;
  std::string_view name;
};

constexpr std::array<MetricNameEntry, 9> kBuiltinNames = {{
    {MetricId::ConcurrencyLevel, "CONCURRENCY_LEVEL"},
    {MetricId::ComputationPattern, "COMPUTATION_PATTERN"},
    {MetricId::EnergyConsumption, "ENERGY_CONSUMPTION"},
    {MetricId::ErrorLevel, "ERROR_LEVEL"},
    {MetricId::ExecutionTime, "EXECUTION_TIME"},
    {MetricId::InterArrivalTime, "INTER_ARRIVAL_TIME"},
    {MetricId::InvocationFrequency, "INVOCATION_FREQUENCY"},
    {MetricId::MemoryConsumption, "MEMORY_CONSUMPTION"},
    {MetricId::UserBehavior, "USER_BEHAVIOR"},
}};

constexpr std::uint32_t bit(MetricId id) {
  return 1u << static_cast<unsigned>(id);
}

std::string uppercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

}  // namespace

void validate(const EventRecord& event) {
  if (event.event_type_id.empty()) {
    throw InvalidEvent("event_type_id must be non-empty");
  }
  if (event.duration_ns < 0) {
    throw InvalidEvent("duration_ns must be >= 0 for " + event.event_type_id);
  }
  if (event.active_threads < 1) {
    throw InvalidEvent("active_threads must be >= 1 for " +
                       event.event_type_id);
  }
  if (event.energy_estimate &&
      (!std::isfinite(*event.energy_estimate) || *event.energy_estimate < 0)) {
    throw InvalidEvent("energy_estimate must be a finite non-negative number");
  }
}

// ---------------------------------------------------------------------------
// MetricKind

MetricKind MetricKind::builtin(MetricId id) {
  if (id == MetricId::StaticMetric) {
    throw UnknownMetricBinding("a static metric needs a name");
  }
  MetricKind k;
  k.id_ = id;
  return k;
}

MetricKind MetricKind::static_metric(std::string name) {
  if (name.empty()) throw UnknownMetricBinding("empty static metric name");
  MetricKind k;
  k.id_ = MetricId::StaticMetric;
  k.static_name_ = std::move(name);
  return k;
}

MetricKind MetricKind::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
    t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
    t.remove_suffix(1);
  std::string upper = uppercase(t);
  if (upper.starts_with("METRICS.")) {
    t.remove_prefix(8);
    upper.erase(0, 8);
  }
  if (upper.starts_with("STATIC(") && upper.ends_with(")")) {
    std::string name(t.substr(7, t.size() - 8));
    if (name.empty()) {
      throw UnknownMetricBinding("empty static metric name in '" +
                                 std::string(text) + "'");
    }
    return static_metric(std::move(name));
  }
  for (const auto& entry : kBuiltinNames) {
    if (entry.name == upper) return builtin(entry.id);
  }
  throw UnknownMetricBinding("unknown metric '" + std::string(text) + "'");
}

EstimatorShape MetricKind::shape() const noexcept {
  switch (id_) {
    case MetricId::ErrorLevel:
    case MetricId::InvocationFrequency:
      return EstimatorShape::Counter;
    case MetricId::ComputationPattern:
      return EstimatorShape::OnlineStddev;
    case MetricId::UserBehavior:
      return EstimatorShape::DistinctCount;
    case MetricId::StaticMetric:
      return EstimatorShape::StaticLookup;
    case MetricId::ConcurrencyLevel:
    case MetricId::EnergyConsumption:
    case MetricId::ExecutionTime:
    case MetricId::InterArrivalTime:
    case MetricId::MemoryConsumption:
      return EstimatorShape::OnlineMean;
  }
  return EstimatorShape::OnlineMean;
}

std::string MetricKind::name() const {
  if (id_ == MetricId::StaticMetric) return "STATIC(" + static_name_ + ")";
  for (const auto& entry : kBuiltinNames) {
    if (entry.id == id_) return std::string(entry.name);
  }
  return "UNKNOWN";
}

std::vector<MetricKind> builtin_metrics() {
  std::vector<MetricKind> out;
  out.reserve(kBuiltinNames.size());
  for (const auto& entry : kBuiltinNames) {
    out.push_back(MetricKind::builtin(entry.id));
  }
  return out;
}

// ---------------------------------------------------------------------------
// MetricSnapshot

std::optional<double> MetricSnapshot::value(std::string_view event_type,
                                            const MetricKind& metric) const {
  auto row = rows_.find(event_type);
  if (row == rows_.end()) return std::nullopt;
  auto it = row->second.find(metric);
  if (it == row->second.end()) return std::nullopt;
  return it->second;
}

std::map<std::string, double> MetricSnapshot::column(
    const MetricKind& metric) const {
  std::map<std::string, double> out;
  for (const auto& [type, row] : rows_) {
    if (auto it = row.find(metric); it != row.end()) {
      out.emplace(type, it->second);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// StatsRegistry

StatsRegistry::StatsRegistry(RegistryOptions options)
    : options_(std::move(options)) {
  for (const auto& m : options_.metrics) {
    if (m.id() == MetricId::StaticMetric && !options_.static_metrics) {
      throw UnknownMetricBinding("metric " + m.name() +
                                 " needs a static metric table");
    }
    enabled_mask_ |= bit(m.id());
  }
}

StatsRegistry::Slot& StatsRegistry::slot_for(const std::string& event_type) {
  {
    std::shared_lock lock(map_mu_);
    if (auto it = slots_.find(event_type); it != slots_.end()) {
      return *it->second;
    }
  }
  std::unique_lock lock(map_mu_);
  auto [it, inserted] = slots_.try_emplace(event_type);
  if (inserted) {
    it->second = std::make_unique<Slot>();
    it->second->stats.event_type_id = event_type;
  }
  return *it->second;
}

void StatsRegistry::update(EventTypeStats& s, const EventRecord& e) {
  ++s.invocations;
  if (e.raised_error) ++s.errors;
  const std::uint32_t mask = enabled_mask_;
  if (mask & bit(MetricId::ExecutionTime)) {
    s.execution_time.add(static_cast<double>(e.duration_ns));
  }
  if (mask & bit(MetricId::ComputationPattern)) {
    s.return_size.add(static_cast<double>(e.return_size_bytes));
  }
  if (mask & bit(MetricId::ConcurrencyLevel)) {
    s.concurrency.add(static_cast<double>(e.active_threads));
  }
  if (mask & bit(MetricId::InterArrivalTime)) {
    if (s.last_timestamp_ns) {
      s.inter_arrival.add(
          static_cast<double>(e.timestamp_ns - *s.last_timestamp_ns));
    }
    s.last_timestamp_ns = e.timestamp_ns;
  }
  if ((mask & bit(MetricId::MemoryConsumption)) && e.memory_bytes) {
    s.memory.add(static_cast<double>(*e.memory_bytes));
  }
  if ((mask & bit(MetricId::EnergyConsumption)) && e.energy_estimate) {
    s.energy.add(*e.energy_estimate);
  }
  if ((mask & bit(MetricId::UserBehavior)) && e.session_id &&
      !s.sessions_saturated) {
    if (s.sessions.size() < options_.session_cap) {
      s.sessions.insert(*e.session_id);
    } else if (!s.sessions.contains(*e.session_id)) {
      s.sessions_saturated = true;
      if (options_.on_warning) {
        options_.on_warning("distinct-session count for " + s.event_type_id +
                            " saturated at " +
                            std::to_string(options_.session_cap));
      }
    }
  }
}

void StatsRegistry::record_event(const EventRecord& event) {
  validate(event);
  Slot& slot = slot_for(event.event_type_id);
  std::lock_guard lock(slot.mu);
  update(slot.stats, event);
}

MetricSnapshot::Row StatsRegistry::summarize(const EventTypeStats& s) const {
  MetricSnapshot::Row row;
  for (const auto& metric : options_.metrics) {
    switch (metric.id()) {
      case MetricId::InvocationFrequency:
        row[metric] = static_cast<double>(s.invocations);
        break;
      case MetricId::ErrorLevel:
        row[metric] = static_cast<double>(s.errors);
        break;
      case MetricId::ExecutionTime:
        if (s.execution_time.count()) row[metric] = s.execution_time.mean();
        break;
      case MetricId::ComputationPattern:
        if (s.return_size.count()) row[metric] = s.return_size.stddev();
        break;
      case MetricId::ConcurrencyLevel:
        if (s.concurrency.count()) row[metric] = s.concurrency.mean();
        break;
      case MetricId::InterArrivalTime:
        if (s.inter_arrival.count()) row[metric] = s.inter_arrival.mean();
        break;
      case MetricId::MemoryConsumption:
        if (s.memory.count()) row[metric] = s.memory.mean();
        break;
      case MetricId::EnergyConsumption:
        if (s.energy.count()) row[metric] = s.energy.mean();
        break;
      case MetricId::UserBehavior:
        row[metric] = static_cast<double>(s.sessions.size());
        break;
      case MetricId::StaticMetric:
        if (auto v = options_.static_metrics->lookup(s.event_type_id,
                                                     metric.static_name())) {
          row[metric] = *v;
        }
        break;
    }
  }
  return row;
}

MetricSnapshot StatsRegistry::snapshot(std::int64_t taken_at_ns) const {
  MetricSnapshot::Rows rows;
  {
    std::shared_lock lock(map_mu_);
    for (const auto& [type, slot] : slots_) {
      std::lock_guard slot_lock(slot->mu);
      if (slot->stats.invocations == 0) continue;
      rows.emplace(type, summarize(slot->stats));
    }
  }
  if (rows.empty()) throw EmptyRegistry();
  return MetricSnapshot(taken_at_ns, std::move(rows));
}

std::size_t StatsRegistry::event_type_count() const {
  std::shared_lock lock(map_mu_);
  return slots_.size();
}

std::uint64_t StatsRegistry::total_events() const {
  std::shared_lock lock(map_mu_);
  std::uint64_t total = 0;
  for (const auto& [type, slot] : slots_) {
    std::lock_guard slot_lock(slot->mu);
    total += slot->stats.invocations;
  }
  return total;
}

std::optional<EventTypeStats> StatsRegistry::stats_for(
    std::string_view event_type) const {
  std::shared_lock lock(map_mu_);
  auto it = slots_.find(event_type);
  if (it == slots_.end()) return std::nullopt;
  std::lock_guard slot_lock(it->second->mu);
  return it->second->stats;
}

}  // namespace tigris
