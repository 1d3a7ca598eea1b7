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

#include "tigris/engine.hpp"

#include <chrono>
#include <unordered_map>
#include <utility>

#include "tigris/errors.hpp"
#include "tigris/sampling.hpp"
#include "tigris/static_metrics.hpp"

namespace tigris {

struct Engine::TypeCounters {
  std::atomic<std::uint64_t> occurrences{0};
  std::atomic<std::uint64_t> traces{0};
};

struct Engine::RelevanceState {
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  RelevanceSet relevance;
  std::unordered_map<std::string, std::shared_ptr<TypeCounters>, StringHash,
                     std::equal_to<>>
      counters;
};

namespace {

std::shared_ptr<const StaticMetricTable> load_static_table(
    const MonitoringConfig& config) {
  if (!config.static_metric_file) return nullptr;
  return std::make_shared<const StaticMetricTable>(
      load_static_metrics(*config.static_metric_file));
}

RegistryOptions registry_options(
    const MonitoringConfig& config,
    std::shared_ptr<const StaticMetricTable> static_metrics,
    std::function<void(std::string_view)> on_warning) {
  RegistryOptions o;
  o.metrics = config.required_metrics();
  o.session_cap = config.session_cap;
  o.static_metrics = std::move(static_metrics);
  o.on_warning = std::move(on_warning);
  return o;
}

std::int64_t wall_clock_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

Engine::Engine(MonitoringConfig config, EngineOptions options)
    : Engine(config, load_static_table(config), std::move(options)) {}

Engine::Engine(MonitoringConfig config,
               std::shared_ptr<const StaticMetricTable> static_metrics,
               EngineOptions options)
    : config_(std::move(config)),
      options_(std::move(options)),
      scope_(config_.scan_scope()),
      totals_(std::make_shared<Totals>()),
      registry_(registry_options(
          config_, std::move(static_metrics),
          [this](std::string_view msg) { warn(msg); })),
      rate_(config_.sampling_percentage),
      period_(sampling_period(config_.sampling_percentage)),
      delay_s_(config_.analysis_fixed_delay_s),
      state_(std::make_shared<const RelevanceState>()) {
  if (config_.analysis_fixed_delay_s <= 0) {
    throw InvalidDelay("analysis delay must be positive, got " +
                       std::to_string(config_.analysis_fixed_delay_s));
  }
}

Engine::~Engine() { stop(); }

std::shared_ptr<const Engine::RelevanceState> Engine::current_state() const {
  return std::atomic_load(&state_);
}

std::shared_ptr<Engine::TypeCounters> Engine::make_counters(
    const std::string& type) {
  // Whatever a type accumulated while relevant is folded into the totals
  // once the last state referring to it is gone.
  return std::shared_ptr<TypeCounters>(
      new TypeCounters, [totals = totals_, type](TypeCounters* c) {
        {
          std::lock_guard lock(totals->mu);
          auto& t = totals->by_type[type];
          t.relevant_occurrences += c->occurrences.load();
          t.traces += c->traces.load();
        }
        delete c;
      });
}

void Engine::warn(std::string_view message) const {
  if (options_.on_warning) options_.on_warning(message);
}

bool Engine::admits(std::string_view event_type) const noexcept {
  return scope_.admits(event_type);
}

std::optional<TraceEntry> Engine::on_event(const EventRecord& event) {
  if (!scope_.admits(event.event_type_id)) {
    dropped_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  registry_.record_event(event);
  admitted_.fetch_add(1, std::memory_order_relaxed);

  const auto state = current_state();
  const auto it = state->counters.find(event.event_type_id);
  if (it == state->counters.end()) return std::nullopt;

  TypeCounters& c = *it->second;
  const std::uint64_t occ = c.occurrences.fetch_add(1) + 1;
  if (!systematic_pick(occ, period_.load(std::memory_order_relaxed))) {
    return std::nullopt;
  }
  c.traces.fetch_add(1, std::memory_order_relaxed);
  traces_total_.fetch_add(1, std::memory_order_relaxed);
  traces_since_cycle_.fetch_add(1, std::memory_order_relaxed);

  TraceEntry t;
  t.event_type_id = event.event_type_id;
  t.timestamp_ns = event.timestamp_ns;
  t.duration_ns = event.duration_ns;
  t.input_digest = event.input_digest;
  t.return_size_bytes = event.return_size_bytes;
  t.session_id = event.session_id;
  t.raised_error = event.raised_error;
  t.occurrence_index = occ;
  t.cycle_index = state->relevance.cycle_index;
  emit(t);
  return t;
}

void Engine::emit(const TraceEntry& entry) {
  std::lock_guard lock(sinks_mu_);
  for (const auto& s : sinks_) s->write_trace(entry);
}

CycleReport Engine::run_cycle(std::int64_t now_ns) {
  std::lock_guard cycle_lock(cycle_mu_);
  const auto prev = current_state();

  CycleReport report;
  report.taken_at_ns = now_ns;

  std::optional<MetricSnapshot> snapshot;
  try {
    snapshot = registry_.snapshot(now_ns);
  } catch (const EmptyRegistry&) {
    report.empty = true;
  }

  auto next = std::make_shared<RelevanceState>();
  if (report.empty) {
    next->relevance = prev->relevance.next(prev->relevance.selected);
    next->counters = prev->counters;
  } else {
    GroupingOptions gopts = config_.grouping_options();
    gopts.min_normal_sample = options_.min_normal_sample;
    report.grouping =
        group_for(config_.filter, *snapshot, config_.bindings, gopts);
    next->relevance = prev->relevance.next(evaluate_filter(
        config_.filter, report.grouping, options_.leaf_semantics));
    for (const auto& type : next->relevance.selected) {
      auto it = prev->counters.find(type);
      next->counters.emplace(type, it != prev->counters.end()
                                       ? it->second
                                       : make_counters(type));
    }
    report.event_type_count = snapshot->event_type_count();
    for (const auto& [criterion, g] : report.grouping.criteria()) {
      report.verdicts.push_back(
          CriterionVerdict{g.binding, g.normality, g.method, g.bands.size()});
    }
    report.snapshot = std::move(snapshot);
  }
  report.cycle_index = next->relevance.cycle_index;
  report.relevance = next->relevance;

  std::atomic_store(&state_,
                    std::shared_ptr<const RelevanceState>(std::move(next)));
  report.traces_since_previous = traces_since_cycle_.exchange(0);

  {
    std::lock_guard lock(sinks_mu_);
    for (const auto& s : sinks_) {
      s->write_cycle_report(report);
      s->flush();
    }
  }
  return report;
}

void Engine::set_sampling_rate(double rate) {
  const std::uint64_t p = sampling_period(rate);
  rate_.store(rate);
  period_.store(p);
}

void Engine::set_analysis_delay(std::int64_t seconds) {
  if (seconds <= 0) {
    throw InvalidDelay("analysis delay must be positive, got " +
                       std::to_string(seconds));
  }
  {
    std::lock_guard lock(schedule_mu_);
    delay_s_.store(seconds);
  }
  schedule_cv_.notify_all();
}

bool Engine::is_relevant(std::string_view event_type) const {
  const auto state = current_state();
  return state->counters.find(event_type) != state->counters.end();
}

RelevanceSet Engine::relevance() const { return current_state()->relevance; }

std::uint64_t Engine::cycles_run() const {
  return current_state()->relevance.cycle_index;
}

std::map<std::string, Engine::TypeSamplingStats> Engine::sampling_stats()
    const {
  std::map<std::string, TypeSamplingStats> out;
  {
    std::lock_guard lock(totals_->mu);
    out = totals_->by_type;
  }
  const auto state = current_state();
  for (const auto& [type, c] : state->counters) {
    auto& t = out[type];
    t.relevant_occurrences += c->occurrences.load();
    t.traces += c->traces.load();
  }
  return out;
}

void Engine::add_sink(std::shared_ptr<TraceSink> sink) {
  if (!sink) return;
  std::lock_guard lock(sinks_mu_);
  sinks_.push_back(std::move(sink));
}

void Engine::flush_sinks() {
  std::lock_guard lock(sinks_mu_);
  for (const auto& s : sinks_) s->flush();
}

void Engine::start(std::function<void(const CycleReport&)> on_cycle) {
  if (worker_.joinable()) return;
  worker_ = std::jthread([this, cb = std::move(on_cycle)](std::stop_token st) {
    scheduler_loop(st, cb);
  });
}

void Engine::stop() {
  if (!worker_.joinable()) return;
  worker_.request_stop();
  schedule_cv_.notify_all();
  worker_.join();
  worker_ = std::jthread();
}

void Engine::scheduler_loop(std::stop_token stop,
                            std::function<void(const CycleReport&)> on_cycle) {
  using Clock = std::chrono::steady_clock;
  auto last = Clock::now();
  std::unique_lock lock(schedule_mu_);
  while (!stop.stop_requested()) {
    // Re-evaluated on every wake-up so a changed delay takes effect at once.
    const std::int64_t delay = delay_s_.load();
    const auto deadline = last + std::chrono::seconds(delay);
    if (Clock::now() < deadline) {
      schedule_cv_.wait_until(lock, stop, deadline,
                              [&] { return delay_s_.load() != delay; });
      continue;
    }
    last = Clock::now();
    lock.unlock();
    try {
      CycleReport r = run_cycle(wall_clock_ns());
      if (on_cycle) on_cycle(r);
    } catch (const std::exception& e) {
      warn(std::string("analysis cycle failed: ") + e.what());
    }
    lock.lock();
  }
}

}  // namespace tigris
