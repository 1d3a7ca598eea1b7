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

#include "tigris/replay.hpp"

#include <utility>

namespace tigris {

namespace {
constexpr std::int64_t kNsPerSecond = 1'000'000'000;
}

ReplayDriver::ReplayDriver(Engine& engine,
                           std::function<void(const CycleReport&)> on_cycle)
    : engine_(engine), on_cycle_(std::move(on_cycle)) {}

void ReplayDriver::cycle(std::int64_t now_ns) {
  CycleReport r = engine_.run_cycle(now_ns);
  last_cycle_ns_ = now_ns;
  since_cycle_ = 0;
  if (on_cycle_) on_cycle_(r);
}

std::optional<TraceEntry> ReplayDriver::feed(const EventRecord& event) {
  if (!last_cycle_ns_) {
    // The clock starts at the first event.
    last_cycle_ns_ = event.timestamp_ns;
  } else {
    const std::int64_t delay_ns = engine_.analysis_delay_s() * kNsPerSecond;
    if (event.timestamp_ns - *last_cycle_ns_ >= delay_ns) {
      cycle(event.timestamp_ns);
    }
  }
  ++fed_;
  ++since_cycle_;
  last_event_ns_ = event.timestamp_ns;
  return engine_.on_event(event);
}

std::optional<CycleReport> ReplayDriver::finish() {
  if (since_cycle_ == 0) return std::nullopt;
  CycleReport r = engine_.run_cycle(last_event_ns_);
  last_cycle_ns_ = last_event_ns_;
  since_cycle_ = 0;
  if (on_cycle_) on_cycle_(r);
  return r;
}

namespace {

template <typename Next>
ReplaySummary run(Engine& engine, Next next) {
  ReplaySummary s;
  ReplayDriver driver(engine,
                      [&](const CycleReport& r) { s.cycles.push_back(r); });
  while (auto e = next()) driver.feed(*e);
  driver.finish();
  s.events_read = driver.events_fed();
  s.admitted = engine.admitted_events();
  s.dropped = engine.dropped_events();
  s.traces_emitted = engine.traces_emitted();
  s.per_type = engine.sampling_stats();
  s.final_relevant = engine.relevance().selected;
  return s;
}

}  // namespace

ReplaySummary replay(Engine& engine, EventLogReader& reader) {
  return run(engine, [&] { return reader.next(); });
}

ReplaySummary replay(Engine& engine, const std::vector<EventRecord>& events) {
  std::size_t i = 0;
  return run(engine, [&]() -> std::optional<EventRecord> {
    if (i == events.size()) return std::nullopt;
    return events[i++];
  });
}

}  // namespace tigris
