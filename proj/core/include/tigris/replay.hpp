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

// Deterministic offline driver. The analysis delay is measured on event
// timestamps: a cycle runs just before the first event whose timestamp is at
// least `delay` past the previous cycle (or past the first event, for the
// first cycle), and once more at end of input.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tigris/engine.hpp"
#include "tigris/event_log.hpp"

namespace tigris {

struct ReplaySummary {
  std::uint64_t events_read = 0;
  std::uint64_t admitted = 0;
  std::uint64_t dropped = 0;
  std::uint64_t traces_emitted = 0;
  std::vector<CycleReport> cycles;
  std::map<std::string, Engine::TypeSamplingStats> per_type;
  std::set<std::string> final_relevant;
};

class ReplayDriver {
 public:
  explicit ReplayDriver(Engine& engine,
                        std::function<void(const CycleReport&)> on_cycle = {});

  /// Runs any due cycle, then hands the event to the engine.
  std::optional<TraceEntry> feed(const EventRecord& event);
  /// Final cycle over whatever arrived since the last one. Returns nothing if
  /// no event was fed since then.
  std::optional<CycleReport> finish();

  std::uint64_t events_fed() const noexcept { return fed_; }

 private:
  void cycle(std::int64_t now_ns);

  Engine& engine_;
  std::function<void(const CycleReport&)> on_cycle_;
  std::optional<std::int64_t> last_cycle_ns_;
  std::int64_t last_event_ns_ = 0;
  std::uint64_t fed_ = 0;
  std::uint64_t since_cycle_ = 0;
};

/// Replays a whole log. Throws whatever the reader throws.
ReplaySummary replay(Engine& engine, EventLogReader& reader);
ReplaySummary replay(Engine& engine, const std::vector<EventRecord>& events);

}  // namespace tigris
