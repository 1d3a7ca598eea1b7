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

// JSON Lines event logs: one EventRecord object per line. Unknown fields are
// ignored; optional fields (session_id, memory_bytes, energy_estimate) may be
// absent or null.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tigris/metrics.hpp"

namespace tigris {

/// Throws MalformedLine (with the 1-based line number and offending field).
EventRecord parse_event_line(std::string_view line, std::size_t line_no = 1);
std::string event_to_json_line(const EventRecord& event);

/// Streams records in file order, enforcing non-decreasing timestamps.
/// Blank lines are skipped.
class EventLogReader {
 public:
  /// Throws IoError if the file cannot be opened.
  explicit EventLogReader(const std::filesystem::path& path);
  /// Reads from a caller-owned stream.
  explicit EventLogReader(std::istream& in);

  /// Next record, or nullopt at end of input. Throws MalformedLine or
  /// TimestampRegression.
  std::optional<EventRecord> next();

  std::size_t line_number() const noexcept { return line_no_; }

 private:
  std::ifstream file_;
  std::istream* in_;
  std::size_t line_no_ = 0;
  std::optional<std::int64_t> last_timestamp_;
};

std::vector<EventRecord> read_event_log(const std::filesystem::path& path);
std::vector<EventRecord> read_event_log(std::istream& in);

void write_event_log(std::ostream& out, const std::vector<EventRecord>& events);
/// Throws IoError.
void write_event_log(const std::filesystem::path& path,
                     const std::vector<EventRecord>& events);

}  // namespace tigris
