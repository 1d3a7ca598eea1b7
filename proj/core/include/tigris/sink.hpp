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

#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include "tigris/report.hpp"

namespace tigris {

std::string trace_to_json_line(const TraceEntry& entry);
std::string report_to_json_line(const CycleReport& report);

/// Destination for sampled traces and cycle reports. The engine serializes
/// calls per sink.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void write_trace(const TraceEntry& entry) = 0;
  virtual void write_cycle_report(const CycleReport& report) = 0;
  virtual void flush() {}
};

/// Keeps serialized lines in memory.
class MemorySink : public TraceSink {
 public:
  void write_trace(const TraceEntry& entry) override;
  void write_cycle_report(const CycleReport& report) override;

  std::vector<std::string> trace_lines() const;
  std::vector<std::string> report_lines() const;
  std::vector<TraceEntry> traces() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> trace_lines_;
  std::vector<std::string> report_lines_;
  std::vector<TraceEntry> traces_;
};

/// Appends JSON lines to two files. Throws IoError on open or write failure.
class FileSink : public TraceSink {
 public:
  FileSink(const std::filesystem::path& trace_path,
           const std::filesystem::path& report_path);

  void write_trace(const TraceEntry& entry) override;
  void write_cycle_report(const CycleReport& report) override;
  void flush() override;

 private:
  std::ofstream traces_;
  std::ofstream reports_;
};

}  // namespace tigris
