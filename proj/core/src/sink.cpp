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

#include "tigris/sink.hpp"

#include <nlohmann/json.hpp>

#include "tigris/errors.hpp"

namespace tigris {
namespace {

using nlohmann::ordered_json;

ordered_json string_array(const std::set<std::string>& items) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : items) arr.push_back(s);
  return arr;
}

}  // namespace

std::string trace_to_json_line(const TraceEntry& t) {
  ordered_json obj;
  obj["event_type_id"] = t.event_type_id;
  obj["timestamp_ns"] = t.timestamp_ns;
  obj["duration_ns"] = t.duration_ns;
  obj["input_digest"] = t.input_digest;
  obj["return_size_bytes"] = t.return_size_bytes;
  obj["session_id"] =
      t.session_id ? ordered_json(*t.session_id) : ordered_json(nullptr);
  obj["raised_error"] = t.raised_error;
  obj["occurrence_index"] = t.occurrence_index;
  obj["cycle_index"] = t.cycle_index;
  return obj.dump();
}

std::string report_to_json_line(const CycleReport& r) {
  ordered_json obj;
  obj["cycle_index"] = r.cycle_index;
  obj["taken_at_ns"] = r.taken_at_ns;
  obj["empty"] = r.empty;
  obj["event_type_count"] = r.event_type_count;
  ordered_json criteria = ordered_json::array();
  for (const auto& v : r.verdicts) {
    ordered_json c;
    c["criterion"] = std::string(criterion_token(v.binding.criterion));
    c["metric"] = v.binding.metric.name();
    c["direction"] = std::string(direction_name(v.binding.direction));
    c["method"] = std::string(banding_method_name(v.method));
    if (v.normality) {
      c["ks_statistic"] = v.normality->statistic;
      c["p_value"] = v.normality->p_value;
      c["is_normal"] = v.normality->is_normal;
    } else {
      c["ks_statistic"] = nullptr;
      c["p_value"] = nullptr;
      c["is_normal"] = nullptr;
    }
    c["banded_types"] = v.banded_types;
    criteria.push_back(std::move(c));
  }
  obj["criteria"] = std::move(criteria);
  obj["selected"] = string_array(r.relevance.selected);
  obj["added"] = string_array(r.relevance.added);
  obj["removed"] = string_array(r.relevance.removed);
  obj["traces_since_previous"] = r.traces_since_previous;
  return obj.dump();
}

void MemorySink::write_trace(const TraceEntry& entry) {
  std::string line = trace_to_json_line(entry);
  std::lock_guard lock(mu_);
  trace_lines_.push_back(std::move(line));
  traces_.push_back(entry);
}

void MemorySink::write_cycle_report(const CycleReport& report) {
  std::string line = report_to_json_line(report);
  std::lock_guard lock(mu_);
  report_lines_.push_back(std::move(line));
}

std::vector<std::string> MemorySink::trace_lines() const {
  std::lock_guard lock(mu_);
  return trace_lines_;
}

std::vector<std::string> MemorySink::report_lines() const {
  std::lock_guard lock(mu_);
  return report_lines_;
}

std::vector<TraceEntry> MemorySink::traces() const {
  std::lock_guard lock(mu_);
  return traces_;
}

FileSink::FileSink(const std::filesystem::path& trace_path,
                   const std::filesystem::path& report_path)
    : traces_(trace_path, std::ios::out | std::ios::trunc),
      reports_(report_path, std::ios::out | std::ios::trunc) {
  if (!traces_) throw IoError("cannot open " + trace_path.string());
  if (!reports_) throw IoError("cannot open " + report_path.string());
}

void FileSink::write_trace(const TraceEntry& entry) {
  traces_ << trace_to_json_line(entry) << '\n';
  if (!traces_) throw IoError("failed to write trace");
}

void FileSink::write_cycle_report(const CycleReport& report) {
  reports_ << report_to_json_line(report) << '\n';
  if (!reports_) throw IoError("failed to write cycle report");
}

void FileSink::flush() {
  traces_.flush();
  reports_.flush();
  if (!traces_ || !reports_) throw IoError("flush failed");
}

}  // namespace tigris
