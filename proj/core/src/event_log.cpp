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

#include "tigris/event_log.hpp"

#include <limits>

#include <nlohmann/json.hpp>

#include "tigris/errors.hpp"

namespace tigris {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& obj, const char* field, std::size_t line_no) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) {
    throw MalformedLine(line_no, field, "missing required field");
  }
  return *it;
}

std::int64_t as_int64(const json& v, const char* field, std::size_t line_no) {
  if (!v.is_number_integer()) {
    throw MalformedLine(line_no, field, "expected an integer");
  }
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw MalformedLine(line_no, field, "integer out of range");
  }
  return v.get<std::int64_t>();
}

std::uint64_t as_uint64(const json& v, const char* field, std::size_t line_no) {
  if (!v.is_number_integer()) {
    throw MalformedLine(line_no, field, "expected an integer");
  }
  if (!v.is_number_unsigned() && v.get<std::int64_t>() < 0) {
    throw MalformedLine(line_no, field, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

const json* optional_field(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

}  // namespace

EventRecord parse_event_line(std::string_view line, std::size_t line_no) {
  json obj = json::parse(line.begin(), line.end(), nullptr, false);
  if (obj.is_discarded()) throw MalformedLine(line_no, "", "invalid JSON");
  if (!obj.is_object()) {
    throw MalformedLine(line_no, "", "expected a JSON object");
  }

  EventRecord e;
  const json& id = require(obj, "event_type_id", line_no);
  if (!id.is_string() || id.get_ref<const std::string&>().empty()) {
    throw MalformedLine(line_no, "event_type_id", "expected a non-empty string");
  }
  e.event_type_id = id.get<std::string>();
  e.timestamp_ns =
      as_int64(require(obj, "timestamp_ns", line_no), "timestamp_ns", line_no);
  e.duration_ns =
      as_int64(require(obj, "duration_ns", line_no), "duration_ns", line_no);
  if (e.duration_ns < 0) {
    throw MalformedLine(line_no, "duration_ns", "must be >= 0");
  }
  e.return_size_bytes = as_uint64(require(obj, "return_size_bytes", line_no),
                                  "return_size_bytes", line_no);
  e.input_digest =
      as_uint64(require(obj, "input_digest", line_no), "input_digest", line_no);
  const std::uint64_t threads = as_uint64(
      require(obj, "active_threads", line_no), "active_threads", line_no);
  if (threads < 1 || threads > std::numeric_limits<std::uint32_t>::max()) {
    throw MalformedLine(line_no, "active_threads", "must be >= 1");
  }
  e.active_threads = static_cast<std::uint32_t>(threads);
  const json& err = require(obj, "raised_error", line_no);
  if (!err.is_boolean()) {
    throw MalformedLine(line_no, "raised_error", "expected a boolean");
  }
  e.raised_error = err.get<bool>();

  if (const json* s = optional_field(obj, "session_id")) {
    if (!s->is_string()) {
      throw MalformedLine(line_no, "session_id", "expected a string");
    }
    e.session_id = s->get<std::string>();
  }
  if (const json* m = optional_field(obj, "memory_bytes")) {
    e.memory_bytes = as_uint64(*m, "memory_bytes", line_no);
  }
  if (const json* en = optional_field(obj, "energy_estimate")) {
    if (!en->is_number() || en->get<double>() < 0.0) {
      throw MalformedLine(line_no, "energy_estimate",
                          "expected a non-negative number");
    }
    e.energy_estimate = en->get<double>();
  }
  return e;
}

std::string event_to_json_line(const EventRecord& e) {
  ordered_json obj;
  obj["event_type_id"] = e.event_type_id;
  obj["timestamp_ns"] = e.timestamp_ns;
  obj["duration_ns"] = e.duration_ns;
  obj["return_size_bytes"] = e.return_size_bytes;
  obj["input_digest"] = e.input_digest;
  obj["active_threads"] = e.active_threads;
  if (e.session_id) obj["session_id"] = *e.session_id;
  obj["raised_error"] = e.raised_error;
  if (e.memory_bytes) obj["memory_bytes"] = *e.memory_bytes;
  if (e.energy_estimate) obj["energy_estimate"] = *e.energy_estimate;
  return obj.dump();
}

EventLogReader::EventLogReader(const std::filesystem::path& path)
    : file_(path), in_(&file_) {
  if (!file_) throw IoError("cannot open event log " + path.string());
}

EventLogReader::EventLogReader(std::istream& in) : in_(&in) {}

std::optional<EventRecord> EventLogReader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    EventRecord e = parse_event_line(line, line_no_);
    if (last_timestamp_ && e.timestamp_ns < *last_timestamp_) {
      throw TimestampRegression(line_no_, *last_timestamp_, e.timestamp_ns);
    }
    last_timestamp_ = e.timestamp_ns;
    return e;
  }
  if (in_->bad()) {
    throw IoError("read error after line " + std::to_string(line_no_));
  }
  return std::nullopt;
}

std::vector<EventRecord> read_event_log(std::istream& in) {
  EventLogReader reader(in);
  std::vector<EventRecord> out;
  while (auto e = reader.next()) out.push_back(std::move(*e));
  return out;
}

std::vector<EventRecord> read_event_log(const std::filesystem::path& path) {
  EventLogReader reader(path);
  std::vector<EventRecord> out;
  while (auto e = reader.next()) out.push_back(std::move(*e));
  return out;
}

void write_event_log(std::ostream& out, const std::vector<EventRecord>& events) {
  for (const auto& e : events) out << event_to_json_line(e) << '\n';
}

void write_event_log(const std::filesystem::path& path,
                     const std::vector<EventRecord>& events) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write event log " + path.string());
  write_event_log(out, events);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace tigris
