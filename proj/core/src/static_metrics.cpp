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

#include "tigris/static_metrics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

#include "tigris/errors.hpp"

namespace tigris {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits one CSV record. Quoted fields may contain commas and doubled quotes.
std::vector<std::string> split_record(std::string_view line, std::size_t row) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (true) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::string field;
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          closed = true;
          ++i;
          break;
        }
        field += line[i++];
      }
      if (!closed) {
        throw MalformedCsv(row, fields.size() + 1, "unterminated quoted field");
      }
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i < line.size() && line[i] != ',') {
        throw MalformedCsv(row, fields.size() + 1,
                           "unexpected text after closing quote");
      }
    } else {
      const std::size_t start = i;
      while (i < line.size() && line[i] != ',') ++i;
      field = std::string(trim(line.substr(start, i - start)));
    }
    fields.push_back(std::move(field));
    if (i >= line.size()) break;
    ++i;  // comma
  }
  return fields;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

void StaticMetricTable::insert(std::string event_type, std::string metric_name,
                               double value) {
  Key key{std::move(event_type), std::move(metric_name)};
  auto [it, inserted] = values_.emplace(key, value);
  if (!inserted) {
    throw DuplicateKey("duplicate static metric (" + key.first + ", " +
                       key.second + ")");
  }
}

std::optional<double> StaticMetricTable::lookup(
    std::string_view event_type, std::string_view metric_name) const {
  auto it = values_.find(std::pair<std::string_view, std::string_view>(
      event_type, metric_name));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

StaticMetricTable parse_static_metrics(std::istream& in) {
  StaticMetricTable table;
  std::string line;
  std::size_t row = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_record(line, row);
    if (!header_seen) {
      if (fields.size() != 3 || lowercase(fields[0]) != "event_type" ||
          lowercase(fields[1]) != "metric_name" ||
          lowercase(fields[2]) != "value") {
        throw MalformedCsv(row, 1,
                           "expected header 'event_type,metric_name,value'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw MalformedCsv(row, std::min<std::size_t>(fields.size() + 1, 4),
                         "expected 3 columns, found " +
                             std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw MalformedCsv(row, 1, "empty event_type");
    if (fields[1].empty()) throw MalformedCsv(row, 2, "empty metric_name");
    const std::string_view text = trim(fields[2]);
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() ||
        ptr != text.data() + text.size() || !std::isfinite(value)) {
      throw MalformedCsv(row, 3, "value '" + std::string(text) +
                                     "' is not a finite number");
    }
    try {
      table.insert(std::move(fields[0]), std::move(fields[1]), value);
    } catch (const DuplicateKey& e) {
      throw DuplicateKey("row " + std::to_string(row) + ": " + e.what());
    }
  }
  if (!header_seen) {
    throw MalformedCsv(1, 1, "missing header 'event_type,metric_name,value'");
  }
  return table;
}

StaticMetricTable load_static_metrics(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open static metric file " + path.string());
  return parse_static_metrics(in);
}

}  // namespace tigris
