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

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace tigris {

/// Source-level metrics produced by an external static analyzer, keyed by
/// (event type, metric name).
class StaticMetricTable {
 public:
  using Key = std::pair<std::string, std::string>;
  struct KeyLess {
    using is_transparent = void;
    template <typename A, typename B>
    bool operator()(const A& a, const B& b) const noexcept {
      return std::pair<std::string_view, std::string_view>(a.first, a.second) <
             std::pair<std::string_view, std::string_view>(b.first, b.second);
    }
  };

  /// Throws DuplicateKey if the key is already present.
  void insert(std::string event_type, std::string metric_name, double value);

  std::optional<double> lookup(std::string_view event_type,
                               std::string_view metric_name) const;

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const std::map<Key, double, KeyLess>& entries() const noexcept {
    return values_;
  }

 private:
  std::map<Key, double, KeyLess> values_;
};

/// Reads CSV with the header `event_type,metric_name,value`. Fields may be
/// double-quoted (needed for signatures containing commas).
/// Throws MalformedCsv or DuplicateKey; IoError if the file cannot be opened.
StaticMetricTable load_static_metrics(const std::filesystem::path& path);
StaticMetricTable parse_static_metrics(std::istream& in);

}  // namespace tigris
