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

#include "tigris/errors.hpp"

#include <utility>

namespace tigris {

SyntaxError::SyntaxError(std::string message, std::size_t position,
                         std::vector<std::string> expected)
    : Error(std::move(message)),
      position_(position),
      expected_(std::move(expected)) {}

MalformedCsv::MalformedCsv(std::size_t row, std::size_t column,
                           const std::string& what)
    : Error("row " + std::to_string(row) + ", column " +
            std::to_string(column) + ": " + what),
      row_(row),
      column_(column) {}

ConfigError::ConfigError(std::string key, const std::string& what)
    : Error(key.empty() ? what : key + ": " + what),
      key_(std::move(key)),
      detail_(what) {}

UnboundCriterion::UnboundCriterion(const std::string& criterion_token)
    : ConfigError("bindings", "criterion '" + criterion_token +
                                  "' is used by the filter but has no "
                                  "metric binding") {}

MalformedLine::MalformedLine(std::size_t line, std::string field,
                             const std::string& what)
    : Error("line " + std::to_string(line) +
            (field.empty() ? std::string() : ", field '" + field + "'") +
            ": " + what),
      line_(line),
      field_(std::move(field)) {}

TimestampRegression::TimestampRegression(std::size_t line, long long previous,
                                         long long current)
    : Error("line " + std::to_string(line) + ": timestamp_ns " +
            std::to_string(current) + " is earlier than previous " +
            std::to_string(previous)),
      line_(line) {}

}  // namespace tigris
