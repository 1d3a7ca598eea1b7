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
#include <stdexcept>
#include <string>
#include <vector>

namespace tigris {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filter text rejected by the parser. `position` is a byte offset into the
/// input; `expected` lists the token classes that would have been accepted.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t position,
              std::vector<std::string> expected);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class InvalidSample : public Error {
 public:
  using Error::Error;
};

class InvalidEvent : public Error {
 public:
  using Error::Error;
};

class EmptyRegistry : public Error {
 public:
  EmptyRegistry() : Error("no events have been recorded") {}
};

class MalformedCsv : public Error {
 public:
  MalformedCsv(std::size_t row, std::size_t column, const std::string& what);
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

class DuplicateKey : public Error {
 public:
  using Error::Error;
};

class DegenerateSample : public Error {
 public:
  using Error::Error;
};

class MissingBinding : public Error {
 public:
  using Error::Error;
};

class MissingCriterionGrouping : public Error {
 public:
  using Error::Error;
};

class InvalidRate : public Error {
 public:
  using Error::Error;
};

class InvalidDelay : public Error {
 public:
  using Error::Error;
};

class UnknownMetricBinding : public Error {
 public:
  using Error::Error;
};

/// Configuration rejected; `key()` names the offending key (may be empty for
/// file-level problems).
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what);
  const std::string& key() const noexcept { return key_; }
  /// Message without the key prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string key_;
  std::string detail_;
};

class UnboundCriterion : public ConfigError {
 public:
  explicit UnboundCriterion(const std::string& criterion_token);
};

class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line, std::string field, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class TimestampRegression : public Error {
 public:
  TimestampRegression(std::size_t line, long long previous, long long current);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

}  // namespace tigris
