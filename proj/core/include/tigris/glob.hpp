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

#include <string>
#include <string_view>
#include <vector>

namespace tigris {

/// Whole-string match where `*` stands for any run of characters (dots
/// included). Every other character matches itself.
bool glob_match(std::string_view pattern, std::string_view text) noexcept;

/// Allow/deny lists of glob patterns deciding which event types are
/// monitored at all.
class ScanScope {
 public:
  ScanScope() = default;
  ScanScope(std::vector<std::string> allowed, std::vector<std::string> denied)
      : allowed_(std::move(allowed)), denied_(std::move(denied)) {}

  /// Matches some allowed pattern (or the allow list is empty) and no denied
  /// pattern.
  bool admits(std::string_view event_type) const noexcept;

  const std::vector<std::string>& allowed() const noexcept { return allowed_; }
  const std::vector<std::string>& denied() const noexcept { return denied_; }

 private:
  std::vector<std::string> allowed_;
  std::vector<std::string> denied_;
};

}  // namespace tigris
