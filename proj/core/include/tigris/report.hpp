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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tigris/classification.hpp"
#include "tigris/grouping.hpp"
#include "tigris/metrics.hpp"

namespace tigris {

/// Detailed record of one sampled occurrence of a relevant event type.
struct TraceEntry {
  std::string event_type_id;
  std::int64_t timestamp_ns = 0;
  std::int64_t duration_ns = 0;
  std::uint64_t input_digest = 0;
  std::uint64_t return_size_bytes = 0;
  std::optional<std::string> session_id;
  bool raised_error = false;
  /// Sampler counter value at emission (1-based, per type, since the type
  /// last entered the relevance set).
  std::uint64_t occurrence_index = 0;
  /// Analysis cycle whose relevance set selected the type.
  std::uint64_t cycle_index = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct CriterionVerdict {
  CriterionBinding binding;
  std::optional<NormalityResult> normality;
  BandingMethod method = BandingMethod::Quantile;
  std::size_t banded_types = 0;
};

/// Outcome of one analysis cycle.
struct CycleReport {
  std::uint64_t cycle_index = 0;
  std::int64_t taken_at_ns = 0;
  /// True when nothing had been recorded yet; the relevance set is then
  /// carried over unchanged.
  bool empty = false;
  std::size_t event_type_count = 0;
  std::vector<CriterionVerdict> verdicts;
  RelevanceSet relevance;
  /// Traces emitted since the previous cycle.
  std::uint64_t traces_since_previous = 0;
  /// The grouping used for the decision (empty for empty cycles).
  GroupingTable grouping;
  std::optional<MetricSnapshot> snapshot;
};

}  // namespace tigris
