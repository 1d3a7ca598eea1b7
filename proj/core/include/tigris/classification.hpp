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
#include <set>
#include <string>

#include "tigris/dsl.hpp"
#include "tigris/grouping.hpp"

namespace tigris {

/// How a leaf `<modifier> <criterion>` maps onto bands.
///
/// Cumulative (default): `more` selects {More, Most} and `less` selects
/// {Less, Least}; `most`, `least` and the bare criterion select one band.
/// Exact: every leaf selects exactly its own band.
enum class LeafSemantics : std::uint8_t { Cumulative, Exact };

bool leaf_selects(Modifier leaf, Modifier band,
                  LeafSemantics semantics = LeafSemantics::Cumulative) noexcept;

/// Evaluates the filter with exact set algebra over the grouping. Types
/// without a band for a criterion never satisfy a leaf on it.
/// Throws MissingCriterionGrouping if the table lacks a referenced criterion.
std::set<std::string> evaluate_filter(
    const FilterExpr& expr, const GroupingTable& table,
    LeafSemantics semantics = LeafSemantics::Cumulative);

/// Types selected in one analysis cycle plus the diff against the previous
/// cycle.
struct RelevanceSet {
  std::uint64_t cycle_index = 0;
  std::set<std::string> selected;
  std::set<std::string> added;
  std::set<std::string> removed;

  /// Successor with cycle_index + 1 and the diff filled in.
  RelevanceSet next(std::set<std::string> now_selected) const;

  friend bool operator==(const RelevanceSet&, const RelevanceSet&) = default;
};

}  // namespace tigris
