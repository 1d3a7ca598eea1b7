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

// Grouping: map every event type onto one of five ordered bands per
// criterion, using either sigma bands (normal data) or quantile bands.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tigris/dsl.hpp"
#include "tigris/metrics.hpp"
#include "tigris/normality.hpp"

namespace tigris {

enum class Direction : std::uint8_t { HigherIsMore, HigherIsLess };

/// Changeability is inverted (a widely spread return size means the method
/// keeps producing the same dominant outputs); everything else is not.
Direction default_direction(Criterion c) noexcept;
std::string_view direction_name(Direction d) noexcept;
std::optional<Direction> direction_from_name(std::string_view name);

struct CriterionBinding {
  Criterion criterion = Criterion::Frequency;
  MetricKind metric;
  Direction direction = Direction::HigherIsMore;

  friend bool operator==(const CriterionBinding&,
                         const CriterionBinding&) = default;
};

/// Least <-> Most, Less <-> More, Base fixed.
Modifier reverse(Modifier m) noexcept;

enum class BandingMethod : std::uint8_t { Sigma, Quantile };
std::string_view banding_method_name(BandingMethod m) noexcept;

struct Banding {
  std::map<std::string, Modifier> bands;
  /// Non-decreasing. Sigma: mean -2k sd, mean -k sd, mean +k sd,
  /// mean +2k sd. Quantile: lower-quarter median, Q1, Q3, upper-quarter
  /// median.
  std::array<double, 4> cut_points{};
};

/// Sigma bands, closed around the mean:
///   Least (-inf, m-2ks)  Less [m-2ks, m-ks)  Base [m-ks, m+ks]
///   More (m+ks, m+2ks]   Most (m+2ks, inf)
/// Requires sd > 0 and k > 0 (throws std::invalid_argument otherwise).
Banding partition_normal(const std::map<std::string, double>& values,
                         double mean, double sd, double k);

/// Quantile bands from type-7 quartiles. The lower quarter is v <= Q1 with
/// v < Q2 and the upper quarter is v >= Q3 with v > Q2; each quarter is split
/// at its own median (Least < median <= Less, More <= median < Most).
/// Everything else is Base, which makes constant data all Base.
Banding partition_quantile(const std::map<std::string, double>& values);

/// Linear interpolation between order statistics (R type 7). `sorted` must
/// be non-empty and ascending; p in [0, 1].
double quantile_type7(std::span<const double> sorted, double p);

struct GroupingOptions {
  /// Half-width unit of the sigma bands, in standard deviations.
  double sigma_k = 0.5;
  /// Below this many defined values the distribution is not treated as
  /// normal, whatever the KS test says.
  std::size_t min_normal_sample = 20;
};

struct CriterionGrouping {
  CriterionBinding binding;
  /// Absent when the test could not run (degenerate or too few values).
  std::optional<NormalityResult> normality;
  BandingMethod method = BandingMethod::Quantile;
  std::array<double, 4> cut_points{};
  /// Only event types with a defined metric value appear here.
  std::map<std::string, Modifier> bands;

  std::vector<std::string> members(Modifier m) const;
};

class GroupingTable {
 public:
  void insert(CriterionGrouping grouping);

  const CriterionGrouping* find(Criterion c) const noexcept;
  /// Throws MissingCriterionGrouping.
  const CriterionGrouping& at(Criterion c) const;
  std::optional<Modifier> band(std::string_view event_type,
                               Criterion c) const;

  const std::map<Criterion, CriterionGrouping>& criteria() const noexcept {
    return groupings_;
  }
  /// Every event type banded under at least one criterion.
  std::vector<std::string> event_types() const;

 private:
  std::map<Criterion, CriterionGrouping> groupings_;
};

/// Bands one criterion's metric column.
CriterionGrouping group_criterion(const std::map<std::string, double>& values,
                                  const CriterionBinding& binding,
                                  const GroupingOptions& options = {});

/// Groups every binding. A metric absent from the snapshot yields an empty
/// grouping, so leaves on that criterion select nothing.
GroupingTable group(const MetricSnapshot& snapshot,
                    std::span<const CriterionBinding> bindings,
                    const GroupingOptions& options = {});

/// Groups exactly the criteria `expr` references. Throws MissingBinding if
/// one of them has no binding.
GroupingTable group_for(const FilterExpr& expr, const MetricSnapshot& snapshot,
                        std::span<const CriterionBinding> bindings,
                        const GroupingOptions& options = {});

}  // namespace tigris
