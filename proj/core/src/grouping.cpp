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

#include "tigris/grouping.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "tigris/errors.hpp"

namespace tigris {
namespace {

std::vector<double> sorted_values(const std::map<std::string, double>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& [type, v] : values) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

double median_of(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  return quantile_type7(v, 0.5);
}

}  // namespace

Direction default_direction(Criterion c) noexcept {
  return c == Criterion::Changeability ? Direction::HigherIsLess
                                       : Direction::HigherIsMore;
}

std::string_view direction_name(Direction d) noexcept {
  return d == Direction::HigherIsMore ? "higher-is-more" : "higher-is-less";
}

std::optional<Direction> direction_from_name(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lowered == "higher-is-more" || lowered == "higherismore")
    return Direction::HigherIsMore;
  if (lowered == "higher-is-less" || lowered == "higherisless")
    return Direction::HigherIsLess;
  return std::nullopt;
}

Modifier reverse(Modifier m) noexcept {
  switch (m) {
    case Modifier::Least: return Modifier::Most;
    case Modifier::Less: return Modifier::More;
    case Modifier::Base: return Modifier::Base;
    case Modifier::More: return Modifier::Less;
    case Modifier::Most: return Modifier::Least;
  }
  return m;
}

std::string_view banding_method_name(BandingMethod m) noexcept {
  return m == BandingMethod::Sigma ? "sigma" : "quantile";
}

double quantile_type7(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Banding partition_normal(const std::map<std::string, double>& values,
                         double mean, double sd, double k) {
  if (!(sd > 0.0)) throw std::invalid_argument("partition_normal: sd <= 0");
  if (!(k > 0.0)) throw std::invalid_argument("partition_normal: k <= 0");
  Banding out;
  out.cut_points = {mean - 2 * k * sd, mean - k * sd, mean + k * sd,
                    mean + 2 * k * sd};
  const auto& c = out.cut_points;
  for (const auto& [type, v] : values) {
    Modifier m;
    if (v < c[0]) {
      m = Modifier::Least;
    } else if (v < c[1]) {
      m = Modifier::Less;
    } else if (v <= c[2]) {
      m = Modifier::Base;
    } else if (v <= c[3]) {
      m = Modifier::More;
    } else {
      m = Modifier::Most;
    }
    out.bands.emplace(type, m);
  }
  return out;
}

Banding partition_quantile(const std::map<std::string, double>& values) {
  Banding out;
  if (values.empty()) return out;
  const std::vector<double> sorted = sorted_values(values);
  const double q1 = quantile_type7(sorted, 0.25);
  const double q2 = quantile_type7(sorted, 0.5);
  const double q3 = quantile_type7(sorted, 0.75);

  auto in_lower = [&](double v) { return v <= q1 && v < q2; };
  auto in_upper = [&](double v) { return v >= q3 && v > q2; };

  std::vector<double> lower;
  std::vector<double> upper;
  for (double v : sorted) {
    if (in_lower(v)) lower.push_back(v);
    if (in_upper(v)) upper.push_back(v);
  }
  const double lower_median = lower.empty() ? q1 : median_of(lower);
  const double upper_median = upper.empty() ? q3 : median_of(upper);
  out.cut_points = {lower_median, q1, q3, upper_median};

  for (const auto& [type, v] : values) {
    Modifier m = Modifier::Base;
    if (in_lower(v)) {
      m = v < lower_median ? Modifier::Least : Modifier::Less;
    } else if (in_upper(v)) {
      m = v <= upper_median ? Modifier::More : Modifier::Most;
    }
    out.bands.emplace(type, m);
  }
  return out;
}

std::vector<std::string> CriterionGrouping::members(Modifier m) const {
  std::vector<std::string> out;
  for (const auto& [type, band] : bands) {
    if (band == m) out.push_back(type);
  }
  return out;
}

void GroupingTable::insert(CriterionGrouping grouping) {
  const Criterion c = grouping.binding.criterion;
  groupings_.insert_or_assign(c, std::move(grouping));
}

const CriterionGrouping* GroupingTable::find(Criterion c) const noexcept {
  auto it = groupings_.find(c);
  return it == groupings_.end() ? nullptr : &it->second;
}

const CriterionGrouping& GroupingTable::at(Criterion c) const {
  if (const auto* g = find(c)) return *g;
  throw MissingCriterionGrouping("no grouping for criterion '" +
                                 std::string(criterion_token(c)) + "'");
}

std::optional<Modifier> GroupingTable::band(std::string_view event_type,
                                            Criterion c) const {
  const auto* g = find(c);
  if (!g) return std::nullopt;
  auto it = g->bands.find(std::string(event_type));
  if (it == g->bands.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> GroupingTable::event_types() const {
  std::vector<std::string> out;
  for (const auto& [c, g] : groupings_) {
    for (const auto& [type, band] : g.bands) out.push_back(type);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CriterionGrouping group_criterion(const std::map<std::string, double>& values,
                                  const CriterionBinding& binding,
                                  const GroupingOptions& options) {
  CriterionGrouping g;
  g.binding = binding;

  std::vector<double> column;
  column.reserve(values.size());
  for (const auto& [type, v] : values) column.push_back(v);

  Banding banding;
  bool banded = false;
  try {
    g.normality = ks_normality_test(column);
  } catch (const DegenerateSample&) {
    g.normality.reset();
  }
  if (g.normality && g.normality->is_normal &&
      values.size() >= options.min_normal_sample) {
    double mean = 0.0;
    for (double v : column) mean += v;
    mean /= static_cast<double>(column.size());
    double ss = 0.0;
    for (double v : column) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(column.size() - 1));
    banding = partition_normal(values, mean, sd, options.sigma_k);
    g.method = BandingMethod::Sigma;
    banded = true;
  }
  if (!banded) {
    banding = partition_quantile(values);
    g.method = BandingMethod::Quantile;
  }
  g.cut_points = banding.cut_points;
  g.bands = std::move(banding.bands);
  if (binding.direction == Direction::HigherIsLess) {
    for (auto& [type, band] : g.bands) band = reverse(band);
  }
  return g;
}

GroupingTable group(const MetricSnapshot& snapshot,
                    std::span<const CriterionBinding> bindings,
                    const GroupingOptions& options) {
  GroupingTable table;
  for (const auto& b : bindings) {
    table.insert(group_criterion(snapshot.column(b.metric), b, options));
  }
  return table;
}

GroupingTable group_for(const FilterExpr& expr, const MetricSnapshot& snapshot,
                        std::span<const CriterionBinding> bindings,
                        const GroupingOptions& options) {
  GroupingTable table;
  for (Criterion c : referenced_criteria(expr)) {
    auto it = std::find_if(bindings.begin(), bindings.end(),
                           [c](const auto& b) { return b.criterion == c; });
    if (it == bindings.end()) {
      throw MissingBinding("criterion '" + std::string(criterion_token(c)) +
                           "' has no metric binding");
    }
    table.insert(group_criterion(snapshot.column(it->metric), *it, options));
  }
  return table;
}

}  // namespace tigris
