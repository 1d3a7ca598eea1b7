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

#include <gtest/gtest.h>

#include <random>

#include "tigris/errors.hpp"
#include "tigris/grouping.hpp"

namespace tigris {
namespace {

using Column = std::map<std::string, double>;

CriterionBinding binding(Criterion c, MetricId m,
                         Direction d = Direction::HigherIsMore) {
  return {c, MetricKind::builtin(m), d};
}

TEST(Grouping, TableFiveFrequency) {
  const Column freq{{"findOwner", 12}, {"updateOwner", 2}, {"newVisit", 50},
                    {"findVets", 200}, {"findAll", 100}};
  const auto g = group_criterion(
      freq, binding(Criterion::Frequency, MetricId::InvocationFrequency));
  EXPECT_EQ(g.method, BandingMethod::Quantile);
  ASSERT_TRUE(g.normality.has_value());
  EXPECT_EQ(g.bands.at("updateOwner"), Modifier::Least);
  EXPECT_EQ(g.bands.at("findOwner"), Modifier::Less);
  EXPECT_EQ(g.bands.at("newVisit"), Modifier::Base);
  EXPECT_EQ(g.bands.at("findAll"), Modifier::More);
  EXPECT_EQ(g.bands.at("findVets"), Modifier::Most);
}

TEST(Grouping, TableFiveChangeabilityIsReversed) {
  const Column sd{{"findOwner", 6}, {"updateOwner", 0}, {"newVisit", 12},
                  {"findVets", 200}, {"findAll", 90}};
  const auto g = group_criterion(
      sd, binding(Criterion::Changeability, MetricId::ComputationPattern,
                  Direction::HigherIsLess));
  EXPECT_EQ(g.bands.at("findOwner"), Modifier::More);
  EXPECT_EQ(g.bands.at("updateOwner"), Modifier::Most);
  EXPECT_EQ(g.bands.at("newVisit"), Modifier::Base);
  EXPECT_EQ(g.bands.at("findVets"), Modifier::Least);
  EXPECT_EQ(g.bands.at("findAll"), Modifier::Less);
}

TEST(Grouping, QuantileCutPoints) {
  const auto b = partition_quantile(
      Column{{"a", 2}, {"b", 12}, {"c", 50}, {"d", 100}, {"e", 200}});
  EXPECT_EQ(b.cut_points, (std::array<double, 4>{7, 12, 100, 150}));
}

TEST(Grouping, QuantileType7) {
  const std::vector<double> v{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(quantile_type7(v, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile_type7(v, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(quantile_type7(v, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile_type7(v, 1.0), 4.0);
  EXPECT_THROW(quantile_type7(std::vector<double>{}, 0.5),
               std::invalid_argument);
}

TEST(Grouping, ConstantColumnIsAllBase) {
  Column c;
  for (int i = 0; i < 30; ++i) c["t" + std::to_string(i)] = 7.0;
  const auto g = group_criterion(
      c, binding(Criterion::Frequency, MetricId::InvocationFrequency));
  EXPECT_FALSE(g.normality.has_value());
  EXPECT_EQ(g.method, BandingMethod::Quantile);
  for (const auto& [t, m] : g.bands) EXPECT_EQ(m, Modifier::Base) << t;
}

TEST(Grouping, SingleValueIsBase) {
  const auto g = group_criterion(
      Column{{"only", 3.0}},
      binding(Criterion::Frequency, MetricId::InvocationFrequency));
  EXPECT_EQ(g.bands.at("only"), Modifier::Base);
}

TEST(Grouping, EmptyColumnHasNoBands) {
  const auto g = group_criterion(
      Column{}, binding(Criterion::Frequency, MetricId::InvocationFrequency));
  EXPECT_TRUE(g.bands.empty());
}

TEST(Grouping, SigmaBandBoundaries) {
  const Column c{{"a", -1.01}, {"b", -1.0}, {"c", -0.51}, {"d", -0.5},
                 {"e", 0.5},   {"f", 0.51}, {"g", 1.0},   {"h", 1.01}};
  const auto b = partition_normal(c, 0.0, 1.0, 0.5);
  EXPECT_EQ(b.bands.at("a"), Modifier::Least);
  EXPECT_EQ(b.bands.at("b"), Modifier::Less);
  EXPECT_EQ(b.bands.at("c"), Modifier::Less);
  EXPECT_EQ(b.bands.at("d"), Modifier::Base);
  EXPECT_EQ(b.bands.at("e"), Modifier::Base);
  EXPECT_EQ(b.bands.at("f"), Modifier::More);
  EXPECT_EQ(b.bands.at("g"), Modifier::More);
  EXPECT_EQ(b.bands.at("h"), Modifier::Most);
  EXPECT_THROW(partition_normal(c, 0, 0, 0.5), std::invalid_argument);
  EXPECT_THROW(partition_normal(c, 0, 1, 0), std::invalid_argument);
}

TEST(Grouping, LargeNormalSampleUsesSigmaBands) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> d(100.0, 10.0);
  Column c;
  for (int i = 0; i < 200; ++i) c["t" + std::to_string(i)] = d(rng);
  const auto g = group_criterion(
      c, binding(Criterion::Expensiveness, MetricId::ExecutionTime));
  ASSERT_TRUE(g.normality.has_value());
  EXPECT_TRUE(g.normality->is_normal);
  EXPECT_EQ(g.method, BandingMethod::Sigma);
  for (Modifier m : kAllModifiers) EXPECT_FALSE(g.members(m).empty());
}

TEST(Grouping, SmallSamplesAlwaysUseQuantiles) {
  Column c;
  for (int i = 0; i < 19; ++i) c["t" + std::to_string(i)] = i;
  const auto b = binding(Criterion::Frequency, MetricId::InvocationFrequency);
  EXPECT_EQ(group_criterion(c, b).method, BandingMethod::Quantile);
  GroupingOptions o;
  o.min_normal_sample = 5;
  EXPECT_EQ(group_criterion(c, b, o).method, BandingMethod::Sigma);
}

TEST(Grouping, ReverseIsInvolution) {
  for (Modifier m : kAllModifiers) EXPECT_EQ(reverse(reverse(m)), m);
  EXPECT_EQ(reverse(Modifier::Least), Modifier::Most);
  EXPECT_EQ(reverse(Modifier::Base), Modifier::Base);
}

TEST(Grouping, DefaultDirections) {
  for (Criterion c : kAllCriteria) {
    EXPECT_EQ(default_direction(c), c == Criterion::Changeability
                                        ? Direction::HigherIsLess
                                        : Direction::HigherIsMore);
  }
  EXPECT_EQ(direction_from_name("higher-is-less"), Direction::HigherIsLess);
  EXPECT_FALSE(direction_from_name("sideways").has_value());
}

TEST(Grouping, GroupForRequiresBindings) {
  MetricSnapshot::Rows rows;
  rows["a"][MetricKind::builtin(MetricId::InvocationFrequency)] = 1;
  const MetricSnapshot snap(0, rows);
  const std::vector<CriterionBinding> bindings{
      binding(Criterion::Frequency, MetricId::InvocationFrequency)};
  EXPECT_NO_THROW(group_for(parse_filter("more frequent"), snap, bindings));
  EXPECT_THROW(group_for(parse_filter("more frequent U latent"), snap, bindings),
               MissingBinding);
}

TEST(Grouping, AbsentMetricYieldsEmptyGrouping) {
  MetricSnapshot::Rows rows;
  rows["a"][MetricKind::builtin(MetricId::InvocationFrequency)] = 1;
  const MetricSnapshot snap(0, rows);
  const std::vector<CriterionBinding> bindings{
      binding(Criterion::Latency, MetricId::InterArrivalTime)};
  const GroupingTable t = group(snap, bindings);
  ASSERT_NE(t.find(Criterion::Latency), nullptr);
  EXPECT_TRUE(t.at(Criterion::Latency).bands.empty());
  EXPECT_THROW(t.at(Criterion::Frequency), MissingCriterionGrouping);
  EXPECT_FALSE(t.band("a", Criterion::Latency).has_value());
}

}  // namespace
}  // namespace tigris
