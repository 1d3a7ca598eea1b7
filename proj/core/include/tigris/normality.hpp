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

#include <span>

namespace tigris {

/// Significance level of the normality decision.
inline constexpr double kNormalityAlpha = 0.05;

struct NormalityResult {
  /// Kolmogorov-Smirnov D.
  double statistic = 0.0;
  double p_value = 1.0;
  /// p_value > kNormalityAlpha.
  bool is_normal = false;
};

/// One-sample Kolmogorov-Smirnov test against a normal distribution whose
/// mean and standard deviation (n - 1 denominator) are estimated from the
/// sample. No Lilliefors correction is applied; the p-value comes from the
/// asymptotic Kolmogorov distribution, so the test leans towards accepting
/// normality for small samples.
///
/// Throws DegenerateSample for fewer than two values, non-finite values or
/// zero spread.
NormalityResult ks_normality_test(std::span<const double> values);

/// P(K > x) for the limiting Kolmogorov distribution K.
double kolmogorov_survival(double x) noexcept;

double normal_cdf(double x, double mean, double sd) noexcept;

}  // namespace tigris
