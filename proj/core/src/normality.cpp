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

#include "tigris/normality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "tigris/errors.hpp"

namespace tigris {

double normal_cdf(double x, double mean, double sd) noexcept {
  return 0.5 * std::erfc(-(x - mean) / (sd * std::numbers::sqrt2));
}

double kolmogorov_survival(double x) noexcept {
  if (!(x > 0.0)) return 1.0;
  if (x < 1.0) {
    // Jacobi-theta form, converges fast for small x:
    // P(K <= x) = sqrt(2*pi)/x * sum_k exp(-(2k-1)^2 pi^2 / (8 x^2)).
    const double a = -std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    double sum = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(a * odd * odd);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    const double cdf = std::sqrt(2.0 * std::numbers::pi) / x * sum;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  // Alternating series: P(K > x) = 2 * sum_k (-1)^(k-1) exp(-2 k^2 x^2).
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

NormalityResult ks_normality_test(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw DegenerateSample("normality test needs at least 2 values, got " +
                           std::to_string(n));
  }
  std::vector<double> sorted(values.begin(), values.end());
  double sum = 0.0;
  for (double v : sorted) {
    if (!std::isfinite(v)) throw DegenerateSample("non-finite value");
    sum += v;
  }
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) throw DegenerateSample("zero variance");

  std::sort(sorted.begin(), sorted.end());
  const double dn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = normal_cdf(sorted[i], mean, sd);
    const double above = static_cast<double>(i + 1) / dn - f;
    const double below = f - static_cast<double>(i) / dn;
    d = std::max({d, above, below});
  }

  NormalityResult result;
  result.statistic = d;
  result.p_value = kolmogorov_survival(std::sqrt(dn) * d);
  result.is_normal = result.p_value > kNormalityAlpha;
  return result;
}

}  // namespace tigris
