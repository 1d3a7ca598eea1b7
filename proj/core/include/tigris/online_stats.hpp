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

namespace tigris {

/// Streaming mean/variance accumulator (Welford). Keeps O(1) state no matter
/// how many samples are added.
class OnlineStats {
 public:
  /// Throws InvalidSample for NaN.
  void add(double x);

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Sum of squared deviations from the running mean.
  double m2() const noexcept { return m2_; }
  /// 0 when empty.
  double min() const noexcept { return count_ ? min_ : 0.0; }
  double max() const noexcept { return count_ ? max_ : 0.0; }

  /// Population variance (divides by count); 0 when empty.
  double variance() const noexcept;
  double stddev() const noexcept;
  /// Divides by count - 1; 0 with fewer than two samples.
  double sample_variance() const noexcept;

  friend bool operator==(const OnlineStats&, const OnlineStats&) = default;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

OnlineStats welford_update(OnlineStats state, double x);

}  // namespace tigris
