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

#include <atomic>
#include <cstdint>
#include <memory>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tigris {

/// Systematic sampling period for a rate in [0, 1]: round(1 / rate), or 0
/// (never sample) when rate is 0. Throws InvalidRate outside [0, 1] or NaN.
std::uint64_t sampling_period(double rate);

/// True when the 1-based `occurrence` is a multiple of `period`. With period
/// p the first sampled occurrence is the p-th.
constexpr bool systematic_pick(std::uint64_t occurrence,
                               std::uint64_t period) noexcept {
  return period != 0 && occurrence != 0 && occurrence % period == 0;
}

/// Fraction of occurrences actually sampled at `rate` (1 / period).
double achieved_rate(double rate);

struct SampleDecision {
  bool sampled = false;
  /// 1-based occurrence index of this call for its event type.
  std::uint64_t occurrence = 0;
};

/// Every-p-th sampler keyed by event type. Thread-safe: counters are atomics
/// and calls for different types never contend beyond a shared lock.
class SystematicSampler {
 public:
  /// Throws InvalidRate.
  explicit SystematicSampler(double rate = 1.0);

  /// Advances the counter of `event_type` and decides.
  SampleDecision should_sample(std::string_view event_type);

  /// Throws InvalidRate. Counters are kept.
  void set_rate(double rate);
  double rate() const noexcept { return rate_.load(); }
  std::uint64_t period() const noexcept { return period_.load(); }

  std::uint64_t occurrences(std::string_view event_type) const;
  /// Forget the counter, e.g. when the type leaves the relevance set.
  void reset(std::string_view event_type);
  /// Drops the counters of every type not in `keep`.
  void retain_only(const std::set<std::string>& keep);

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::atomic<double> rate_;
  std::atomic<std::uint64_t> period_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<std::atomic<std::uint64_t>>,
                     StringHash, std::equal_to<>>
      counters_;
};

}  // namespace tigris
