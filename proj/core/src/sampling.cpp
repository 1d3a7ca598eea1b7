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

#include "tigris/sampling.hpp"

#include <cmath>
#include <mutex>

#include "tigris/errors.hpp"

namespace tigris {

std::uint64_t sampling_period(double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw InvalidRate("sampling rate must be within [0, 1], got " +
                      std::to_string(rate));
  }
  if (rate == 0.0) return 0;
  return static_cast<std::uint64_t>(std::llround(1.0 / rate));
}

double achieved_rate(double rate) {
  const std::uint64_t p = sampling_period(rate);
  return p == 0 ? 0.0 : 1.0 / static_cast<double>(p);
}

SystematicSampler::SystematicSampler(double rate)
    : rate_(rate), period_(sampling_period(rate)) {}

SampleDecision SystematicSampler::should_sample(std::string_view event_type) {
  std::shared_ptr<std::atomic<std::uint64_t>> counter;
  {
    std::shared_lock lock(mu_);
    if (auto it = counters_.find(event_type); it != counters_.end()) {
      counter = it->second;
    }
  }
  if (!counter) {
    std::unique_lock lock(mu_);
    auto [it, inserted] = counters_.try_emplace(std::string(event_type));
    if (inserted) it->second = std::make_shared<std::atomic<std::uint64_t>>(0);
    counter = it->second;
  }
  const std::uint64_t occurrence = counter->fetch_add(1) + 1;
  return {systematic_pick(occurrence, period_.load()), occurrence};
}

void SystematicSampler::set_rate(double rate) {
  const std::uint64_t p = sampling_period(rate);
  rate_.store(rate);
  period_.store(p);
}

std::uint64_t SystematicSampler::occurrences(std::string_view event_type) const {
  std::shared_lock lock(mu_);
  auto it = counters_.find(event_type);
  return it == counters_.end() ? 0 : it->second->load();
}

void SystematicSampler::reset(std::string_view event_type) {
  std::unique_lock lock(mu_);
  if (auto it = counters_.find(event_type); it != counters_.end()) {
    counters_.erase(it);
  }
}

void SystematicSampler::retain_only(const std::set<std::string>& keep) {
  std::unique_lock lock(mu_);
  std::erase_if(counters_,
                [&](const auto& entry) { return !keep.contains(entry.first); });
}

}  // namespace tigris
