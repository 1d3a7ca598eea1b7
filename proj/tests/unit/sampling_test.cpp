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

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "tigris/errors.hpp"
#include "tigris/sampling.hpp"

namespace tigris {
namespace {

TEST(Sampling, Periods) {
  EXPECT_EQ(sampling_period(1.0), 1u);
  EXPECT_EQ(sampling_period(0.5), 2u);
  EXPECT_EQ(sampling_period(0.3), 3u);
  EXPECT_EQ(sampling_period(0.1), 10u);
  EXPECT_EQ(sampling_period(0.01), 100u);
  EXPECT_EQ(sampling_period(0.0), 0u);
  EXPECT_DOUBLE_EQ(achieved_rate(0.3), 1.0 / 3.0);
  EXPECT_EQ(achieved_rate(0.0), 0.0);
}

TEST(Sampling, InvalidRates) {
  EXPECT_THROW(sampling_period(-0.1), InvalidRate);
  EXPECT_THROW(sampling_period(1.5), InvalidRate);
  EXPECT_THROW(sampling_period(std::numeric_limits<double>::quiet_NaN()),
               InvalidRate);
  EXPECT_THROW(SystematicSampler(2.0), InvalidRate);
}

TEST(Sampling, SystematicPick) {
  static_assert(systematic_pick(2, 2));
  static_assert(!systematic_pick(1, 2));
  static_assert(!systematic_pick(5, 0));
  static_assert(!systematic_pick(0, 1));
}

TEST(Sampling, HalfRatePicksEvenOccurrences) {
  SystematicSampler s(0.5);
  std::vector<std::uint64_t> picked;
  for (int i = 0; i < 10; ++i) {
    const auto d = s.should_sample("findVets");
    EXPECT_EQ(d.occurrence, static_cast<std::uint64_t>(i + 1));
    if (d.sampled) picked.push_back(d.occurrence);
  }
  EXPECT_EQ(picked, (std::vector<std::uint64_t>{2, 4, 6, 8, 10}));
}

TEST(Sampling, CountersArePerType) {
  SystematicSampler s(0.5);
  EXPECT_FALSE(s.should_sample("a").sampled);
  EXPECT_FALSE(s.should_sample("b").sampled);
  EXPECT_TRUE(s.should_sample("a").sampled);
  EXPECT_EQ(s.occurrences("a"), 2u);
  EXPECT_EQ(s.occurrences("b"), 1u);
  EXPECT_EQ(s.occurrences("c"), 0u);
}

TEST(Sampling, ResetAndRetain) {
  SystematicSampler s(0.5);
  s.should_sample("a");
  s.should_sample("b");
  s.reset("a");
  EXPECT_EQ(s.occurrences("a"), 0u);
  EXPECT_FALSE(s.should_sample("a").sampled);
  s.retain_only({"a"});
  EXPECT_EQ(s.occurrences("b"), 0u);
  EXPECT_EQ(s.occurrences("a"), 1u);
}

TEST(Sampling, RateChangeKeepsCounters) {
  SystematicSampler s(1.0);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(s.should_sample("a").sampled);
  s.set_rate(0.25);
  EXPECT_EQ(s.period(), 4u);
  EXPECT_TRUE(s.should_sample("a").sampled);  // occurrence 4
  s.set_rate(0.0);
  for (int i = 0; i < 10; ++i) EXPECT_FALSE(s.should_sample("a").sampled);
  EXPECT_THROW(s.set_rate(-1), InvalidRate);
  EXPECT_EQ(s.rate(), 0.0);
}

TEST(Sampling, FloorOfNOverP) {
  for (double rate : {1.0, 0.5, 0.3, 0.1, 0.07}) {
    SystematicSampler s(rate);
    for (std::uint64_t n : {1u, 9u, 100u, 1001u}) {
      s.reset("x");
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < n; ++i) hits += s.should_sample("x").sampled;
      EXPECT_EQ(hits, n / sampling_period(rate)) << rate << " " << n;
    }
  }
}

TEST(Sampling, ConcurrentCallsSampleExactly) {
  SystematicSampler s(0.1);
  std::atomic<std::uint64_t> hits{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 25000; ++i) hits += s.should_sample("hot").sampled;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(s.occurrences("hot"), 200000u);
  EXPECT_EQ(hits.load(), 20000u);
}

}  // namespace
}  // namespace tigris
