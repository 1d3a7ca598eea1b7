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

#include "tigris/fixtures.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <random>

#include "tigris/errors.hpp"

namespace tigris {
namespace {

namespace rx = running_example;

struct ExampleType {
  std::string_view id;
  std::uint64_t calls;
  std::int64_t duration_ns;
  std::uint64_t return_base;
  std::uint64_t return_spread;
};

// Return sizes alternate base + spread, base - spread, so after an even number
// of calls the population stddev is exactly `return_spread`.
constexpr std::array<ExampleType, 5> kExampleTypes{{
    {rx::kFindOwner, 12, 180, 100, 6},
    {rx::kUpdateOwner, 2, 500, 64, 0},
    {rx::kNewVisit, 50, 250, 500, 12},
    {rx::kFindVets, 200, 300, 1000, 200},
    {rx::kFindAll, 100, 200, 400, 90},
}};

constexpr std::array<std::string_view, 16> kSamplingSequence{
    rx::kNewVisit,  rx::kFindAll,     rx::kFindVets,    rx::kFindVets,
    rx::kFindVets,  rx::kUpdateOwner, rx::kFindAll,     rx::kFindVets,
    rx::kNewVisit,  rx::kUpdateOwner, rx::kFindVets,    rx::kFindVets,
    rx::kFindVets,  rx::kUpdateOwner, rx::kFindVets,    rx::kFindAll,
};

class ExampleEmitter {
 public:
  EventRecord next(std::size_t type_index, std::int64_t ts) {
    const ExampleType& t = kExampleTypes[type_index];
    const std::uint64_t occ = ++occurrences_[type_index];
    EventRecord e;
    e.event_type_id = std::string(t.id);
    e.timestamp_ns = ts;
    e.duration_ns = t.duration_ns;
    e.return_size_bytes =
        occ % 2 == 1 ? t.return_base + t.return_spread
                     : t.return_base - t.return_spread;
    e.input_digest = (static_cast<std::uint64_t>(type_index) << 32) | (occ % 4);
    e.session_id = "session-" + std::to_string(occ % 7);
    return e;
  }

 private:
  std::array<std::uint64_t, kExampleTypes.size()> occurrences_{};
};

std::size_t example_index(std::string_view id) {
  for (std::size_t i = 0; i < kExampleTypes.size(); ++i) {
    if (kExampleTypes[i].id == id) return i;
  }
  return 0;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[draw(rng, i)]);
  }
}

constexpr std::array<std::int64_t, kWorkloadTypes> kWorkloadDurations{
    120, 80, 300, 95, 60, 150, 70, 110, 90, 400};

struct ParsedSpec {
  std::string name;
  std::optional<std::size_t> size;
};

ParsedSpec parse_spec(std::string_view spec) {
  ParsedSpec p;
  const auto colon = spec.find(':');
  p.name = std::string(spec.substr(0, colon));
  if (colon != std::string_view::npos) {
    const std::string_view num = spec.substr(colon + 1);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty()) {
      throw UnknownFixture("bad size in fixture spec '" + std::string(spec) +
                           "'");
    }
    p.size = n;
  }
  return p;
}

}  // namespace

std::vector<EventRecord> running_example_log(std::size_t find_vets_calls) {
  std::size_t listed_find_vets = 0;
  for (auto id : kSamplingSequence) listed_find_vets += id == rx::kFindVets;
  if (find_vets_calls < listed_find_vets) {
    throw UnknownFixture("running-example needs at least " +
                         std::to_string(listed_find_vets) + " findVets calls");
  }

  std::vector<EventRecord> out;
  ExampleEmitter emit;
  constexpr std::int64_t kStepA = 300'000'000;
  std::int64_t ts = 0;
  for (std::uint64_t round = 0; round < 200; ++round) {
    for (std::size_t i = 0; i < kExampleTypes.size(); ++i) {
      if (round < kExampleTypes[i].calls) {
        out.push_back(emit.next(i, ts));
        ts += kStepA;
      }
    }
  }

  constexpr std::int64_t kStepB = 250'000'000;
  ts = rx::kSecondPhaseNs;
  for (auto id : kSamplingSequence) {
    out.push_back(emit.next(example_index(id), ts));
    ts += kStepB;
  }
  const std::size_t vets = example_index(rx::kFindVets);
  for (std::size_t k = listed_find_vets; k < find_vets_calls; ++k) {
    out.push_back(emit.next(vets, ts));
    ts += kStepB;
  }
  return out;
}

std::string running_example_config_text() {
  return "# Running example: memoization candidates in a clinic application.\n"
         "criteria = \"(more frequent U most expensive) & least changeable\"\n"
         "bindings = frequent:INVOCATION_FREQUENCY, expensive:EXECUTION_TIME,\n"
         "           changeable:COMPUTATION_PATTERN\n"
         "samplingPercentage = 0.5\n"
         "analysisFixedDelay = 120\n";
}

std::string workload_type_name(std::size_t i) {
  return "org.sample.shop.Service" + std::to_string(i) + ".handle()";
}

std::uint64_t workload_segment_calls(std::size_t type, std::size_t segment) {
  switch (segment) {
    case 0:
      return 10 * (kWorkloadTypes - type);
    case 1:
      return type >= 3 && type <= 5 ? 300 : 10;
    case 2:
      return type >= 6 && type <= 8 ? 800 : 10;
    default:
      return 0;
  }
}

std::vector<EventRecord> workload_shift_log(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EventRecord> out;
  for (std::size_t seg = 0; seg < 3; ++seg) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < kWorkloadTypes; ++i) {
      order.insert(order.end(), workload_segment_calls(i, seg), i);
    }
    shuffle(order, rng);
    const std::int64_t step =
        kWorkloadSegmentNs / static_cast<std::int64_t>(order.size());
    const std::int64_t start = static_cast<std::int64_t>(seg) * kWorkloadSegmentNs;
    for (std::size_t j = 0; j < order.size(); ++j) {
      const std::size_t i = order[j];
      EventRecord e;
      e.event_type_id = workload_type_name(i);
      e.timestamp_ns = start + static_cast<std::int64_t>(j) * step;
      e.duration_ns = kWorkloadDurations[i];
      e.return_size_bytes = 64 + draw(rng, 512);
      e.input_digest = rng();
      e.active_threads = static_cast<std::uint32_t>(1 + draw(rng, 4));
      e.session_id = "user-" + std::to_string(draw(rng, 50));
      e.raised_error = draw(rng, 100) == 0;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::string workload_shift_config_text() {
  return "criteria = \"more frequent U most expensive\"\n"
         "bindings = frequent:INVOCATION_FREQUENCY, expensive:EXECUTION_TIME\n"
         "samplingPercentage = 0.25\n"
         "analysisFixedDelay = 120\n";
}

std::vector<EventRecord> uniform_log(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EventRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    EventRecord e;
    e.event_type_id =
        "org.sample.uniform.Op" + std::to_string(draw(rng, 8)) + ".run()";
    e.timestamp_ns = static_cast<std::int64_t>(i) * 1'000'000;
    e.duration_ns = static_cast<std::int64_t>(1000 + draw(rng, 9000));
    e.return_size_bytes = draw(rng, 4096);
    e.input_digest = rng();
    e.active_threads = static_cast<std::uint32_t>(1 + draw(rng, 8));
    e.session_id = "s" + std::to_string(draw(rng, 100));
    e.raised_error = draw(rng, 50) == 0;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> fixture_names() {
  return {"running-example", "workload-shift", "uniform"};
}

std::vector<EventRecord> generate_fixture(std::string_view spec,
                                          std::uint64_t seed) {
  const ParsedSpec p = parse_spec(spec);
  if (p.name == "running-example") {
    return running_example_log(
        p.size.value_or(running_example::kDefaultFindVetsCalls));
  }
  if (p.name == "workload-shift") {
    if (p.size) throw UnknownFixture("workload-shift takes no size");
    return workload_shift_log(seed);
  }
  if (p.name == "uniform") return uniform_log(p.size.value_or(1000), seed);
  throw UnknownFixture("unknown fixture '" + p.name + "'");
}

std::string fixture_config_text(std::string_view spec) {
  const ParsedSpec p = parse_spec(spec);
  if (p.name == "running-example") return running_example_config_text();
  if (p.name == "workload-shift") return workload_shift_config_text();
  if (p.name == "uniform") {
    return "criteria = \"more frequent U most expensive\"\n"
           "bindings = frequent:INVOCATION_FREQUENCY, expensive:EXECUTION_TIME\n"
           "samplingPercentage = 0.1\n"
           "analysisFixedDelay = 60\n";
  }
  throw UnknownFixture("unknown fixture '" + p.name + "'");
}

}  // namespace tigris
