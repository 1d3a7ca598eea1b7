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

// Deterministic event-log generators.
//
//   running-example[:n]  Five clinic methods. The first 120 s reproduce the
//                        collected-metrics table (frequency 12/2/50/200/100,
//                        mean duration 180/500/250/300/200, return-size
//                        stddev 6/0/12/200/90). From 120 s on, the 16-row
//                        call sequence of the sampling table follows, then
//                        further findVets() calls until it reached n
//                        occurrences in that phase (default 40).
//   workload-shift       Ten types over three 120 s segments whose frequency
//                        ordering changes from segment to segment.
//   uniform[:n]          n events (default 1000) over eight types with
//                        seeded random fields.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tigris/config.hpp"
#include "tigris/metrics.hpp"

namespace tigris {

inline constexpr std::uint64_t kDefaultFixtureSeed = 20240611;

namespace running_example {
inline constexpr std::string_view kFindOwner = "ClinicService.findOwner(args)";
inline constexpr std::string_view kUpdateOwner =
    "ClinicService.updateOwner(args)";
inline constexpr std::string_view kNewVisit = "VisitController.newVisit(args)";
inline constexpr std::string_view kFindVets = "ClinicService.findVets()";
inline constexpr std::string_view kFindAll = "OwnerRepository.findAll()";
/// Timestamp of the first event after the collected-metrics phase.
inline constexpr std::int64_t kSecondPhaseNs = 120'000'000'000;
inline constexpr std::size_t kDefaultFindVetsCalls = 40;
}  // namespace running_example

std::vector<EventRecord> running_example_log(
    std::size_t find_vets_calls = running_example::kDefaultFindVetsCalls);
std::string running_example_config_text();

inline constexpr std::int64_t kWorkloadSegmentNs = 120'000'000'000;
inline constexpr std::size_t kWorkloadTypes = 10;
std::string workload_type_name(std::size_t i);
/// Calls of type i within segment s (0, 1 or 2).
std::uint64_t workload_segment_calls(std::size_t type, std::size_t segment);
std::vector<EventRecord> workload_shift_log(
    std::uint64_t seed = kDefaultFixtureSeed);
std::string workload_shift_config_text();

std::vector<EventRecord> uniform_log(std::size_t n,
                                     std::uint64_t seed = kDefaultFixtureSeed);

/// Names accepted by generate_fixture, without size suffixes.
std::vector<std::string> fixture_names();
/// Throws UnknownFixture.
std::vector<EventRecord> generate_fixture(
    std::string_view spec, std::uint64_t seed = kDefaultFixtureSeed);
/// Bundled config matching a fixture. Throws UnknownFixture.
std::string fixture_config_text(std::string_view spec);

}  // namespace tigris
