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

// Monitoring configuration, read from a line-oriented property file:
//
//   # comment
//   criteria           = "(more frequent U most expensive) & least changeable"
//   bindings           = frequent:INVOCATION_FREQUENCY, expensive:EXECUTION_TIME,
//                        changeable:COMPUTATION_PATTERN:higher-is-less
//   samplingPercentage = 0.5
//   analysisFixedDelay = 120
//   allowed            = "org.sample.petclinic.*"
//   denied             = "org.sample.petclinic.model.*"
//   staticMetricFile   = "petclinic.csv"
//   sigma_k            = 0.5
//   session_cap        = 100000
//
// Values may be double-quoted; list values are comma-separated. A line ending
// in a comma continues on the next line. Every key can be overridden by the
// environment variable TIGRIS_<KEY uppercased>, e.g. TIGRIS_SAMPLINGPERCENTAGE.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tigris/dsl.hpp"
#include "tigris/glob.hpp"
#include "tigris/grouping.hpp"

namespace tigris {

struct MonitoringConfig {
  std::string criteria;
  FilterExpr filter = FilterExpr::leaf(Modifier::Base, Criterion::Frequency);
  std::vector<CriterionBinding> bindings;
  double sampling_percentage = 1.0;
  std::int64_t analysis_fixed_delay_s = 120;
  std::vector<std::string> allowed_patterns;
  std::vector<std::string> denied_patterns;
  std::optional<std::filesystem::path> static_metric_file;
  double sigma_k = 0.5;
  std::size_t session_cap = 100000;

  const CriterionBinding* binding_for(Criterion c) const noexcept;
  GroupingOptions grouping_options() const;
  ScanScope scan_scope() const;
  /// Metrics the coarse phase must maintain for the bindings.
  std::vector<MetricKind> required_metrics() const;
};

using EnvLookup =
    std::function<std::optional<std::string>(const std::string& name)>;

/// Reads the real process environment.
EnvLookup process_environment();
/// Never overrides anything.
EnvLookup empty_environment();

/// Name of the environment variable overriding `key`.
std::string env_override_name(std::string_view key);

/// Parses and validates. Relative staticMetricFile paths resolve against
/// `base_dir`. Throws ConfigError (or its subclass UnboundCriterion) and
/// UnknownMetricBinding.
MonitoringConfig parse_config(std::string_view text,
                              const EnvLookup& env = empty_environment(),
                              const std::filesystem::path& base_dir = {});

/// Throws IoError if the file cannot be read, otherwise as parse_config.
MonitoringConfig load_config(const std::filesystem::path& path,
                             const EnvLookup& env = process_environment());

/// Property-file text that parses back to an equivalent configuration.
std::string to_config_text(const MonitoringConfig& config);

/// Whether the coarse phase should observe `event_type` at all.
bool admit_event(const MonitoringConfig& config, std::string_view event_type);

/// Parses one `criterion:METRIC[:direction]` binding. Throws ConfigError or
/// UnknownMetricBinding.
CriterionBinding parse_binding(std::string_view text);
std::string format_binding(const CriterionBinding& binding);

}  // namespace tigris
