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

#include <fstream>
#include <map>

#include "support.hpp"
#include "tigris/config.hpp"
#include "tigris/errors.hpp"
#include "tigris/glob.hpp"

namespace tigris {
namespace {

constexpr const char* kListing = R"(# clinic monitoring
criteria = "(more frequent U most expensive) & least changeable"
bindings = frequent:INVOCATION_FREQUENCY, expensive:EXECUTION_TIME,
           changeable:COMPUTATION_PATTERN
samplingPercentage = 0.5
analysisFixedDelay = 120
allowed = "org.sample.petclinic.*"
denied = "org.sample.petclinic.model.*"   # entities are not monitored
)";

EnvLookup fake_env(std::map<std::string, std::string> vars) {
  return [vars = std::move(vars)](const std::string& name)
             -> std::optional<std::string> {
    auto it = vars.find(name);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
}

std::string config_error_key(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  ADD_FAILURE() << "no ConfigError for:\n" << text;
  return {};
}

TEST(Config, ListingValues) {
  const MonitoringConfig c = parse_config(kListing);
  EXPECT_EQ(c.sampling_percentage, 0.5);
  EXPECT_EQ(c.analysis_fixed_delay_s, 120);
  EXPECT_EQ(c.criteria, "(more frequent U most expensive) & least changeable");
  EXPECT_EQ(referenced_criteria(c.filter).size(), 3u);
  ASSERT_EQ(c.bindings.size(), 3u);
  ASSERT_NE(c.binding_for(Criterion::Changeability), nullptr);
  EXPECT_EQ(c.binding_for(Criterion::Changeability)->direction,
            Direction::HigherIsLess);
  EXPECT_EQ(c.binding_for(Criterion::Frequency)->metric,
            MetricKind::builtin(MetricId::InvocationFrequency));
  EXPECT_EQ(c.allowed_patterns, std::vector<std::string>{"org.sample.petclinic.*"});
  EXPECT_EQ(c.denied_patterns.size(), 1u);
  EXPECT_EQ(c.sigma_k, 0.5);
  EXPECT_EQ(c.session_cap, 100000u);
  EXPECT_FALSE(c.static_metric_file.has_value());
}

TEST(Config, ScanScopeFromListing) {
  const MonitoringConfig c = parse_config(kListing);
  EXPECT_FALSE(admit_event(c, "org.sample.petclinic.model.Owner.getName()"));
  EXPECT_TRUE(admit_event(
      c, "org.sample.petclinic.service.ClinicService.findVets()"));
  EXPECT_FALSE(admit_event(c, "com.other.Thing.run()"));
}

TEST(Config, EmptyScopeAdmitsEverything) {
  MonitoringConfig c;
  EXPECT_TRUE(admit_event(c, "anything()"));
  EXPECT_TRUE(admit_event(c, ""));
}

TEST(Config, RequiredKeys) {
  EXPECT_EQ(config_error_key("bindings = frequent:INVOCATION_FREQUENCY\n"
                             "samplingPercentage = 1\nanalysisFixedDelay = 5\n"),
            "criteria");
  EXPECT_EQ(config_error_key("criteria = frequent\n"
                             "bindings = frequent:INVOCATION_FREQUENCY\n"
                             "analysisFixedDelay = 5\n"),
            "samplingPercentage");
}

TEST(Config, RejectsBadValues) {
  const std::string head =
      "criteria = frequent\nbindings = frequent:INVOCATION_FREQUENCY\n";
  EXPECT_EQ(config_error_key(head + "samplingPercentage = 1.2\n"
                                    "analysisFixedDelay = 5\n"),
            "samplingPercentage");
  EXPECT_EQ(config_error_key(head + "samplingPercentage = half\n"
                                    "analysisFixedDelay = 5\n"),
            "samplingPercentage");
  EXPECT_EQ(config_error_key(head + "samplingPercentage = 1\n"
                                    "analysisFixedDelay = 0\n"),
            "analysisFixedDelay");
  EXPECT_EQ(config_error_key(head + "samplingPercentage = 1\n"
                                    "analysisFixedDelay = 5\nsigma_k = -1\n"),
            "sigma_k");
  EXPECT_EQ(config_error_key(head + "samplingPercentage = 1\n"
                                    "analysisFixedDelay = 5\nretries = 3\n"),
            "retries");
  EXPECT_EQ(config_error_key(head + "samplingPercentage = 1\n"
                                    "samplingPercentage = 1\n"
                                    "analysisFixedDelay = 5\n"),
            "samplingPercentage");
  EXPECT_EQ(config_error_key("criteria = \"more frequent U\"\n"
                             "bindings = frequent:INVOCATION_FREQUENCY\n"
                             "samplingPercentage = 1\nanalysisFixedDelay = 5\n"),
            "criteria");
  EXPECT_EQ(config_error_key("criteria = frequent\n"
                             "bindings = frequent\n"
                             "samplingPercentage = 1\nanalysisFixedDelay = 5\n"),
            "bindings");
  EXPECT_EQ(config_error_key("criteria = frequent\n"
                             "bindings = frequent:INVOCATION_FREQUENCY, "
                             "frequent:ERROR_LEVEL\n"
                             "samplingPercentage = 1\nanalysisFixedDelay = 5\n"),
            "bindings");
  EXPECT_EQ(config_error_key("just some words\n"), "");
}

TEST(Config, DiagnosticsNameTheLine) {
  try {
    parse_config("criteria = frequent\nbindings = frequent:INVOCATION_FREQUENCY\n"
                 "samplingPercentage = 7\nanalysisFixedDelay = 5\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
        << e.what();
  }
}

TEST(Config, UnboundCriterion) {
  try {
    parse_config("criteria = \"more frequent U latent\"\n"
                 "bindings = frequent:INVOCATION_FREQUENCY\n"
                 "samplingPercentage = 1\nanalysisFixedDelay = 5\n");
    FAIL();
  } catch (const UnboundCriterion& e) {
    EXPECT_EQ(e.key(), "bindings");
    EXPECT_NE(std::string(e.what()).find("latent"), std::string::npos);
  }
}

TEST(Config, UnknownMetric) {
  EXPECT_THROW(parse_config("criteria = frequent\n"
                            "bindings = frequent:CALLS_PER_MINUTE\n"
                            "samplingPercentage = 1\nanalysisFixedDelay = 5\n"),
               UnknownMetricBinding);
  EXPECT_THROW(parse_config("criteria = maintainable\n"
                            "bindings = maintainable:STATIC(cyclomatic)\n"
                            "samplingPercentage = 1\nanalysisFixedDelay = 5\n"),
               UnknownMetricBinding);
}

TEST(Config, StaticBindingsAndRelativePaths) {
  const MonitoringConfig c = parse_config(
      "criteria = \"least maintainable\"\n"
      "bindings = maintainable:STATIC(cyclomatic):higher-is-less\n"
      "samplingPercentage = 1\nanalysisFixedDelay = 5\n"
      "staticMetricFile = metrics.csv\n",
      empty_environment(), "/etc/tigris");
  EXPECT_EQ(c.static_metric_file, std::filesystem::path("/etc/tigris/metrics.csv"));
  EXPECT_EQ(c.bindings[0].metric.static_name(), "cyclomatic");
  EXPECT_EQ(c.bindings[0].direction, Direction::HigherIsLess);
  const auto required = c.required_metrics();
  EXPECT_NE(std::find(required.begin(), required.end(),
                      MetricKind::static_metric("cyclomatic")),
            required.end());
}

TEST(Config, EnvironmentOverrides) {
  EXPECT_EQ(env_override_name("samplingPercentage"), "TIGRIS_SAMPLINGPERCENTAGE");
  const MonitoringConfig c = parse_config(
      kListing, fake_env({{"TIGRIS_SAMPLINGPERCENTAGE", "0.1"},
                          {"TIGRIS_SESSION_CAP", "10"}}));
  EXPECT_EQ(c.sampling_percentage, 0.1);
  EXPECT_EQ(c.session_cap, 10u);
  try {
    parse_config(kListing, fake_env({{"TIGRIS_ANALYSISFIXEDDELAY", "soon"}}));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "analysisFixedDelay");
    EXPECT_NE(std::string(e.what()).find("TIGRIS_ANALYSISFIXEDDELAY"),
              std::string::npos);
  }
}

TEST(Config, TextRoundTrip) {
  const MonitoringConfig a = parse_config(kListing);
  const MonitoringConfig b = parse_config(to_config_text(a));
  EXPECT_EQ(a.filter, b.filter);
  EXPECT_EQ(a.bindings, b.bindings);
  EXPECT_EQ(a.sampling_percentage, b.sampling_percentage);
  EXPECT_EQ(a.analysis_fixed_delay_s, b.analysis_fixed_delay_s);
  EXPECT_EQ(a.allowed_patterns, b.allowed_patterns);
  EXPECT_EQ(a.denied_patterns, b.denied_patterns);
  EXPECT_EQ(a.session_cap, b.session_cap);
}

TEST(Config, LoadFromFile) {
  testing::TempDir dir;
  {
    std::ofstream out(dir / "tigris.conf");
    out << kListing;
  }
  EXPECT_EQ(load_config(dir / "tigris.conf", empty_environment())
                .analysis_fixed_delay_s,
            120);
  EXPECT_THROW(load_config(dir / "nope.conf", empty_environment()), IoError);
}

TEST(Config, BindingFormatRoundTrip) {
  for (const char* text :
       {"frequent:INVOCATION_FREQUENCY", "changeable:COMPUTATION_PATTERN",
        "maintainable:STATIC(loc:v2):higher-is-less",
        "latent:INTER_ARRIVAL_TIME:higher-is-more"}) {
    const CriterionBinding b = parse_binding(text);
    EXPECT_EQ(parse_binding(format_binding(b)), b) << text;
  }
  EXPECT_EQ(parse_binding("maintainable:STATIC(loc:v2)").metric.static_name(),
            "loc:v2");
  EXPECT_THROW(parse_binding("frequent:INVOCATION_FREQUENCY:up"), ConfigError);
  EXPECT_THROW(parse_binding("speedy:EXECUTION_TIME"), ConfigError);
}

TEST(Glob, Dialect) {
  EXPECT_TRUE(glob_match("*", ""));
  EXPECT_TRUE(glob_match("*", "a.b.c"));
  EXPECT_TRUE(glob_match("org.*.find*()", "org.sample.petclinic.findVets()"));
  EXPECT_TRUE(glob_match("a*b*c", "abbbc"));
  EXPECT_FALSE(glob_match("a*b*c", "abbb"));
  EXPECT_TRUE(glob_match("exact", "exact"));
  EXPECT_FALSE(glob_match("exact", "exactly"));
  EXPECT_FALSE(glob_match("?", "x"));
  EXPECT_TRUE(glob_match("?", "?"));
  EXPECT_TRUE(glob_match("[ab]", "[ab]"));
  EXPECT_TRUE(glob_match("**a", "a"));
}

TEST(Glob, DenyWins) {
  const ScanScope scope({"org.*"}, {"org.secret.*", "*.internal()"});
  EXPECT_TRUE(scope.admits("org.api.get()"));
  EXPECT_FALSE(scope.admits("org.secret.key()"));
  EXPECT_FALSE(scope.admits("org.api.internal()"));
  EXPECT_FALSE(scope.admits("net.api.get()"));
  const ScanScope deny_only({}, {"*Test*"});
  EXPECT_TRUE(deny_only.admits("Service.run()"));
  EXPECT_FALSE(deny_only.admits("ServiceTest.run()"));
}

}  // namespace
}  // namespace tigris
