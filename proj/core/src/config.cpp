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

#include "tigris/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "tigris/errors.hpp"

namespace tigris {
namespace {

constexpr std::array<std::string_view, 9> kKeys = {
    "criteria", "bindings",         "samplingPercentage",
    "analysisFixedDelay", "allowed", "denied",
    "staticMetricFile",   "sigma_k", "session_cap",
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Drops a trailing `# comment` that is not inside quotes.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string unquote(std::string_view key, std::string_view value) {
  value = trim(value);
  if (!value.empty() && value.front() == '"') {
    if (value.size() < 2 || value.back() != '"') {
      throw ConfigError(std::string(key), "unterminated quoted string");
    }
    return std::string(value.substr(1, value.size() - 2));
  }
  return std::string(value);
}

std::vector<std::string> split_list(std::string_view key,
                                    std::string_view value) {
  std::vector<std::string> items;
  bool quoted = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= value.size(); ++i) {
    if (i < value.size() && value[i] == '"') quoted = !quoted;
    if (i == value.size() || (value[i] == ',' && !quoted)) {
      std::string item = unquote(key, value.substr(start, i - start));
      if (!trim(item).empty()) items.push_back(std::move(item));
      start = i + 1;
    }
  }
  if (quoted) throw ConfigError(std::string(key), "unterminated quoted string");
  return items;
}

double parse_real(std::string_view key, std::string_view value) {
  const std::string text = unquote(key, value);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(out)) {
    throw ConfigError(std::string(key), "'" + text + "' is not a number");
  }
  return out;
}

std::int64_t parse_integer(std::string_view key, std::string_view value) {
  const std::string text = unquote(key, value);
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(std::string(key), "'" + text + "' is not an integer");
  }
  return out;
}

struct RawEntry {
  std::string value;
  std::string origin;  // "line N" or the environment variable name
};

std::map<std::string, RawEntry, std::less<>> read_entries(
    std::string_view text) {
  std::map<std::string, RawEntry, std::less<>> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::string pending_key;
  std::string pending_value;
  std::size_t pending_line = 0;

  auto commit = [&]() {
    if (pending_key.empty()) return;
    entries[pending_key] = {std::string(trim(pending_value)),
                            "line " + std::to_string(pending_line)};
    pending_key.clear();
    pending_value.clear();
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(strip_comment(raw));
    if (!pending_key.empty()) {
      pending_value += ' ';
      pending_value += line;
      if (line.empty() || line.back() != ',') commit();
      continue;
    }
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) +
                                ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError(key, "line " + std::to_string(line_no) +
                                 ": unknown key");
    }
    if (entries.contains(key)) {
      throw ConfigError(key, "line " + std::to_string(line_no) +
                                 ": key given more than once");
    }
    pending_key = key;
    pending_value = std::string(trim(line.substr(eq + 1)));
    pending_line = line_no;
    if (pending_value.empty() || pending_value.back() != ',') commit();
  }
  commit();
  return entries;
}

}  // namespace

// ---------------------------------------------------------------------------

const CriterionBinding* MonitoringConfig::binding_for(
    Criterion c) const noexcept {
  auto it = std::find_if(bindings.begin(), bindings.end(),
                         [c](const auto& b) { return b.criterion == c; });
  return it == bindings.end() ? nullptr : &*it;
}

GroupingOptions MonitoringConfig::grouping_options() const {
  GroupingOptions options;
  options.sigma_k = sigma_k;
  return options;
}

ScanScope MonitoringConfig::scan_scope() const {
  return ScanScope(allowed_patterns, denied_patterns);
}

std::vector<MetricKind> MonitoringConfig::required_metrics() const {
  std::vector<MetricKind> out;
  for (const auto& b : bindings) {
    if (std::find(out.begin(), out.end(), b.metric) == out.end()) {
      out.push_back(b.metric);
    }
  }
  return out;
}

EnvLookup process_environment() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

EnvLookup empty_environment() {
  return [](const std::string&) -> std::optional<std::string> {
    return std::nullopt;
  };
}

std::string env_override_name(std::string_view key) {
  std::string out = "TIGRIS_";
  for (char c : key) {
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

CriterionBinding parse_binding(std::string_view text) {
  const std::string item(trim(text));
  // criterion:METRIC[:direction]; a colon after STATIC(...) starts the
  // direction.
  const auto first = item.find(':');
  if (first == std::string::npos) {
    throw ConfigError("bindings", "binding '" + item +
                                      "' must look like criterion:METRIC");
  }
  const std::string crit_text(trim(std::string_view(item).substr(0, first)));
  std::string rest(trim(std::string_view(item).substr(first + 1)));
  std::optional<Direction> direction;
  const auto paren = rest.rfind(')');
  const auto last = rest.rfind(':');
  if (last != std::string::npos &&
      (paren == std::string::npos || last > paren)) {
    const std::string dir_text(trim(std::string_view(rest).substr(last + 1)));
    direction = direction_from_name(dir_text);
    if (!direction) {
      throw ConfigError("bindings", "unknown direction '" + dir_text +
                                        "' (use higher-is-more or "
                                        "higher-is-less)");
    }
    rest = std::string(trim(std::string_view(rest).substr(0, last)));
  }
  const auto criterion = criterion_from_token(crit_text);
  if (!criterion) {
    throw ConfigError("bindings", "unknown criterion '" + crit_text + "'");
  }
  CriterionBinding binding;
  binding.criterion = *criterion;
  binding.metric = MetricKind::parse(rest);
  binding.direction = direction.value_or(default_direction(*criterion));
  return binding;
}

std::string format_binding(const CriterionBinding& binding) {
  return std::string(criterion_token(binding.criterion)) + ":" +
         binding.metric.name() + ":" +
         std::string(direction_name(binding.direction));
}

MonitoringConfig parse_config(std::string_view text, const EnvLookup& env,
                              const std::filesystem::path& base_dir) {
  auto entries = read_entries(text);
  for (std::string_view key : kKeys) {
    const std::string var = env_override_name(key);
    if (auto v = env ? env(var) : std::nullopt) {
      entries[std::string(key)] = {*v, var};
    }
  }

  auto require = [&](std::string_view key) -> const RawEntry& {
    auto it = entries.find(key);
    if (it == entries.end()) {
      throw ConfigError(std::string(key), "required key is missing");
    }
    return it->second;
  };
  auto with_origin = [](const std::string& key, const RawEntry& e,
                        auto&& fn) {
    try {
      return fn();
    } catch (const UnknownMetricBinding&) {
      throw;
    } catch (const ConfigError& err) {
      throw ConfigError(key, e.origin + ": " + err.detail());
    }
  };

  MonitoringConfig config;

  {
    const RawEntry& e = require("criteria");
    config.criteria = unquote("criteria", e.value);
    try {
      config.filter = parse_filter(config.criteria);
    } catch (const SyntaxError& err) {
      throw ConfigError("criteria", e.origin + ": " + err.what());
    }
  }

  {
    const RawEntry& e = require("bindings");
    with_origin("bindings", e, [&] {
      for (const auto& item : split_list("bindings", e.value)) {
        CriterionBinding b = parse_binding(item);
        if (config.binding_for(b.criterion)) {
          throw ConfigError("bindings",
                            "criterion '" +
                                std::string(criterion_token(b.criterion)) +
                                "' is bound more than once");
        }
        config.bindings.push_back(std::move(b));
      }
      return 0;
    });
  }

  {
    const RawEntry& e = require("samplingPercentage");
    config.sampling_percentage = with_origin("samplingPercentage", e, [&] {
      return parse_real("samplingPercentage", e.value);
    });
    if (!(config.sampling_percentage >= 0.0 &&
          config.sampling_percentage <= 1.0)) {
      throw ConfigError("samplingPercentage",
                        e.origin + ": must be within [0, 1]");
    }
  }

  {
    const RawEntry& e = require("analysisFixedDelay");
    config.analysis_fixed_delay_s = with_origin("analysisFixedDelay", e, [&] {
      return parse_integer("analysisFixedDelay", e.value);
    });
    if (config.analysis_fixed_delay_s <= 0) {
      throw ConfigError("analysisFixedDelay",
                        e.origin + ": must be a positive number of seconds");
    }
  }

  if (auto it = entries.find("allowed"); it != entries.end()) {
    config.allowed_patterns = split_list("allowed", it->second.value);
  }
  if (auto it = entries.find("denied"); it != entries.end()) {
    config.denied_patterns = split_list("denied", it->second.value);
  }
  if (auto it = entries.find("staticMetricFile"); it != entries.end()) {
    std::filesystem::path p = unquote("staticMetricFile", it->second.value);
    if (p.empty()) {
      throw ConfigError("staticMetricFile", it->second.origin + ": empty path");
    }
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    config.static_metric_file = std::move(p);
  }
  if (auto it = entries.find("sigma_k"); it != entries.end()) {
    config.sigma_k = with_origin("sigma_k", it->second, [&] {
      return parse_real("sigma_k", it->second.value);
    });
    if (!(config.sigma_k > 0.0)) {
      throw ConfigError("sigma_k", it->second.origin + ": must be positive");
    }
  }
  if (auto it = entries.find("session_cap"); it != entries.end()) {
    const auto cap = with_origin("session_cap", it->second, [&] {
      return parse_integer("session_cap", it->second.value);
    });
    if (cap <= 0) {
      throw ConfigError("session_cap", it->second.origin + ": must be positive");
    }
    config.session_cap = static_cast<std::size_t>(cap);
  }

  for (Criterion c : referenced_criteria(config.filter)) {
    if (!config.binding_for(c)) {
      throw UnboundCriterion(std::string(criterion_token(c)));
    }
  }
  for (const auto& b : config.bindings) {
    if (b.metric.id() == MetricId::StaticMetric && !config.static_metric_file) {
      throw UnknownMetricBinding("binding " + format_binding(b) +
                                 " needs staticMetricFile");
    }
  }
  return config;
}

MonitoringConfig load_config(const std::filesystem::path& path,
                             const EnvLookup& env) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), env, path.parent_path());
}

std::string to_config_text(const MonitoringConfig& config) {
  std::ostringstream out;
  auto quoted_list = [](const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ", ";
      s += '"' + items[i] + '"';
    }
    return s;
  };
  out << "criteria = \"" << config.criteria << "\"\n";
  out << "bindings = ";
  for (std::size_t i = 0; i < config.bindings.size(); ++i) {
    if (i) out << ", ";
    out << format_binding(config.bindings[i]);
  }
  out << '\n';
  std::ostringstream rate;
  rate.precision(17);
  rate << config.sampling_percentage;
  out << "samplingPercentage = " << rate.str() << '\n';
  out << "analysisFixedDelay = " << config.analysis_fixed_delay_s << '\n';
  if (!config.allowed_patterns.empty()) {
    out << "allowed = " << quoted_list(config.allowed_patterns) << '\n';
  }
  if (!config.denied_patterns.empty()) {
    out << "denied = " << quoted_list(config.denied_patterns) << '\n';
  }
  if (config.static_metric_file) {
    out << "staticMetricFile = \"" << config.static_metric_file->string()
        << "\"\n";
  }
  std::ostringstream k;
  k.precision(17);
  k << config.sigma_k;
  out << "sigma_k = " << k.str() << '\n';
  out << "session_cap = " << config.session_cap << '\n';
  return out.str();
}

bool admit_event(const MonitoringConfig& config, std::string_view event_type) {
  return config.scan_scope().admits(event_type);
}

}  // namespace tigris
