// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flowran/channel/radio_params.hpp"
#include "flowran/channel/topology.hpp"
#include "flowran/control/controller.hpp"
#include "flowran/core/rng.hpp"
#include "flowran/core/types.hpp"
#include "flowran/macphy/dcf.hpp"
#include "flowran/macphy/nr_scheduler.hpp"
#include "flowran/macphy/tdd.hpp"
#include "flowran/rat/score.hpp"

namespace flowran::sim {

enum class Policy { FlowControlled, Baseline3gpp };

inline const char* to_string(Policy p) {
  return p == Policy::FlowControlled ? "flow-controlled" : "baseline";
}

inline Policy parse_policy(const std::string& s) {
  if (s == "flow-controlled") return Policy::FlowControlled;
  if (s == "baseline") return Policy::Baseline3gpp;
  throw ConfigError("policy", "expected 'flow-controlled' or 'baseline', got '" + s + "'");
}

/// How downlink RATs are chosen in a scenario.
enum class DownlinkRule {
  Selection,        // the policy's downlink algorithm
  WifiWhenCapable,  // every Wi-Fi-capable UE on Wi-Fi, others on the gNB
};

struct CaseSpec {
  std::string name;
  std::array<int, 4> mix{};  // users per service priority 1..4
  double dl_rate_pps = 500.0;
  double ul_rate_pps = 0.0;
  macphy::TddPattern tdd = macphy::TddPattern::all_downlink();
  macphy::SchedulerMode scheduler = macphy::SchedulerMode::Priority;
  DownlinkRule downlink_rule = DownlinkRule::Selection;
  bool decouple_uplink = false;  // run the uplink algorithm under FlowControlled

  [[nodiscard]] int users() const { return std::accumulate(mix.begin(), mix.end(), 0); }
};

struct RunConfig {
  channel::RadioParams radio;
  channel::PlacementCounts placement;
  channel::PlacementMode placement_mode = channel::PlacementMode::CoverageConditioned;

  rat::ScoreWeights weights;
  double decision_threshold = rat::kDefaultDecisionThreshold;
  rat::LoadThresholds load_thresholds;
  int gnb_capacity = 60;
  int wifi_capacity_per_ap = 10;
  int max_uplink_users_per_ap = 10;

  int payload_bytes = 1000;
  int header_bytes = 60;
  macphy::DcfParams dcf;

  double core_latency_ms = 5.0;
  control::NasPathMode nas_mode = control::NasPathMode::Proactive;
  bool measurements = true;
  double measurement_period_ms = 100.0;

  double horizon_s = 1.0;
  int deployments = 50;
  std::uint64_t seed_base = 1;

  std::vector<CaseSpec> downlink_cases;
  CaseSpec uplink_case;

  /// Parameter paths set explicitly by a config file.
  std::set<std::string> overridden;

  [[nodiscard]] std::vector<std::uint64_t> seeds() const {
    std::vector<std::uint64_t> s;
    for (int i = 0; i < deployments; ++i) s.push_back(seed_base + static_cast<std::uint64_t>(i));
    return s;
  }

  [[nodiscard]] const CaseSpec& find_case(const std::string& name) const {
    if (name == uplink_case.name) return uplink_case;
    for (const auto& c : downlink_cases) {
      if (c.name == name) return c;
    }
    throw ConfigError("case", "unknown case '" + name + "'");
  }
};

inline RunConfig default_config() {
  RunConfig c;
  const std::array<std::pair<const char*, std::array<int, 4>>, 5> mixes{{
      {"a", {0, 0, 40, 40}},
      {"b", {10, 10, 30, 30}},
      {"c", {20, 20, 20, 20}},
      {"d", {30, 30, 10, 10}},
      {"e", {40, 40, 0, 0}},
  }};
  for (const auto& [name, mix] : mixes) {
    CaseSpec s;
    s.name = name;
    s.mix = mix;
    c.downlink_cases.push_back(s);
  }
  c.uplink_case.name = "uplink";
  c.uplink_case.mix = {0, 0, 0, 80};
  c.uplink_case.dl_rate_pps = 375.0;  // 3 Mb/s of 1000-byte payloads
  c.uplink_case.ul_rate_pps = 125.0;  // 1 Mb/s
  c.uplink_case.tdd = macphy::TddPattern::standard();
  c.uplink_case.scheduler = macphy::SchedulerMode::RoundRobin;
  c.uplink_case.downlink_rule = DownlinkRule::WifiWhenCapable;
  c.uplink_case.decouple_uplink = true;
  return c;
}

// ---------------------------------------------------------------------------
// Parameter registry: every configurable scalar with its provenance.

enum class Origin { Paper, Artifact, NonPaperDefault };

inline const char* to_string(Origin o) {
  switch (o) {
    case Origin::Paper: return "paper";
    case Origin::Artifact: return "artifact default";
    case Origin::NonPaperDefault: return "non-paper default";
  }
  return "?";
}

struct ParamDef {
  std::string path;
  Origin origin = Origin::Paper;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& path, const std::string& text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError(path, "expected a number, got '" + text + "'");
  }
  return v;
}

inline long long parse_int(const std::string& path, const std::string& text) {
  const std::string s = trim(text);
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ConfigError(path, "expected an integer, got '" + text + "'");
  }
  return v;
}

inline bool parse_bool(const std::string& path, const std::string& text) {
  const std::string s = trim(text);
  if (s == "true" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "no" || s == "off") return false;
  throw ConfigError(path, "expected a boolean, got '" + text + "'");
}

// Shortest text that parses back to the same double.
inline std::string fmt(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

using DoubleRef = std::function<double&(RunConfig&)>;
using IntRef = std::function<int&(RunConfig&)>;

inline ParamDef real(std::string path, Origin o, DoubleRef ref) {
  return {path, o,
          [path, ref](RunConfig& c, const std::string& s) { ref(c) = parse_double(path, s); },
          [ref](const RunConfig& c) { return fmt(ref(const_cast<RunConfig&>(c))); }};
}

inline ParamDef integer(std::string path, Origin o, IntRef ref) {
  return {path, o,
          [path, ref](RunConfig& c, const std::string& s) {
            const long long v = parse_int(path, s);
            if (v < INT32_MIN || v > INT32_MAX) throw ConfigError(path, "integer out of range");
            ref(c) = static_cast<int>(v);
          },
          [ref](const RunConfig& c) { return std::to_string(ref(const_cast<RunConfig&>(c))); }};
}

inline CaseSpec& case_named(RunConfig& c, const std::string& name) {
  if (c.uplink_case.name == name) return c.uplink_case;
  for (auto& s : c.downlink_cases) {
    if (s.name == name) return s;
  }
  throw ConfigError("cases", "unknown case '" + name + "'");
}

inline ParamDef mix_param(const std::string& name) {
  const std::string path = "downlink_cases." + name + ".mix";
  return {path, Origin::Paper,
          [path, name](RunConfig& c, const std::string& s) {
            std::array<int, 4> mix{};
            std::stringstream ss(s);
            std::string item;
            std::size_t i = 0;
            while (std::getline(ss, item, ',')) {
              if (i >= 4) throw ConfigError(path, "expected four per-service user counts");
              const long long v = parse_int(path, item);
              if (v < 0) throw ConfigError(path, "user counts must be non-negative");
              mix[i++] = static_cast<int>(v);
            }
            if (i != 4) throw ConfigError(path, "expected four per-service user counts");
            case_named(c, name).mix = mix;
          },
          [name](const RunConfig& c) {
            const auto& m = c.find_case(name).mix;
            return std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) +
                   "," + std::to_string(m[3]);
          }};
}

inline macphy::SchedulerMode parse_scheduler(const std::string& path, const std::string& s) {
  const std::string t = trim(s);
  if (t == "priority") return macphy::SchedulerMode::Priority;
  if (t == "round-robin") return macphy::SchedulerMode::RoundRobin;
  throw ConfigError(path, "expected 'priority' or 'round-robin', got '" + s + "'");
}

inline const char* scheduler_name(macphy::SchedulerMode m) {
  return m == macphy::SchedulerMode::Priority ? "priority" : "round-robin";
}

inline ParamDef tdd_param(std::string path, std::function<macphy::TddPattern&(RunConfig&)> ref) {
  return {path, Origin::Paper,
          [path, ref](RunConfig& c, const std::string& s) {
            try {
              ref(c) = macphy::TddPattern::parse(trim(s));
            } catch (const DomainError& e) {
              throw ConfigError(path, e.what());
            }
          },
          [ref](const RunConfig& c) { return ref(const_cast<RunConfig&>(c)).to_string(); }};
}

inline ParamDef scheduler_param(std::string path, Origin o,
                                std::function<macphy::SchedulerMode&(RunConfig&)> ref) {
  return {path, o,
          [path, ref](RunConfig& c, const std::string& s) { ref(c) = parse_scheduler(path, s); },
          [ref](const RunConfig& c) { return std::string(scheduler_name(ref(const_cast<RunConfig&>(c)))); }};
}

}  // namespace detail

/// Every configurable parameter, in canonical order.
inline const std::vector<ParamDef>& parameter_registry() {
  using detail::integer;
  using detail::real;
  using O = Origin;
  static const std::vector<ParamDef> defs = [] {
    std::vector<ParamDef> d;
    d.push_back({"seed_base", O::Artifact,
                 [](RunConfig& c, const std::string& s) {
                   const long long v = detail::parse_int("seed_base", s);
                   if (v < 0) throw ConfigError("seed_base", "must be non-negative");
                   c.seed_base = static_cast<std::uint64_t>(v);
                 },
                 [](const RunConfig& c) { return std::to_string(c.seed_base); }});
    d.push_back(integer("deployments", O::Paper, [](RunConfig& c) -> int& { return c.deployments; }));
    d.push_back(real("horizon_s", O::Paper, [](RunConfig& c) -> double& { return c.horizon_s; }));

    d.push_back(real("radio.cell_radius_m", O::Paper, [](RunConfig& c) -> double& { return c.radio.cell_radius_m; }));
    d.push_back(real("radio.nr_carrier_ghz", O::Paper, [](RunConfig& c) -> double& { return c.radio.nr_carrier_ghz; }));
    d.push_back(real("radio.nr_bandwidth_mhz", O::Paper, [](RunConfig& c) -> double& { return c.radio.nr_bandwidth_mhz; }));
    d.push_back(integer("radio.nr_prbs", O::Paper, [](RunConfig& c) -> int& { return c.radio.nr_prbs; }));
    d.push_back(integer("radio.nr_slots_per_subframe", O::Paper, [](RunConfig& c) -> int& { return c.radio.nr_slots_per_subframe; }));
    d.push_back(real("radio.gnb_tx_power_dbm", O::Paper, [](RunConfig& c) -> double& { return c.radio.gnb_tx_power_dbm; }));
    d.push_back(real("radio.ue_nr_tx_power_dbm", O::Paper, [](RunConfig& c) -> double& { return c.radio.ue_nr_tx_power_dbm; }));
    d.push_back(real("radio.gnb_antenna_gain_dbi", O::Paper, [](RunConfig& c) -> double& { return c.radio.gnb_antenna_gain_dbi; }));
    d.push_back(real("radio.ue_antenna_gain_dbi", O::Paper, [](RunConfig& c) -> double& { return c.radio.ue_antenna_gain_dbi; }));
    d.push_back(real("radio.gnb_height_m", O::Paper, [](RunConfig& c) -> double& { return c.radio.gnb_height_m; }));
    d.push_back(real("radio.ue_height_m", O::Paper, [](RunConfig& c) -> double& { return c.radio.ue_height_m; }));
    d.push_back(real("radio.gnb_noise_figure_db", O::Paper, [](RunConfig& c) -> double& { return c.radio.gnb_noise_figure_db; }));
    d.push_back(real("radio.ue_noise_figure_db", O::Paper, [](RunConfig& c) -> double& { return c.radio.ue_noise_figure_db; }));
    d.push_back(real("radio.wifi_carrier_ghz", O::Paper, [](RunConfig& c) -> double& { return c.radio.wifi_carrier_ghz; }));
    d.push_back(real("radio.wifi_bandwidth_mhz", O::Paper, [](RunConfig& c) -> double& { return c.radio.wifi_bandwidth_mhz; }));
    d.push_back(real("radio.wifi_coverage_m", O::Paper, [](RunConfig& c) -> double& { return c.radio.wifi_coverage_m; }));
    d.push_back(real("radio.ap_tx_power_dbm", O::Paper, [](RunConfig& c) -> double& { return c.radio.ap_tx_power_dbm; }));
    d.push_back(real("radio.ue_wifi_tx_power_dbm", O::Paper, [](RunConfig& c) -> double& { return c.radio.ue_wifi_tx_power_dbm; }));
    d.push_back(real("radio.ap_antenna_gain_dbi", O::Paper, [](RunConfig& c) -> double& { return c.radio.ap_antenna_gain_dbi; }));
    d.push_back(real("radio.ap_height_m", O::Paper, [](RunConfig& c) -> double& { return c.radio.ap_height_m; }));
    d.push_back(real("radio.ap_noise_figure_db", O::Artifact, [](RunConfig& c) -> double& { return c.radio.ap_noise_figure_db; }));
    d.push_back(integer("radio.mpdu_bytes", O::Paper, [](RunConfig& c) -> int& { return c.radio.mpdu_bytes; }));
    d.push_back(real("radio.good_snr_threshold_db", O::Paper, [](RunConfig& c) -> double& { return c.radio.good_snr_threshold_db; }));

    d.push_back(integer("deployment.aps", O::Paper, [](RunConfig& c) -> int& { return c.placement.aps; }));
    d.push_back(integer("deployment.ues", O::Paper, [](RunConfig& c) -> int& { return c.placement.ues; }));
    d.push_back(real("deployment.dual_connected_fraction", O::Paper,
                     [](RunConfig& c) -> double& { return c.placement.dual_connected_fraction; }));
    d.push_back({"deployment.placement", O::Artifact,
                 [](RunConfig& c, const std::string& s) {
                   const std::string t = detail::trim(s);
                   if (t == "coverage-conditioned") {
                     c.placement_mode = channel::PlacementMode::CoverageConditioned;
                   } else if (t == "uniform") {
                     c.placement_mode = channel::PlacementMode::Uniform;
                   } else {
                     throw ConfigError("deployment.placement", "expected 'coverage-conditioned' or 'uniform'");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.placement_mode == channel::PlacementMode::Uniform ? "uniform"
                                                                                        : "coverage-conditioned");
                 }});

    d.push_back(real("selection.weights.load_gnb", O::Paper, [](RunConfig& c) -> double& { return c.weights.load_gnb; }));
    d.push_back(real("selection.weights.load_wifi", O::Paper, [](RunConfig& c) -> double& { return c.weights.load_wifi; }));
    d.push_back(real("selection.weights.channel_gnb", O::Paper, [](RunConfig& c) -> double& { return c.weights.channel_gnb; }));
    d.push_back(real("selection.weights.service", O::Paper, [](RunConfig& c) -> double& { return c.weights.service; }));
    d.push_back(real("selection.decision_threshold", O::Paper, [](RunConfig& c) -> double& { return c.decision_threshold; }));
    d.push_back(real("selection.load_low_above", O::Artifact,
                     [](RunConfig& c) -> double& { return c.load_thresholds.low_above; }));
    d.push_back(real("selection.load_high_at_or_below", O::Artifact,
                     [](RunConfig& c) -> double& { return c.load_thresholds.high_at_or_below; }));
    d.push_back(integer("selection.gnb_capacity", O::NonPaperDefault, [](RunConfig& c) -> int& { return c.gnb_capacity; }));
    d.push_back(integer("selection.wifi_capacity_per_ap", O::NonPaperDefault,
                        [](RunConfig& c) -> int& { return c.wifi_capacity_per_ap; }));
    d.push_back(integer("selection.max_uplink_users_per_ap", O::NonPaperDefault,
                        [](RunConfig& c) -> int& { return c.max_uplink_users_per_ap; }));

    d.push_back(integer("traffic.payload_bytes", O::Paper, [](RunConfig& c) -> int& { return c.payload_bytes; }));
    d.push_back(integer("traffic.header_bytes", O::Paper, [](RunConfig& c) -> int& { return c.header_bytes; }));

    d.push_back({"dcf.slot_us", O::Artifact,
                 [](RunConfig& c, const std::string& s) { c.dcf.slot_us = detail::parse_int("dcf.slot_us", s); },
                 [](const RunConfig& c) { return std::to_string(c.dcf.slot_us); }});
    d.push_back({"dcf.sifs_us", O::Artifact,
                 [](RunConfig& c, const std::string& s) { c.dcf.sifs_us = detail::parse_int("dcf.sifs_us", s); },
                 [](const RunConfig& c) { return std::to_string(c.dcf.sifs_us); }});
    d.push_back({"dcf.difs_us", O::Artifact,
                 [](RunConfig& c, const std::string& s) { c.dcf.difs_us = detail::parse_int("dcf.difs_us", s); },
                 [](const RunConfig& c) { return std::to_string(c.dcf.difs_us); }});
    d.push_back(integer("dcf.cw_min", O::Artifact, [](RunConfig& c) -> int& { return c.dcf.cw_min; }));
    d.push_back(integer("dcf.cw_max", O::Artifact, [](RunConfig& c) -> int& { return c.dcf.cw_max; }));
    d.push_back(integer("dcf.retry_limit", O::Artifact, [](RunConfig& c) -> int& { return c.dcf.retry_limit; }));

    d.push_back(real("control.core_latency_ms", O::Artifact, [](RunConfig& c) -> double& { return c.core_latency_ms; }));
    d.push_back({"control.nas_path", O::Artifact,
                 [](RunConfig& c, const std::string& s) {
                   const std::string t = detail::trim(s);
                   if (t == "proactive") {
                     c.nas_mode = control::NasPathMode::Proactive;
                   } else if (t == "reactive") {
                     c.nas_mode = control::NasPathMode::Reactive;
                   } else {
                     throw ConfigError("control.nas_path", "expected 'proactive' or 'reactive'");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.nas_mode == control::NasPathMode::Proactive ? "proactive" : "reactive");
                 }});
    d.push_back({"control.measurements", O::Artifact,
                 [](RunConfig& c, const std::string& s) { c.measurements = detail::parse_bool("control.measurements", s); },
                 [](const RunConfig& c) { return std::string(c.measurements ? "true" : "false"); }});
    d.push_back(real("control.measurement_period_ms", O::Artifact,
                     [](RunConfig& c) -> double& { return c.measurement_period_ms; }));

    for (const char* name : {"a", "b", "c", "d", "e"}) {
      d.push_back(detail::mix_param(name));
    }
    d.push_back({"downlink.rate_pps", O::Paper,
                 [](RunConfig& c, const std::string& s) {
                   const double v = detail::parse_double("downlink.rate_pps", s);
                   for (auto& k : c.downlink_cases) k.dl_rate_pps = v;
                 },
                 [](const RunConfig& c) {
                   return detail::fmt(c.downlink_cases.empty() ? 0.0 : c.downlink_cases.front().dl_rate_pps);
                 }});
    d.push_back({"downlink.tdd_pattern", O::Paper,
                 [](RunConfig& c, const std::string& s) {
                   macphy::TddPattern p;
                   try {
                     p = macphy::TddPattern::parse(detail::trim(s));
                   } catch (const DomainError& e) {
                     throw ConfigError("downlink.tdd_pattern", e.what());
                   }
                   for (auto& k : c.downlink_cases) k.tdd = p;
                 },
                 [](const RunConfig& c) {
                   return c.downlink_cases.empty() ? std::string{} : c.downlink_cases.front().tdd.to_string();
                 }});
    d.push_back({"downlink.scheduler", O::Paper,
                 [](RunConfig& c, const std::string& s) {
                   const auto m = detail::parse_scheduler("downlink.scheduler", s);
                   for (auto& k : c.downlink_cases) k.scheduler = m;
                 },
                 [](const RunConfig& c) {
                   return std::string(detail::scheduler_name(
                       c.downlink_cases.empty() ? macphy::SchedulerMode::Priority : c.downlink_cases.front().scheduler));
                 }});

    d.push_back(real("uplink.downlink_rate_pps", O::Paper, [](RunConfig& c) -> double& { return c.uplink_case.dl_rate_pps; }));
    d.push_back(real("uplink.uplink_rate_pps", O::Paper, [](RunConfig& c) -> double& { return c.uplink_case.ul_rate_pps; }));
    d.push_back(detail::tdd_param("uplink.tdd_pattern",
                                  [](RunConfig& c) -> macphy::TddPattern& { return c.uplink_case.tdd; }));
    d.push_back(detail::scheduler_param("uplink.scheduler", O::Paper,
                                        [](RunConfig& c) -> macphy::SchedulerMode& { return c.uplink_case.scheduler; }));
    return d;
  }();
  return defs;
}

inline const ParamDef* find_parameter(const std::string& path) {
  for (const auto& p : parameter_registry()) {
    if (p.path == path) return &p;
  }
  return nullptr;
}

/// Sets one parameter by dotted path; unknown paths are errors.
inline void set_parameter(RunConfig& c, const std::string& path, const std::string& value) {
  const ParamDef* p = find_parameter(path);
  if (!p) throw ConfigError(path, "unknown configuration key");
  p->set(c, value);
  c.overridden.insert(path);
}

/// Canonical "path=value" dump; the basis of the config hash.
inline std::string canonical_dump(const RunConfig& c) {
  std::string out;
  for (const auto& p : parameter_registry()) out += p.path + "=" + p.get(c) + "\n";
  return out;
}

inline std::uint64_t config_hash(const RunConfig& c) { return fnv1a(canonical_dump(c)); }

inline std::string hex64(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = kDigits[v & 0xf];
  return s;
}

/// All constraint violations, each naming the offending key.
inline std::vector<ConfigError> validate(const RunConfig& c) {
  std::vector<ConfigError> errs;
  auto need = [&](bool ok, const char* path, const std::string& what) {
    if (!ok) errs.emplace_back(path, what);
  };
  need(c.deployments >= 1, "deployments", "at least one deployment is required");
  need(c.horizon_s > 0.0, "horizon_s", "must be positive");
  need(c.radio.cell_radius_m > 0.0, "radio.cell_radius_m", "must be positive");
  need(c.radio.nr_bandwidth_mhz > 0.0, "radio.nr_bandwidth_mhz", "bandwidth must be positive");
  need(c.radio.wifi_bandwidth_mhz > 0.0, "radio.wifi_bandwidth_mhz", "bandwidth must be positive");
  need(c.radio.nr_carrier_ghz > 0.0, "radio.nr_carrier_ghz", "must be positive");
  need(c.radio.wifi_carrier_ghz > 0.0, "radio.wifi_carrier_ghz", "must be positive");
  need(c.radio.nr_prbs > 0, "radio.nr_prbs", "must be positive");
  need(c.radio.wifi_coverage_m > 0.0, "radio.wifi_coverage_m", "must be positive");
  need(c.radio.ue_height_m > 0.0 && c.radio.gnb_height_m > c.radio.ue_height_m, "radio.gnb_height_m",
       "gNB must be above the UE");
  need(c.radio.mpdu_bytes >= c.payload_bytes + c.header_bytes + c.dcf.mac_overhead_bytes, "radio.mpdu_bytes",
       "an MPDU must hold one packet plus MAC overhead");
  need(c.placement.aps >= 1, "deployment.aps", "must be positive");
  need(c.placement.ues >= 1, "deployment.ues", "must be positive");
  need(c.placement.dual_connected_fraction >= 0.0 && c.placement.dual_connected_fraction <= 1.0,
       "deployment.dual_connected_fraction", "must lie in [0, 1]");
  need(c.gnb_capacity >= 0, "selection.gnb_capacity", "must be non-negative");
  need(c.wifi_capacity_per_ap > 0, "selection.wifi_capacity_per_ap", "must be positive");
  need(c.max_uplink_users_per_ap >= 0, "selection.max_uplink_users_per_ap", "must be non-negative");
  need(c.load_thresholds.high_at_or_below < c.load_thresholds.low_above, "selection.load_low_above",
       "must exceed selection.load_high_at_or_below");
  need(c.payload_bytes > 0, "traffic.payload_bytes", "must be positive");
  need(c.header_bytes >= 0, "traffic.header_bytes", "must be non-negative");
  need(c.dcf.cw_min >= 1 && c.dcf.cw_min <= c.dcf.cw_max, "dcf.cw_min", "must satisfy 1 <= cw_min <= cw_max");
  need(c.dcf.retry_limit >= 0, "dcf.retry_limit", "must be non-negative");
  need(c.core_latency_ms >= 0.0, "control.core_latency_ms", "must be non-negative");
  need(c.measurement_period_ms > 0.0, "control.measurement_period_ms", "must be positive");
  for (const auto& k : c.downlink_cases) {
    if (k.users() != c.placement.ues) {
      errs.emplace_back("downlink_cases." + k.name + ".mix",
                        "case " + k.name + ": service mix sums to " + std::to_string(k.users()) +
                            ", expected " + std::to_string(c.placement.ues) + " users");
    }
    if (!(k.dl_rate_pps > 0.0)) errs.emplace_back("downlink.rate_pps", "must be positive");
  }
  need(c.uplink_case.dl_rate_pps >= 0.0, "uplink.downlink_rate_pps", "must be non-negative");
  need(c.uplink_case.ul_rate_pps >= 0.0, "uplink.uplink_rate_pps", "must be non-negative");
  return errs;
}

}  // namespace flowran::sim
