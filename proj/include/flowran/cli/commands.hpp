// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "flowran/channel/topology.hpp"
#include "flowran/cli/config_yaml.hpp"
#include "flowran/control/trace.hpp"
#include "flowran/sim/csv.hpp"
#include "flowran/sim/monte_carlo.hpp"
#include "flowran/sim/run.hpp"

#ifndef FLOWRAN_BUILD_DESCRIBE
#define FLOWRAN_BUILD_DESCRIBE "unknown"
#endif

namespace flowran::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kRuntimeError = 2 };

struct Options {
  std::optional<std::string> config_file;
  std::vector<std::string> overrides;  // key=value
  std::string out_dir = "results";
  std::optional<int> seeds;
  std::optional<std::uint64_t> seed_base;
  std::string policy = "both";
  unsigned jobs = 0;  // 0: hardware concurrency
  std::vector<std::string> cases;
  std::uint64_t seed = 1;
  std::optional<std::string> trace_file;
  std::optional<std::string> topology_file;
  int verbosity = 0;
};

inline sim::RunConfig effective_config(const Options& o) {
  sim::RunConfig cfg = o.config_file ? load_config_file(*o.config_file) : sim::default_config();
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError(kv, "override must look like key=value");
    sim::set_parameter(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.seeds) {
    if (*o.seeds < 1) throw ConfigError("--seeds", "must be at least 1");
    cfg.deployments = *o.seeds;
  }
  if (o.seed_base) cfg.seed_base = *o.seed_base;
  const auto errs = sim::validate(cfg);
  if (!errs.empty()) throw errs.front();
  return cfg;
}

inline std::vector<sim::Policy> policies(const Options& o) {
  if (o.policy == "both") return {sim::Policy::FlowControlled, sim::Policy::Baseline3gpp};
  return {sim::parse_policy(o.policy)};
}

inline unsigned jobs(const Options& o) {
  return o.jobs > 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
}

inline sim::Provenance provenance(const sim::RunConfig& cfg) {
  return {FLOWRAN_BUILD_DESCRIBE, cfg.seed_base, sim::hex64(sim::config_hash(cfg))};
}

/// Effective value's provenance label; explicit values equal to the built-in
/// default keep the default's label.
inline std::string origin_label(const sim::ParamDef& p, const sim::RunConfig& cfg) {
  static const sim::RunConfig defaults = sim::default_config();
  if (cfg.overridden.count(p.path) && p.get(cfg) != p.get(defaults)) return "override";
  return sim::to_string(p.origin);
}

inline std::string parameter_listing(const sim::RunConfig& cfg) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& p : sim::parameter_registry()) width = std::max(width, p.path.size());
  for (const auto& p : sim::parameter_registry()) {
    std::string line = p.path;
    line.resize(width + 2, ' ');
    std::string value = p.get(cfg);
    value.resize(std::max<std::size_t>(value.size(), 22) + 2, ' ');
    os << line << value << '[' << origin_label(p, cfg) << "]\n";
  }
  return os.str();
}

inline void progress_printer(int verbosity, std::size_t done, std::size_t total) {
  if (verbosity > 0 && (done == total || done % 10 == 0)) {
    std::cerr << "  " << done << "/" << total << " runs\n";
  }
}

inline const sim::AggregateRow* find_agg(const std::vector<sim::AggregateRow>& rows, const std::string& c,
                                         sim::Policy p, const std::string& metric) {
  for (const auto& r : rows) {
    if (r.case_name == c && r.policy == p && r.metric == metric) return &r;
  }
  return nullptr;
}

inline std::string cell(const sim::AggregateRow* r) {
  char buf[32];
  if (!r || std::isnan(r->mean)) return "      -";
  std::snprintf(buf, sizeof buf, "%7.2f", r->mean);
  return buf;
}

inline std::string summary_table(const sim::BatchResult& r, const std::vector<std::string>& cases,
                                 const std::vector<sim::Policy>& pols, const std::vector<std::string>& metrics) {
  std::ostringstream os;
  os << "case  policy           ";
  for (const auto& m : metrics) {
    std::string h = m;
    h.resize(std::max<std::size_t>(h.size(), 7), ' ');
    os << ' ' << h;
  }
  os << '\n';
  for (const auto& c : cases) {
    for (const auto p : pols) {
      std::string name = sim::to_string(p);
      name.resize(16, ' ');
      os << c;
      os << std::string(c.size() < 6 ? 6 - c.size() : 1, ' ') << name << ' ';
      for (const auto& m : metrics) {
        std::string v = cell(find_agg(r.aggregate, c, p, m));
        v.resize(std::max<std::size_t>(m.size(), 7), ' ');
        os << ' ' << v;
      }
      os << '\n';
    }
  }
  return os.str();
}

inline int run_batch_command(const Options& o, const sim::RunConfig& cfg, const std::vector<std::string>& cases,
                             const std::string& stem, const std::vector<std::string>& table_metrics,
                             std::ostream& out) {
  sim::BatchSpec spec;
  spec.cases = cases;
  spec.policies = policies(o);
  spec.seeds = cfg.seeds();
  spec.jobs = jobs(o);
  const auto result = sim::run_monte_carlo(cfg, spec, [&](std::size_t d, std::size_t t) {
    progress_printer(o.verbosity, d, t);
  });
  const auto prov = provenance(cfg);
  const std::string table = summary_table(result, cases, spec.policies, table_metrics);
  sim::write_batch(o.out_dir, stem, result, prov);

  std::ostringstream summary;
  summary << "# build " << prov.build << ", master seed " << prov.master_seed << ", config " << prov.config_hash
          << ", " << spec.seeds.size() << " seeds\n";
  summary << table << "\n# effective parameters\n" << parameter_listing(cfg);
  sim::write_file_atomic(std::filesystem::path(o.out_dir) / (stem + "_summary.txt"), summary.str());
  out << table;
  out << "wrote " << (std::filesystem::path(o.out_dir) / (stem + "_raw.csv")).string() << ", "
      << (std::filesystem::path(o.out_dir) / (stem + "_aggregate.csv")).string() << '\n';
  return kOk;
}

inline int cmd_downlink_cases(const Options& o, std::ostream& out) {
  const auto cfg = effective_config(o);
  std::vector<std::string> cases = o.cases;
  if (cases.empty()) {
    for (const auto& c : cfg.downlink_cases) cases.push_back(c.name);
  }
  return run_batch_command(o, cfg, cases, "downlink",
                           {"throughput_total_mbps", "throughput_gnb_mbps", "throughput_wifi_mbps", "load_share_wifi",
                            "delay_total_ms", "throughput_s1_mbps", "throughput_s2_mbps", "throughput_s3_mbps",
                            "throughput_s4_mbps", "delay_s1_ms", "delay_s2_ms", "delay_s3_ms", "delay_s4_ms"},
                           out);
}

inline int cmd_uplink_decoupling(const Options& o, std::ostream& out) {
  const auto cfg = effective_config(o);
  out << "TDD pattern " << cfg.uplink_case.tdd.to_string() << ", NR scheduler "
      << sim::detail::scheduler_name(cfg.uplink_case.scheduler) << '\n';
  return run_batch_command(o, cfg, {cfg.uplink_case.name}, "uplink",
                           {"throughput_total_mbps", "throughput_wifi_mbps", "throughput_wifi_dl_mbps",
                            "throughput_wifi_ul_mbps", "throughput_ul_mbps", "delay_total_ms", "delay_wifi_ms",
                            "users_ul_wifi", "uplink_moved"},
                           out);
}

inline int cmd_single(const Options& o, std::ostream& out) {
  const auto cfg = effective_config(o);
  const std::string case_name = o.cases.empty() ? "c" : o.cases.front();
  const auto& cs = cfg.find_case(case_name);
  const auto pols = policies(o);
  for (const auto p : pols) {
    sim::RunOptions ro;
    ro.keep_trace = o.trace_file.has_value();
    const auto a = sim::run_single_detailed(cfg, cs, p, o.seed, ro);
    out << "case " << case_name << ", policy " << sim::to_string(p) << ", seed " << o.seed << ", topology "
        << sim::hex64(a.row.topology_hash) << '\n';
    for (const auto& [k, v] : a.row.metrics) out << "  " << k << " = " << sim::format_value(v) << '\n';
    if (o.trace_file) {
      std::string path = *o.trace_file;
      if (pols.size() > 1) path += std::string(".") + sim::to_string(p);
      std::ostringstream ss;
      control::write_ndjson(ss, a.trace);
      sim::write_file_atomic(path, ss.str());
      out << "trace: " << a.trace.events().size() << " events -> " << path << '\n';
    }
  }
  return kOk;
}

inline int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  sim::RunConfig cfg = o.config_file ? load_config_file(*o.config_file) : sim::default_config();
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError(kv, "override must look like key=value");
    sim::set_parameter(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  const auto errs = sim::validate(cfg);
  for (const auto& e : errs) err << "error: " << e.what() << '\n';
  if (!errs.empty()) return kConfigError;
  out << parameter_listing(cfg);
  out << "config hash " << sim::hex64(sim::config_hash(cfg)) << ": OK\n";
  return kOk;
}

inline int cmd_dump_topology(const Options& o, std::ostream& out) {
  const auto cfg = effective_config(o);
  const auto topo =
      channel::place_topology(Rng(o.seed).split("placement"), cfg.placement, cfg.radio, cfg.placement_mode);
  std::ostringstream ss;
  channel::write_topology_csv(ss, topo);
  if (o.topology_file) {
    sim::write_file_atomic(*o.topology_file, ss.str());
    out << "wrote " << *o.topology_file << '\n';
  } else {
    out << ss.str();
  }
  if (topo.coverage_deficit > 0) {
    std::cerr << "warning: " << topo.coverage_deficit << " UEs short of the dual-connected target\n";
  }
  return kOk;
}

}  // namespace flowran::cli
