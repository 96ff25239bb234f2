// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowran/sim/monte_carlo.hpp"

namespace flowran::sim {

/// Carried on every output row.
struct Provenance {
  std::string build;
  std::uint64_t master_seed = 0;
  std::string config_hash;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline constexpr const char* kRawHeader = "seed,case,policy,metric,value,topology_hash,build,master_seed,config_hash";
inline constexpr const char* kAggregateHeader = "case,policy,metric,mean,std,n,build,master_seed,config_hash";

inline void write_raw_csv(std::ostream& os, const std::vector<RunRow>& rows, const Provenance& p) {
  os << kRawHeader << '\n';
  for (const auto& r : rows) {
    for (const auto& [metric, value] : r.metrics) {
      os << r.seed << ',' << r.case_name << ',' << to_string(r.policy) << ',' << metric << ','
         << format_value(value) << ',' << hex64(r.topology_hash) << ',' << p.build << ',' << p.master_seed << ','
         << p.config_hash << '\n';
    }
  }
}

inline void write_aggregate_csv(std::ostream& os, const std::vector<AggregateRow>& rows, const Provenance& p) {
  os << kAggregateHeader << '\n';
  for (const auto& a : rows) {
    os << a.case_name << ',' << to_string(a.policy) << ',' << a.metric << ',' << format_value(a.mean) << ','
       << format_value(a.stddev) << ',' << a.n << ',' << p.build << ',' << p.master_seed << ',' << p.config_hash
       << '\n';
  }
}

/// Writes `content` to a sibling temp file and renames it into place, so the
/// target either holds the full content or is left untouched.
inline void write_file_atomic(const std::filesystem::path& target, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move " + tmp.string() + " to " + target.string());
  }
}

/// Renders both CSVs first, then commits them; no partial aggregate file is
/// ever left behind.
inline void write_batch(const std::filesystem::path& dir, const std::string& stem, const BatchResult& r,
                        const Provenance& p) {
  std::ostringstream raw;
  std::ostringstream agg;
  write_raw_csv(raw, r.raw, p);
  write_aggregate_csv(agg, r.aggregate, p);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());
  write_file_atomic(dir / (stem + "_raw.csv"), raw.str());
  write_file_atomic(dir / (stem + "_aggregate.csv"), agg.str());
}

}  // namespace flowran::sim
