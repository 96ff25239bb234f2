// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "flowran/sim/config.hpp"
#include "flowran/sim/run.hpp"

namespace flowran::sim {

struct AggregateRow {
  std::string case_name;
  Policy policy = Policy::FlowControlled;
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t n = 0;  // seeds with a defined value
};

struct BatchResult {
  std::vector<RunRow> raw;  // ordered by case, policy, seed
  std::vector<AggregateRow> aggregate;
};

/// A failed run; names the seed, case and policy that broke the batch.
class BatchError : public std::runtime_error {
 public:
  BatchError(std::uint64_t seed, const std::string& case_name, Policy policy, const std::string& what)
      : std::runtime_error("seed " + std::to_string(seed) + ", case " + case_name + ", " + to_string(policy) +
                           ": " + what),
        seed_(seed) {}
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Mean and sample standard deviation per (case, policy, metric). NaN values
/// (undefined delays) are skipped. Rows are sorted by seed first, so the
/// result does not depend on the order seeds were run in.
inline std::vector<AggregateRow> aggregate(std::vector<RunRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const RunRow& a, const RunRow& b) { return a.seed < b.seed; });
  std::vector<AggregateRow> out;
  std::vector<std::pair<std::string, Policy>> groups;
  for (const auto& r : rows) {
    const auto key = std::make_pair(r.case_name, r.policy);
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
  }
  for (const auto& [case_name, policy] : groups) {
    std::vector<const RunRow*> g;
    for (const auto& r : rows) {
      if (r.case_name == case_name && r.policy == policy) g.push_back(&r);
    }
    for (std::size_t m = 0; m < g.front()->metrics.size(); ++m) {
      AggregateRow a{case_name, policy, g.front()->metrics[m].first, 0.0, 0.0, 0};
      double sum = 0.0;
      for (const auto* r : g) {
        const double v = r->metrics.at(m).second;
        if (std::isnan(v)) continue;
        sum += v;
        ++a.n;
      }
      if (a.n == 0) {
        a.mean = a.stddev = std::numeric_limits<double>::quiet_NaN();
      } else {
        a.mean = sum / static_cast<double>(a.n);
        double ss = 0.0;
        for (const auto* r : g) {
          const double v = r->metrics.at(m).second;
          if (!std::isnan(v)) ss += (v - a.mean) * (v - a.mean);
        }
        a.stddev = a.n > 1 ? std::sqrt(ss / static_cast<double>(a.n - 1)) : 0.0;
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

struct BatchSpec {
  std::vector<std::string> cases;
  std::vector<Policy> policies{Policy::FlowControlled, Policy::Baseline3gpp};
  std::vector<std::uint64_t> seeds;
  unsigned jobs = 1;
};

/// Runs every (case, policy, seed) combination on up to `jobs` threads.
/// Runs share only the immutable config; results are merged in a fixed order.
inline BatchResult run_monte_carlo(const RunConfig& cfg, const BatchSpec& spec,
                                   const std::function<void(std::size_t, std::size_t)>& progress = {}) {
  require_valid(cfg);
  if (spec.seeds.empty()) throw ConfigError("seeds", "at least one seed is required");
  struct Task {
    const CaseSpec* cs;
    Policy policy;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (const auto& name : spec.cases) {
    const CaseSpec& cs = cfg.find_case(name);
    for (const Policy p : spec.policies) {
      std::vector<std::uint64_t> seeds = spec.seeds;
      std::sort(seeds.begin(), seeds.end());
      for (const auto s : seeds) tasks.push_back({&cs, p, s});
    }
  }

  std::vector<RunRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::atomic<bool> failed{false};
  std::mutex progress_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      try {
        rows[i] = run_single(cfg, *tasks[i].cs, tasks[i].policy, tasks[i].seed);
      } catch (...) {
        errors[i] = std::current_exception();
        failed.store(true);
      }
      const std::size_t d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard lock(progress_mu);
        progress(d, tasks.size());
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw BatchError(tasks[i].seed, tasks[i].cs->name, tasks[i].policy, e.what());
    }
  }

  BatchResult out;
  out.raw = std::move(rows);
  out.aggregate = aggregate(out.raw);
  return out;
}

}  // namespace flowran::sim
