// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flowran/traffic/flow.hpp"

namespace flowran::traffic {

/// Per-flow counters. Delay sums are integer microseconds so accumulation is
/// exact and independent of order.
struct FlowCounters {
  FlowSpec spec;
  Rat rat = Rat::Gnb;
  std::uint64_t created = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
  std::uint64_t queued = 0;
  std::uint64_t payload_bytes_delivered = 0;
  std::uint64_t pdu_bytes_delivered = 0;
  std::int64_t delay_sum_us = 0;
};

/// Selects flows by any combination of UE, RAT, direction and service.
struct Scope {
  std::optional<UeId> ue{};
  std::optional<Rat> rat{};
  std::optional<Direction> direction{};
  std::optional<int> service{};

  [[nodiscard]] bool contains(const FlowCounters& f) const {
    return (!ue || f.spec.ue == *ue) && (!rat || f.rat == *rat) &&
           (!direction || f.spec.direction == *direction) && (!service || f.spec.service == *service);
  }
};

struct DelaySummary {
  std::optional<double> mean_ms;  // nullopt when nothing was delivered
  std::uint64_t delivered = 0;
  std::uint64_t lost = 0;  // created but not delivered by the horizon
};

class MetricsAccumulator {
 public:
  std::size_t add_flow(const FlowSpec& spec, Rat rat) {
    flows_.push_back({spec, rat});
    return flows_.size() - 1;
  }

  void on_created(std::size_t flow) { ++flows_.at(flow).created; }

  void on_delivered(std::size_t flow, TimeUs created_at, TimeUs delivered_at,
                    TimeUs extra_latency_us = 0) {
    auto& f = flows_.at(flow);
    if (delivered_at < created_at) throw DomainError("delivery before creation");
    ++f.delivered;
    f.payload_bytes_delivered += static_cast<std::uint64_t>(f.spec.payload_bytes);
    f.pdu_bytes_delivered += static_cast<std::uint64_t>(f.spec.pdu_bytes());
    f.delay_sum_us += (delivered_at - created_at) + extra_latency_us;
  }

  void on_dropped(std::size_t flow) { ++flows_.at(flow).dropped; }
  void set_queued(std::size_t flow, std::uint64_t n) { flows_.at(flow).queued = n; }

  [[nodiscard]] const std::vector<FlowCounters>& flows() const noexcept { return flows_; }

  /// Delivered payload bits over the horizon, in Mb/s. Headers are excluded.
  [[nodiscard]] double throughput_mbps(double horizon_s, const Scope& scope = {}) const {
    if (!(horizon_s > 0.0)) throw DomainError("horizon must be positive");
    std::uint64_t bytes = 0;
    for (const auto& f : flows_) {
      if (scope.contains(f)) bytes += f.payload_bytes_delivered;
    }
    return static_cast<double>(bytes) * 8.0 / horizon_s / 1e6;
  }

  [[nodiscard]] double offered_mbps(const Scope& scope = {}) const {
    double s = 0.0;
    for (const auto& f : flows_) {
      if (scope.contains(f)) s += f.spec.offered_mbps();
    }
    return s;
  }

  [[nodiscard]] DelaySummary avg_delay(const Scope& scope = {}) const {
    DelaySummary d;
    std::int64_t sum = 0;
    for (const auto& f : flows_) {
      if (!scope.contains(f)) continue;
      d.delivered += f.delivered;
      d.lost += f.created - f.delivered;
      sum += f.delay_sum_us;
    }
    if (d.delivered > 0) d.mean_ms = static_cast<double>(sum) / static_cast<double>(d.delivered) / 1e3;
    return d;
  }

  [[nodiscard]] std::uint64_t count(std::uint64_t FlowCounters::*field, const Scope& scope = {}) const {
    std::uint64_t n = 0;
    for (const auto& f : flows_) {
      if (scope.contains(f)) n += f.*field;
    }
    return n;
  }

 private:
  std::vector<FlowCounters> flows_;
};

}  // namespace flowran::traffic
