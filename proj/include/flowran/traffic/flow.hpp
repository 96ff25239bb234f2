// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flowran/core/rng.hpp"
#include "flowran/core/types.hpp"

namespace flowran::traffic {

struct FlowSpec {
  UeId ue;
  Direction direction = Direction::Downlink;
  double rate_pps = 500.0;
  int payload_bytes = 1000;
  int header_bytes = 60;
  int service = 4;

  [[nodiscard]] int pdu_bytes() const noexcept { return payload_bytes + header_bytes; }
  /// Offered goodput in Mb/s (payload only).
  [[nodiscard]] double offered_mbps() const noexcept { return rate_pps * payload_bytes * 8.0 / 1e6; }
};

struct PacketRecord {
  std::size_t flow = 0;
  std::uint64_t seq = 0;
  TimeUs created_at = 0;
  std::optional<TimeUs> delivered_at;
  int bytes = 0;
};

/// Poisson arrivals in [0, horizon): exponential inter-arrival times with
/// mean 1/rate, rounded to the microsecond grid.
inline std::vector<PacketRecord> poisson_arrivals(const FlowSpec& flow, std::size_t flow_index,
                                                  double horizon_s, Rng& rng) {
  if (!(flow.rate_pps > 0.0)) throw DomainError("arrival rate must be positive");
  std::vector<PacketRecord> out;
  out.reserve(static_cast<std::size_t>(flow.rate_pps * horizon_s * 1.2) + 8);
  const double mean = 1.0 / flow.rate_pps;
  double t = rng.exponential(mean);
  std::uint64_t seq = 0;
  while (t < horizon_s) {
    const auto us = static_cast<TimeUs>(std::llround(t * 1e6));
    if (us >= static_cast<TimeUs>(std::llround(horizon_s * 1e6))) break;
    out.push_back({flow_index, seq++, us, std::nullopt, flow.pdu_bytes()});
    t += rng.exponential(mean);
  }
  return out;
}

}  // namespace flowran::traffic
