// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "flowran/core/rng.hpp"
#include "flowran/core/types.hpp"

namespace flowran::macphy {

/// 802.11n (2.4 GHz, OFDM) DCF timing. All durations in microseconds.
struct DcfParams {
  TimeUs slot_us = 9;
  TimeUs sifs_us = 16;
  TimeUs difs_us = 34;
  int cw_min = 15;
  int cw_max = 1023;
  int retry_limit = 7;
  TimeUs ht_preamble_us = 36;  // HT-mixed: L-STF, L-LTF, L-SIG, HT-SIG, HT-STF, one HT-LTF
  TimeUs ack_us = 28;          // 14-byte ACK at 24 Mb/s with legacy preamble
  int mac_overhead_bytes = 38;  // QoS data header, LLC/SNAP, FCS
};

/// Duration of an HT PPDU carrying `mpdu_bytes` at `rate_mbps`.
inline TimeUs ppdu_duration_us(int mpdu_bytes, double rate_mbps, const DcfParams& p) {
  const double bits_per_symbol = rate_mbps * 4.0;  // 4 us OFDM symbols
  const double bits = 16.0 + 8.0 * mpdu_bytes + 6.0;  // SERVICE + PSDU + tail
  const auto symbols = static_cast<TimeUs>(std::ceil(bits / bits_per_symbol));
  return p.ht_preamble_us + 4 * symbols;
}

struct StaState {
  std::optional<int> backoff;  // remaining slots; drawn on first contention
  int cw = 15;
  int retries = 0;
};

struct WifiContentionState {
  DcfParams params;
  std::vector<StaState> stas;

  explicit WifiContentionState(std::size_t n = 0, DcfParams p = {}) : params(p) {
    stas.assign(n, StaState{std::nullopt, p.cw_min, 0});
  }
};

struct Contender {
  std::size_t sta = 0;
  TimeUs frame_us = 0;  // PPDU duration of the head-of-line frame
};

struct TxopOutcome {
  std::optional<std::size_t> winner;
  std::vector<std::size_t> collided;
  std::vector<std::size_t> dropped;  // colliders that hit the retry limit
  int idle_slots = 0;
  TimeUs airtime_us = 0;  // from medium access start to end of ACK (or ACK timeout)
};

/// Resolves one channel access among `contenders`.
///
/// Stations without a pending counter draw one uniformly in [0, CW]. The
/// smallest counter expires after DIFS plus that many idle slots; other
/// counters freeze at their decremented value. A single expiry is a success
/// and resets the winner to CWmin. Multiple expiries collide: each collider
/// doubles its window up to CWmax, or drops its frame past the retry limit.
inline TxopOutcome wifi_txop(WifiContentionState& state, const std::vector<Contender>& contenders,
                             Rng& rng) {
  if (contenders.empty()) throw DomainError("wifi_txop needs at least one contender");
  const DcfParams& p = state.params;
  for (const auto& c : contenders) {
    auto& s = state.stas.at(c.sta);
    if (!s.backoff) s.backoff = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(s.cw)));
  }
  int m = *state.stas[contenders.front().sta].backoff;
  for (const auto& c : contenders) m = std::min(m, *state.stas[c.sta].backoff);

  TxopOutcome out;
  out.idle_slots = m;
  TimeUs longest = 0;
  std::vector<std::size_t> expired;
  for (const auto& c : contenders) {
    auto& s = state.stas[c.sta];
    *s.backoff -= m;
    if (*s.backoff == 0) {
      expired.push_back(c.sta);
      longest = std::max(longest, c.frame_us);
    }
  }
  out.airtime_us = p.difs_us + m * p.slot_us + longest + p.sifs_us + p.ack_us;

  if (expired.size() == 1) {
    auto& s = state.stas[expired.front()];
    s.backoff.reset();
    s.cw = p.cw_min;
    s.retries = 0;
    out.winner = expired.front();
    return out;
  }
  for (std::size_t sta : expired) {
    auto& s = state.stas[sta];
    s.backoff.reset();
    out.collided.push_back(sta);
    if (++s.retries > p.retry_limit) {
      s.cw = p.cw_min;
      s.retries = 0;
      out.dropped.push_back(sta);
    } else {
      s.cw = std::min(2 * (s.cw + 1) - 1, p.cw_max);
    }
  }
  return out;
}

}  // namespace flowran::macphy
