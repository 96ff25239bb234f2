// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>

namespace flowran::macphy {

struct WifiMcs {
  int index = 0;
  double rate_mbps = 0.0;

  friend bool operator==(const WifiMcs&, const WifiMcs&) = default;
};

struct McsEntry {
  int index;
  double min_snr_db;
  double rate_mbps;
};

// 802.11n, 20 MHz, one spatial stream, 800 ns guard interval.
inline constexpr std::array<McsEntry, 8> kHtMcsTable{{
    {0, 2.0, 6.5},
    {1, 5.0, 13.0},
    {2, 9.0, 19.5},
    {3, 11.0, 26.0},
    {4, 15.0, 39.0},
    {5, 18.0, 52.0},
    {6, 20.0, 58.5},
    {7, 25.0, 65.0},
}};

/// Highest MCS whose SNR threshold is met; nullopt below MCS 0.
constexpr std::optional<WifiMcs> wifi_rate(double snr_db) noexcept {
  std::optional<WifiMcs> best;
  for (const auto& e : kHtMcsTable) {
    if (snr_db >= e.min_snr_db) best = WifiMcs{e.index, e.rate_mbps};
  }
  return best;
}

}  // namespace flowran::macphy
