// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

namespace flowran::macphy {

struct CqiEntry {
  int cqi;
  double min_snr_db;
  double efficiency;  // bits per resource element
};

// Spectral efficiencies of the 4-bit CQI table (64QAM, TS 38.214 Table
// 5.2.2.1-2). SNR switching points target roughly 10% BLER on AWGN.
inline constexpr std::array<CqiEntry, 15> kCqiTable{{
    {1, -6.7, 0.1523},  {2, -4.7, 0.2344},  {3, -2.3, 0.3770},  {4, 0.2, 0.6016},
    {5, 2.4, 0.8770},   {6, 4.3, 1.1758},   {7, 5.9, 1.4766},   {8, 8.1, 1.9141},
    {9, 10.3, 2.4063},  {10, 11.7, 2.7305}, {11, 14.1, 3.3223}, {12, 16.3, 3.9023},
    {13, 18.7, 4.5234}, {14, 21.0, 5.1152}, {15, 22.7, 5.5547},
}};

inline constexpr int kSubcarriersPerPrb = 12;
inline constexpr int kSymbolsPerSlot = 14;

/// Highest CQI whose switching point is met; 0 means outage.
constexpr int cqi_for_snr(double snr_db) noexcept {
  int cqi = 0;
  for (const auto& e : kCqiTable) {
    if (snr_db >= e.min_snr_db) cqi = e.cqi;
  }
  return cqi;
}

constexpr double bytes_per_prb_slot_for_cqi(int cqi) noexcept {
  if (cqi <= 0) return 0.0;
  return kSubcarriersPerPrb * kSymbolsPerSlot * kCqiTable[cqi - 1].efficiency / 8.0;
}

/// Payload bytes one PRB carries in one full slot at the given SNR.
constexpr double link_rate_nr(double snr_db) noexcept {
  return bytes_per_prb_slot_for_cqi(cqi_for_snr(snr_db));
}

}  // namespace flowran::macphy
