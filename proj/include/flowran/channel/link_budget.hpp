// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

#include "flowran/core/types.hpp"

namespace flowran::channel {

enum class ChannelQuality : std::uint8_t { Good = 0, Bad = 1 };

inline constexpr double kThermalNoiseDbmPerHz = -174.0;
inline constexpr double kDefaultGoodSnrDb = 6.0;

/// Good iff snr >= threshold (boundary inclusive).
constexpr ChannelQuality classify(double snr_db, double threshold_db = kDefaultGoodSnrDb) noexcept {
  return snr_db >= threshold_db ? ChannelQuality::Good : ChannelQuality::Bad;
}

struct LinkBudget {
  double tx_power_dbm = 0.0;
  double gains_db = 0.0;  // sum of tx and rx antenna gains
  double path_loss_db = 0.0;
  double shadowing_db = 0.0;  // positive values attenuate
  double noise_figure_db = 0.0;
};

struct ChannelSample {
  double path_loss_db = 0.0;
  double shadowing_db = 0.0;
  double snr_db = 0.0;
  ChannelQuality quality = ChannelQuality::Bad;
};

inline double noise_power_dbm(double bandwidth_hz, double noise_figure_db) {
  return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

inline ChannelSample compute_snr(const LinkBudget& link, double bandwidth_hz,
                                 double good_threshold_db = kDefaultGoodSnrDb) {
  if (!(bandwidth_hz > 0.0)) throw DomainError("bandwidth must be positive");
  ChannelSample s;
  s.path_loss_db = link.path_loss_db;
  s.shadowing_db = link.shadowing_db;
  s.snr_db = link.tx_power_dbm + link.gains_db - link.path_loss_db - link.shadowing_db -
             noise_power_dbm(bandwidth_hz, link.noise_figure_db);
  s.quality = classify(s.snr_db, good_threshold_db);
  return s;
}

}  // namespace flowran::channel
