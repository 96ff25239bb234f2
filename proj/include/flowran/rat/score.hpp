// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "flowran/channel/link_budget.hpp"
#include "flowran/core/types.hpp"

namespace flowran::rat {

using channel::ChannelQuality;

enum class LoadLevel : std::uint8_t { Low = 1, Medium = 2, High = 3 };

constexpr int value(LoadLevel l) noexcept { return static_cast<int>(l); }
constexpr int value(ChannelQuality q) noexcept { return static_cast<int>(q); }

struct ScoreWeights {
  double load_gnb = 30.0;     // alpha
  double load_wifi = 10.0;    // beta
  double channel_gnb = 50.0;  // gamma
  double service = 25.0;      // delta
};

inline constexpr double kDefaultDecisionThreshold = 170.0;

/// Mean of the score over its whole input domain (load levels 1..3, channel
/// 0..1, priority 1..4). With default weights this is 167.5.
constexpr double mean_score(const ScoreWeights& w) noexcept {
  return 2.0 * w.load_gnb + 2.0 * w.load_wifi + 0.5 * w.channel_gnb + 2.5 * w.service;
}

inline void check_priority(int s) {
  if (s < 1 || s > 4) throw DomainError("service priority must be in 1..4");
}

inline void check_level(LoadLevel l) {
  if (value(l) < 1 || value(l) > 3) throw DomainError("load level must be in 1..3");
}

/// Weighted RAT-selection score. Higher scores favour Wi-Fi.
inline double threshold_score(LoadLevel gnb_load, LoadLevel wifi_load, ChannelQuality gnb_channel,
                              int priority, const ScoreWeights& w = {}) {
  check_level(gnb_load);
  check_level(wifi_load);
  check_priority(priority);
  if (value(gnb_channel) < 0 || value(gnb_channel) > 1) throw DomainError("channel must be 0 or 1");
  return w.load_gnb * value(gnb_load) + w.load_wifi * value(wifi_load) +
         w.channel_gnb * value(gnb_channel) + w.service * priority;
}

/// Remaining-capacity ratio to load level.
/// ratio > low_above -> Low; ratio <= high_at_or_below -> High; Medium between.
struct LoadThresholds {
  double low_above = 2.0 / 3.0;
  double high_at_or_below = 1.0 / 3.0;

  friend bool operator==(const LoadThresholds&, const LoadThresholds&) = default;
};

inline LoadLevel load_level(int remaining, int initial, const LoadThresholds& th = {}) {
  if (initial <= 0) return LoadLevel::High;
  const double ratio = static_cast<double>(remaining) / initial;
  if (ratio > th.low_above) return LoadLevel::Low;
  if (ratio <= th.high_at_or_below) return LoadLevel::High;
  return LoadLevel::Medium;
}

}  // namespace flowran::rat
