// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "flowran/rat/score.hpp"

namespace flowran::rat {

struct UeSelectionInput {
  UeId ue;
  int priority = 4;  // 1 is the most important service
  ChannelQuality gnb_channel = ChannelQuality::Good;
  bool dual_connected = false;
  std::optional<ApId> serving_ap;
  double dist_to_gnb_m = 0.0;

  [[nodiscard]] bool wifi_capable() const noexcept { return dual_connected && serving_ap.has_value(); }
};

struct RatPair {
  Rat downlink = Rat::Gnb;
  Rat uplink = Rat::Gnb;

  friend bool operator==(const RatPair&, const RatPair&) = default;
};

using RatAssignment = std::map<UeId, RatPair>;

/// Capacities are counted in user slots; every assigned user takes one.
struct RatLoadState {
  LoadLevel gnb_load = LoadLevel::Low;
  std::map<ApId, LoadLevel> wifi_load;
  int gnb_remaining = 0;
  std::map<ApId, int> wifi_remaining;
  int gnb_initial = 0;
  int wifi_initial = 0;
  LoadThresholds thresholds{};

  /// Fresh state at low load for the given AP set.
  static RatLoadState fresh(int gnb_capacity, int wifi_capacity_per_ap, std::size_t ap_count,
                            LoadThresholds th = {}) {
    RatLoadState s;
    s.gnb_initial = s.gnb_remaining = gnb_capacity;
    s.wifi_initial = wifi_capacity_per_ap;
    s.thresholds = th;
    for (std::size_t a = 0; a < ap_count; ++a) {
      const ApId id(static_cast<std::uint32_t>(a));
      s.wifi_remaining[id] = wifi_capacity_per_ap;
      s.wifi_load[id] = load_level(wifi_capacity_per_ap, wifi_capacity_per_ap, th);
    }
    s.gnb_load = load_level(gnb_capacity, gnb_capacity, th);
    return s;
  }

  [[nodiscard]] LoadLevel wifi_level(ApId ap) const {
    const auto it = wifi_load.find(ap);
    return it == wifi_load.end() ? LoadLevel::Low : it->second;
  }

  void take_gnb() {
    gnb_remaining = std::max(0, gnb_remaining - 1);
    gnb_load = load_level(gnb_remaining, gnb_initial, thresholds);
  }

  void take_wifi(ApId ap) {
    auto [it, inserted] = wifi_remaining.try_emplace(ap, wifi_initial);
    it->second = std::max(0, it->second - 1);
    wifi_load[ap] = load_level(it->second, wifi_initial, thresholds);
  }

  friend bool operator==(const RatLoadState&, const RatLoadState&) = default;
};

struct DownlinkSelection {
  RatAssignment assignment;
  RatLoadState state;
};

inline std::vector<UeSelectionInput> sorted_by_ue(std::vector<UeSelectionInput> ues) {
  std::stable_sort(ues.begin(), ues.end(),
                   [](const auto& a, const auto& b) { return a.ue < b.ue; });
  return ues;
}

/// Load- and channel-aware downlink RAT selection.
///
/// UEs are visited in ascending id order. A Wi-Fi-capable UE goes to Wi-Fi
/// when its score against the current state exceeds `threshold`; the chosen
/// RAT's capacity is then reduced and its load level refreshed. Uplink is
/// initialised equal to downlink.
inline DownlinkSelection select_downlink(const std::vector<UeSelectionInput>& ues,
                                         RatLoadState state,
                                         double threshold = kDefaultDecisionThreshold,
                                         const ScoreWeights& weights = {}) {
  DownlinkSelection out;
  for (const auto& u : sorted_by_ue(ues)) {
    check_priority(u.priority);
    if (!u.wifi_capable()) {
      out.assignment[u.ue] = {Rat::Gnb, Rat::Gnb};
      continue;
    }
    const double score = threshold_score(state.gnb_load, state.wifi_level(*u.serving_ap),
                                         u.gnb_channel, u.priority, weights);
    if (score > threshold) {
      out.assignment[u.ue] = {Rat::Wifi, Rat::Wifi};
      state.take_wifi(*u.serving_ap);
    } else {
      out.assignment[u.ue] = {Rat::Gnb, Rat::Gnb};
      state.take_gnb();
    }
  }
  out.state = std::move(state);
  return out;
}

struct UplinkSelection {
  RatAssignment assignment;
  int gnb_remaining = 0;
  std::vector<UeId> moved;
};

/// Uplink offload from crowded APs to the gNB.
///
/// APs are visited by descending count of uplink Wi-Fi users (ties by AP id).
/// For each, K = max(0, min(N - max_users_per_ap, remaining gNB capacity))
/// of its users closest to the gNB switch their uplink to the gNB. Downlink
/// entries are copied unchanged.
inline UplinkSelection select_uplink(const std::vector<UeSelectionInput>& ues,
                                     const RatAssignment& current, int gnb_capacity,
                                     int max_users_per_ap) {
  UplinkSelection out;
  out.assignment = current;
  out.gnb_remaining = std::max(0, gnb_capacity);

  std::map<ApId, std::vector<const UeSelectionInput*>> per_ap;
  for (const auto& u : ues) {
    const auto it = current.find(u.ue);
    if (it == current.end() || it->second.uplink != Rat::Wifi || !u.serving_ap) continue;
    per_ap[*u.serving_ap].push_back(&u);
  }

  std::vector<ApId> order;
  for (const auto& [ap, _] : per_ap) order.push_back(ap);
  std::stable_sort(order.begin(), order.end(), [&](ApId a, ApId b) {
    return per_ap[a].size() > per_ap[b].size();
  });

  for (ApId ap : order) {
    auto& users = per_ap[ap];
    const int n = static_cast<int>(users.size());
    const int k = std::max(0, std::min(n - max_users_per_ap, out.gnb_remaining));
    if (k == 0) continue;
    std::stable_sort(users.begin(), users.end(), [](const auto* a, const auto* b) {
      if (a->dist_to_gnb_m != b->dist_to_gnb_m) return a->dist_to_gnb_m < b->dist_to_gnb_m;
      return a->ue < b->ue;
    });
    for (int i = 0; i < k; ++i) {
      out.assignment[users[i]->ue].uplink = Rat::Gnb;
      out.moved.push_back(users[i]->ue);
    }
    out.gnb_remaining -= k;
  }
  return out;
}

/// Core-network-driven policy: priorities 1-2 on the gNB, 3-4 on Wi-Fi when
/// the UE can use it. Load and channel are not consulted.
inline RatAssignment baseline_downlink(const std::vector<UeSelectionInput>& ues) {
  RatAssignment out;
  for (const auto& u : ues) {
    check_priority(u.priority);
    const Rat r = (u.priority >= 3 && u.wifi_capable()) ? Rat::Wifi : Rat::Gnb;
    out[u.ue] = {r, r};
  }
  return out;
}

/// Uplink follows downlink.
inline RatAssignment baseline_uplink(const RatAssignment& dl) {
  RatAssignment out = dl;
  for (auto& [_, pair] : out) pair.uplink = pair.downlink;
  return out;
}

}  // namespace flowran::rat
