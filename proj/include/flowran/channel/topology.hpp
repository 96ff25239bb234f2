// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "flowran/channel/radio_params.hpp"
#include "flowran/core/rng.hpp"
#include "flowran/core/types.hpp"

namespace flowran::channel {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct PlacementCounts {
  int aps = 10;
  int ues = 80;
  double dual_connected_fraction = 0.8;
};

/// How UE positions are drawn.
///
/// `CoverageConditioned` places the dual-connected share uniformly over the
/// union of AP coverage disks (rejection sampling inside the cell) and the
/// rest uniformly over the cell, so the dual-connected share is always met.
/// `Uniform` places every UE uniformly over the cell and marks a random subset
/// of the covered UEs as dual-connected; when coverage falls short, every
/// covered UE is dual-connected and `coverage_deficit` records the shortfall.
enum class PlacementMode { CoverageConditioned, Uniform };

struct Topology {
  double cell_radius_m = 0.0;
  double coverage_radius_m = 0.0;
  Point2 gnb_position{};
  std::vector<Point2> ap_positions;
  std::vector<Point2> ue_positions;
  std::vector<std::optional<ApId>> ue_ap_association;
  std::vector<bool> dual_connected;
  int coverage_deficit = 0;

  [[nodiscard]] std::size_t ue_count() const noexcept { return ue_positions.size(); }
  [[nodiscard]] std::size_t ap_count() const noexcept { return ap_positions.size(); }
  [[nodiscard]] int dual_connected_count() const noexcept {
    return static_cast<int>(std::count(dual_connected.begin(), dual_connected.end(), true));
  }
  [[nodiscard]] double distance_to_gnb(UeId ue) const {
    return distance(ue_positions.at(ue.value), gnb_position);
  }
};

inline Point2 uniform_in_disk(Rng& rng, Point2 center, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

/// Nearest AP within `coverage`, if any. Ties go to the lower AP id.
inline std::optional<ApId> nearest_ap(Point2 p, const std::vector<Point2>& aps, double coverage) {
  std::optional<ApId> best;
  double best_d = coverage;
  for (std::size_t i = 0; i < aps.size(); ++i) {
    const double d = distance(p, aps[i]);
    if (d <= coverage && (!best || d < best_d)) {
      best = ApId(static_cast<std::uint32_t>(i));
      best_d = d;
    }
  }
  return best;
}

inline int dual_connected_target(const PlacementCounts& counts) {
  return static_cast<int>(std::lround(counts.dual_connected_fraction * counts.ues));
}

/// Places the gNB at the origin, APs and UEs inside the cell disk.
inline Topology place_topology(Rng rng, const PlacementCounts& counts, const RadioParams& params,
                               PlacementMode mode = PlacementMode::CoverageConditioned) {
  if (counts.aps <= 0 || counts.ues <= 0) throw DomainError("placement counts must be positive");
  Topology t;
  t.cell_radius_m = params.cell_radius_m;
  t.coverage_radius_m = params.wifi_coverage_m;
  const double R = params.cell_radius_m;
  const double cov = params.wifi_coverage_m;

  Rng ap_rng = rng.split("aps");
  for (int i = 0; i < counts.aps; ++i) t.ap_positions.push_back(uniform_in_disk(ap_rng, {}, R));

  const int n = counts.ues;
  const int target = dual_connected_target(counts);
  Rng ue_rng = rng.split("ues");
  Rng pick_rng = rng.split("dual");

  // Partial Fisher-Yates over UE ids; the first `target` entries are chosen.
  auto pick_subset = [&](std::vector<int> pool, int k) {
    for (int i = 0; i < k; ++i) {
      const auto j = i + static_cast<int>(pick_rng.uniform_int(pool.size() - 1 - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  };

  t.ue_positions.resize(n);
  t.dual_connected.assign(n, false);

  if (mode == PlacementMode::CoverageConditioned) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int id : pick_subset(ids, target)) t.dual_connected[id] = true;
    for (int i = 0; i < n; ++i) {
      Point2 p = uniform_in_disk(ue_rng, {}, R);
      if (t.dual_connected[i]) {
        while (!nearest_ap(p, t.ap_positions, cov)) p = uniform_in_disk(ue_rng, {}, R);
      }
      t.ue_positions[i] = p;
    }
  } else {
    for (int i = 0; i < n; ++i) t.ue_positions[i] = uniform_in_disk(ue_rng, {}, R);
  }

  t.ue_ap_association.resize(n);
  std::vector<int> covered;
  for (int i = 0; i < n; ++i) {
    t.ue_ap_association[i] = nearest_ap(t.ue_positions[i], t.ap_positions, cov);
    if (t.ue_ap_association[i]) covered.push_back(i);
  }

  if (mode == PlacementMode::Uniform) {
    const int k = std::min<int>(target, static_cast<int>(covered.size()));
    for (int id : pick_subset(covered, k)) t.dual_connected[id] = true;
    t.coverage_deficit = target - k;
  }
  return t;
}

inline Topology place_topology(std::uint64_t seed, const PlacementCounts& counts,
                               const RadioParams& params = {},
                               PlacementMode mode = PlacementMode::CoverageConditioned) {
  return place_topology(Rng(seed).split("placement"), counts, params, mode);
}

/// Debug dump: ue_id,x,y,ap_id,dual_connected (ap_id empty when unassociated).
inline void write_topology_csv(std::ostream& os, const Topology& t) {
  os << "ue_id,x,y,ap_id,dual_connected\n";
  for (std::size_t i = 0; i < t.ue_count(); ++i) {
    os << i << ',' << t.ue_positions[i].x << ',' << t.ue_positions[i].y << ',';
    if (t.ue_ap_association[i]) os << t.ue_ap_association[i]->value;
    os << ',' << (t.dual_connected[i] ? 1 : 0) << '\n';
  }
}

}  // namespace flowran::channel
