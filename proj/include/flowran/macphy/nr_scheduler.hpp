// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "flowran/core/types.hpp"

namespace flowran::macphy {

enum class SchedulerMode { Priority, RoundRobin };

struct SchedulingRequest {
  UeId ue;
  double backlog_bytes = 0.0;
  int priority = 4;
  double bytes_per_prb = 0.0;  // already scaled for partial slots

  /// PRBs that would drain the whole backlog; 0 if the UE cannot be served.
  [[nodiscard]] int prbs_needed() const {
    if (backlog_bytes <= 0.0 || bytes_per_prb <= 0.0) return 0;
    return static_cast<int>(std::ceil(backlog_bytes / bytes_per_prb - 1e-9));
  }
};

struct PrbGrant {
  UeId ue;
  int prbs = 0;

  friend bool operator==(const PrbGrant&, const PrbGrant&) = default;
};

using Allocation = std::vector<PrbGrant>;

/// Allocates `prbs` resource blocks for one slot.
///
/// Priority: ascending priority value, ties by UE id, each capped at its
/// backlog. RoundRobin: equal shares over backlogged UEs with the remainder
/// going to the lowest ids; shares a UE cannot use are redistributed.
/// Grants are returned in ascending UE id order and omit zero grants.
inline Allocation nr_schedule_slot(std::vector<SchedulingRequest> queue, int prbs,
                                   SchedulerMode mode) {
  std::vector<std::pair<UeId, int>> granted;
  std::erase_if(queue, [](const auto& r) { return r.prbs_needed() == 0; });

  if (mode == SchedulerMode::Priority) {
    std::stable_sort(queue.begin(), queue.end(), [](const auto& a, const auto& b) {
      return a.priority != b.priority ? a.priority < b.priority : a.ue < b.ue;
    });
    int left = prbs;
    for (const auto& r : queue) {
      if (left <= 0) break;
      const int g = std::min(left, r.prbs_needed());
      granted.emplace_back(r.ue, g);
      left -= g;
    }
  } else {
    std::stable_sort(queue.begin(), queue.end(),
                     [](const auto& a, const auto& b) { return a.ue < b.ue; });
    struct Slot {
      UeId ue;
      int need;
      int got = 0;
    };
    std::vector<Slot> active;
    for (const auto& r : queue) active.push_back({r.ue, r.prbs_needed()});
    std::vector<Slot> done;
    int left = prbs;
    while (left > 0 && !active.empty()) {
      const int n = static_cast<int>(active.size());
      const int share = left / n;
      const int extra = left % n;
      bool any_satisfied = false;
      for (int i = 0; i < n; ++i) {
        const int offer = share + (i < extra ? 1 : 0);
        if (active[i].need - active[i].got <= offer) any_satisfied = true;
      }
      if (!any_satisfied) {
        for (int i = 0; i < n; ++i) active[i].got += share + (i < extra ? 1 : 0);
        left = 0;
        break;
      }
      // Satisfy everyone whose residual need fits in their offer, then
      // redistribute what is left among the rest.
      std::vector<Slot> still;
      for (int i = 0; i < n; ++i) {
        const int offer = share + (i < extra ? 1 : 0);
        const int residual = active[i].need - active[i].got;
        if (residual <= offer) {
          active[i].got += residual;
          left -= residual;
          done.push_back(active[i]);
        } else {
          still.push_back(active[i]);
        }
      }
      active = std::move(still);
    }
    for (const auto& s : done) granted.emplace_back(s.ue, s.got);
    for (const auto& s : active) granted.emplace_back(s.ue, s.got);
  }

  Allocation out;
  for (const auto& [ue, g] : granted) {
    if (g > 0) out.push_back({ue, g});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.ue < b.ue; });
  return out;
}

inline int total_prbs(const Allocation& a) {
  int s = 0;
  for (const auto& g : a) s += g.prbs;
  return s;
}

}  // namespace flowran::macphy
