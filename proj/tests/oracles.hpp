// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations used by the unit and acceptance tests.
// They deliberately share no code with the library beyond plain data types.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

inline int score(int lg, int lw, int ch, int s) { return 30 * lg + 10 * lw + 50 * ch + 25 * s; }

// 1 low, 2 medium, 3 high. Integer form of the 2/3 and 1/3 ratio cut points.
inline int level(int remaining, int initial) {
  if (initial <= 0) return 3;
  if (3 * remaining > 2 * initial) return 1;
  if (3 * remaining <= initial) return 3;
  return 2;
}

struct Ue {
  int id;
  int prio;
  int ch;  // 0 good, 1 bad
  bool dual;
  int ap;  // -1 none
  double dist;
};

struct State {
  int gnb_initial;
  int gnb_remaining;
  int wifi_initial;
  std::vector<int> wifi_remaining;
};

// Returns per-UE 0 (gNB) or 1 (Wi-Fi) keyed by id, plus the final remaining
// capacities.
struct DownlinkOut {
  std::map<int, int> rat;
  int gnb_remaining;
  std::vector<int> wifi_remaining;
};

inline DownlinkOut downlink(std::vector<Ue> ues, State st, int threshold = 170) {
  std::sort(ues.begin(), ues.end(), [](const Ue& a, const Ue& b) { return a.id < b.id; });
  DownlinkOut out;
  for (const Ue& u : ues) {
    if (!u.dual || u.ap < 0) {
      out.rat[u.id] = 0;
      continue;
    }
    const int lg = level(st.gnb_remaining, st.gnb_initial);
    const int lw = level(st.wifi_remaining[u.ap], st.wifi_initial);
    if (score(lg, lw, u.ch, u.prio) > threshold) {
      out.rat[u.id] = 1;
      if (st.wifi_remaining[u.ap] > 0) st.wifi_remaining[u.ap]--;
    } else {
      out.rat[u.id] = 0;
      if (st.gnb_remaining > 0) st.gnb_remaining--;
    }
  }
  out.gnb_remaining = st.gnb_remaining;
  out.wifi_remaining = st.wifi_remaining;
  return out;
}

// ul_wifi: ids of UEs whose uplink is currently on Wi-Fi. Returns moved ids.
inline std::set<int> uplink_moved(const std::vector<Ue>& ues, const std::set<int>& ul_wifi, int gnb_capacity,
                                  int w0) {
  std::map<int, std::vector<Ue>> per_ap;
  for (const Ue& u : ues) {
    if (u.ap >= 0 && ul_wifi.count(u.id)) per_ap[u.ap].push_back(u);
  }
  std::vector<std::pair<int, int>> aps;  // (-count, ap)
  for (const auto& [ap, v] : per_ap) aps.emplace_back(-static_cast<int>(v.size()), ap);
  std::sort(aps.begin(), aps.end());
  std::set<int> moved;
  int cap = std::max(0, gnb_capacity);
  for (const auto& [neg, ap] : aps) {
    const int n = -neg;
    const int k = std::max(0, std::min(n - w0, cap));
    auto v = per_ap[ap];
    std::sort(v.begin(), v.end(),
              [](const Ue& a, const Ue& b) { return std::tie(a.dist, a.id) < std::tie(b.dist, b.id); });
    for (int i = 0; i < k; ++i) moved.insert(v[i].id);
    cap -= k;
  }
  return moved;
}

inline std::vector<Ue> random_ues(std::mt19937_64& g, int max_ues, int aps) {
  std::uniform_int_distribution<int> n_d(0, max_ues), prio(1, 4), bit(0, 1), ap_d(-1, aps - 1);
  std::uniform_real_distribution<double> dist(1.0, 250.0);
  const int n = n_d(g);
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i * 3 + bit(g);
  std::shuffle(ids.begin(), ids.end(), g);
  std::vector<Ue> out;
  for (int id : ids) {
    Ue u{id, prio(g), bit(g), bit(g) == 1 || bit(g) == 1, ap_d(g), dist(g)};
    if (bit(g) && bit(g)) u.dist = 100.0;  // exercise distance ties
    out.push_back(u);
  }
  return out;
}

inline State random_state(std::mt19937_64& g, int aps) {
  std::uniform_int_distribution<int> cap(0, 30);
  State s;
  s.gnb_initial = cap(g);
  s.gnb_remaining = std::uniform_int_distribution<int>(0, s.gnb_initial)(g);
  s.wifi_initial = std::uniform_int_distribution<int>(0, 12)(g);
  for (int a = 0; a < aps; ++a) {
    s.wifi_remaining.push_back(std::uniform_int_distribution<int>(0, s.wifi_initial)(g));
  }
  return s;
}

}  // namespace oracle
