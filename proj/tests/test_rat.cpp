// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "flowran/rat/score.hpp"
#include "flowran/rat/selection.hpp"
#include "oracles.hpp"
#include "rat_adapters.hpp"

namespace fr = flowran::rat;
using flowran::ApId;
using flowran::Rat;
using flowran::UeId;
using fr::ChannelQuality;
using fr::LoadLevel;

namespace {

fr::UeSelectionInput ue(std::uint32_t id, int prio, bool capable, ChannelQuality ch = ChannelQuality::Good,
                        std::uint32_t ap = 0, double dist = 100) {
  fr::UeSelectionInput u;
  u.ue = UeId(id);
  u.priority = prio;
  u.gnb_channel = ch;
  u.dual_connected = capable;
  if (capable) u.serving_ap = ApId(ap);
  u.dist_to_gnb_m = dist;
  return u;
}

}  // namespace

TEST(Score, WorkedValues) {
  EXPECT_EQ(fr::threshold_score(LoadLevel::Low, LoadLevel::Low, ChannelQuality::Good, 1), 65);
  EXPECT_EQ(fr::threshold_score(LoadLevel::High, LoadLevel::High, ChannelQuality::Bad, 4), 270);
  EXPECT_EQ(fr::threshold_score(LoadLevel::High, LoadLevel::Low, ChannelQuality::Bad, 1), 175);
}

TEST(Score, MatchesBruteForceOnWholeDomain) {
  int n = 0;
  for (int lg = 1; lg <= 3; ++lg) {
    for (int lw = 1; lw <= 3; ++lw) {
      for (int ch = 0; ch <= 1; ++ch) {
        for (int s = 1; s <= 4; ++s) {
          const double got = fr::threshold_score(static_cast<LoadLevel>(lg), static_cast<LoadLevel>(lw),
                                                 static_cast<ChannelQuality>(ch), s);
          EXPECT_EQ(got, oracle::score(lg, lw, ch, s));
          EXPECT_EQ(got > 170, oracle::score(lg, lw, ch, s) > 170);
          ++n;
        }
      }
    }
  }
  EXPECT_EQ(n, 72);
}

TEST(Score, DomainMeanIs167Point5) { EXPECT_DOUBLE_EQ(fr::mean_score({}), 167.5); }

TEST(Score, RejectsOutOfDomain) {
  EXPECT_THROW(fr::threshold_score(LoadLevel::Low, LoadLevel::Low, ChannelQuality::Good, 0), flowran::DomainError);
  EXPECT_THROW(fr::threshold_score(LoadLevel::Low, LoadLevel::Low, ChannelQuality::Good, 5), flowran::DomainError);
  EXPECT_THROW(fr::threshold_score(static_cast<LoadLevel>(4), LoadLevel::Low, ChannelQuality::Good, 1),
               flowran::DomainError);
  EXPECT_THROW(fr::threshold_score(LoadLevel::Low, LoadLevel::Low, static_cast<ChannelQuality>(2), 1),
               flowran::DomainError);
}

TEST(LoadLevel, CutPoints) {
  EXPECT_EQ(fr::load_level(60, 60), LoadLevel::Low);
  EXPECT_EQ(fr::load_level(41, 60), LoadLevel::Low);
  EXPECT_EQ(fr::load_level(40, 60), LoadLevel::Medium);
  EXPECT_EQ(fr::load_level(21, 60), LoadLevel::Medium);
  EXPECT_EQ(fr::load_level(20, 60), LoadLevel::High);
  EXPECT_EQ(fr::load_level(0, 60), LoadLevel::High);
  for (int init = 1; init <= 90; ++init) {
    for (int rem = 0; rem <= init; ++rem) {
      EXPECT_EQ(fr::value(fr::load_level(rem, init)), oracle::level(rem, init)) << rem << "/" << init;
    }
  }
}

TEST(Downlink, FreshStateHighPriorityStaysOnGnb) {
  const auto r = fr::select_downlink({ue(0, 1, true)}, fr::RatLoadState::fresh(60, 10, 1));
  EXPECT_EQ(r.assignment.at(UeId(0)).downlink, Rat::Gnb);
  EXPECT_EQ(r.state.gnb_remaining, 59);
}

TEST(Downlink, LoadedGnbBadChannelGoesToWifi) {
  auto st = fr::RatLoadState::fresh(60, 10, 1);
  st.gnb_remaining = 10;
  st.gnb_load = LoadLevel::High;
  const auto r = fr::select_downlink({ue(0, 1, true, ChannelQuality::Bad)}, st);
  EXPECT_EQ(r.assignment.at(UeId(0)).downlink, Rat::Wifi);
  EXPECT_EQ(r.state.wifi_remaining.at(ApId(0)), 9);
}

TEST(Downlink, NrOnlyUesNeverTouchWifi) {
  const auto st = fr::RatLoadState::fresh(3, 10, 2);
  std::vector<fr::UeSelectionInput> ues;
  for (std::uint32_t i = 0; i < 8; ++i) ues.push_back(ue(i, 4, false, ChannelQuality::Bad));
  const auto r = fr::select_downlink(ues, st);
  for (const auto& [id, pair] : r.assignment) EXPECT_EQ(pair, (fr::RatPair{Rat::Gnb, Rat::Gnb}));
  EXPECT_EQ(r.state.wifi_remaining, st.wifi_remaining);
}

TEST(Downlink, MatchesReferenceOnRandomInstances) {
  std::mt19937_64 g(20260301);
  for (int it = 0; it < 1000; ++it) {
    const int aps = 1 + static_cast<int>(g() % 4);
    const auto ues = oracle::random_ues(g, 20, aps);
    const auto st = oracle::random_state(g, aps);
    const auto want = oracle::downlink(ues, st);
    const auto got = fr::select_downlink(adapt::to_inputs(ues), adapt::to_state(st));
    ASSERT_EQ(got.assignment.size(), want.rat.size());
    for (const auto& [id, rat] : want.rat) {
      const auto& pair = got.assignment.at(UeId(static_cast<std::uint32_t>(id)));
      ASSERT_EQ(static_cast<int>(pair.downlink), rat) << "instance " << it << " ue " << id;
      ASSERT_EQ(pair.uplink, pair.downlink);
    }
    ASSERT_EQ(got.state.gnb_remaining, want.gnb_remaining);
    for (int a = 0; a < aps; ++a) {
      ASSERT_EQ(got.state.wifi_remaining.at(ApId(static_cast<std::uint32_t>(a))), want.wifi_remaining[a]);
    }
  }
}

TEST(Downlink, WorseGnbChannelNeverPullsToGnb) {
  std::mt19937_64 g(7);
  for (int it = 0; it < 500; ++it) {
    auto ues = oracle::random_ues(g, 12, 3);
    if (ues.empty()) continue;
    const auto st = oracle::random_state(g, 3);
    auto good = ues;
    auto bad = ues;
    good.front().ch = 0;
    bad.front().ch = 1;
    // Only the first UE in visiting order is unaffected by earlier decisions.
    const int first = std::min_element(ues.begin(), ues.end(), [](auto& a, auto& b) { return a.id < b.id; })->id;
    for (auto* v : {&good, &bad}) {
      for (auto& u : *v) u.ch = (u.id == first) ? (v == &good ? 0 : 1) : u.ch;
    }
    const auto rg = fr::select_downlink(adapt::to_inputs(good), adapt::to_state(st));
    const auto rb = fr::select_downlink(adapt::to_inputs(bad), adapt::to_state(st));
    const UeId id(static_cast<std::uint32_t>(first));
    if (rg.assignment.at(id).downlink == Rat::Wifi) {
      EXPECT_EQ(rb.assignment.at(id).downlink, Rat::Wifi);
    }
  }
}

TEST(Downlink, DeterministicAndOrderInsensitive) {
  std::mt19937_64 g(99);
  const auto ues = oracle::random_ues(g, 20, 3);
  auto shuffled = ues;
  std::shuffle(shuffled.begin(), shuffled.end(), g);
  const auto st = adapt::to_state(oracle::random_state(g, 3));
  const auto a = fr::select_downlink(adapt::to_inputs(ues), st);
  const auto b = fr::select_downlink(adapt::to_inputs(shuffled), st);
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(a.state, b.state);
}

TEST(Uplink, NobodyMovesBelowCap) {
  std::vector<fr::UeSelectionInput> ues;
  fr::RatAssignment cur;
  for (std::uint32_t i = 0; i < 10; ++i) {
    ues.push_back(ue(i, 4, true, ChannelQuality::Good, 0, 10.0 * i + 5));
    cur[UeId(i)] = {Rat::Wifi, Rat::Wifi};
  }
  const auto r = fr::select_uplink(ues, cur, 60, 12);
  EXPECT_TRUE(r.moved.empty());
  EXPECT_EQ(r.assignment, cur);
}

TEST(Uplink, MovesNearestUsersUpToGnbCapacity) {
  std::vector<fr::UeSelectionInput> ues;
  fr::RatAssignment cur;
  const double d[] = {90, 30, 70, 10, 50, 80, 20, 60, 40, 100};
  for (std::uint32_t i = 0; i < 10; ++i) {
    ues.push_back(ue(i, 4, true, ChannelQuality::Good, 0, d[i]));
    cur[UeId(i)] = {Rat::Wifi, Rat::Wifi};
  }
  const auto r = fr::select_uplink(ues, cur, 2, 6);
  EXPECT_EQ(std::set<UeId>(r.moved.begin(), r.moved.end()), (std::set<UeId>{UeId(3), UeId(6)}));
  EXPECT_EQ(r.gnb_remaining, 0);
  for (const auto& [id, pair] : r.assignment) EXPECT_EQ(pair.downlink, Rat::Wifi);
}

TEST(Uplink, ExhaustedGnbLeavesAssignmentAlone) {
  std::mt19937_64 g(3);
  const auto ues = oracle::random_ues(g, 20, 2);
  std::set<int> ul;
  const auto cur = adapt::random_assignment(g, ues, ul);
  const auto r = fr::select_uplink(adapt::to_inputs(ues), cur, 0, 0);
  EXPECT_EQ(r.assignment, cur);
}

TEST(Uplink, MatchesBruteForceAndKeepsDownlink) {
  std::mt19937_64 g(424242);
  for (int it = 0; it < 1000; ++it) {
    const int aps = 1 + static_cast<int>(g() % 4);
    const auto ues = oracle::random_ues(g, 40, aps);
    std::set<int> ul;
    const auto cur = adapt::random_assignment(g, ues, ul);
    const int cap = static_cast<int>(g() % 15);
    const int w0 = static_cast<int>(g() % 8);
    const auto want = oracle::uplink_moved(ues, ul, cap, w0);
    const auto r = fr::select_uplink(adapt::to_inputs(ues), cur, cap, w0);
    std::set<int> got;
    for (UeId u : r.moved) got.insert(static_cast<int>(u.value));
    ASSERT_EQ(got, want) << "instance " << it;
    ASSERT_LE(static_cast<int>(r.moved.size()), cap);
    for (const auto& [id, pair] : cur) ASSERT_EQ(r.assignment.at(id).downlink, pair.downlink);
    // Per-AP uplink Wi-Fi count never exceeds max(w0, original count).
    std::map<int, int> before, after;
    for (const auto& u : ues) {
      if (u.ap < 0) continue;
      const UeId id(static_cast<std::uint32_t>(u.id));
      before[u.ap] += cur.at(id).uplink == Rat::Wifi;
      after[u.ap] += r.assignment.at(id).uplink == Rat::Wifi;
    }
    for (const auto& [ap, n] : after) ASSERT_LE(n, std::max(w0, before[ap]));
  }
}

TEST(Baseline, PriorityRule) {
  const auto a = fr::baseline_downlink({ue(0, 1, true), ue(1, 4, true), ue(2, 3, false), ue(3, 2, true)});
  EXPECT_EQ(a.at(UeId(0)).downlink, Rat::Gnb);
  EXPECT_EQ(a.at(UeId(1)).downlink, Rat::Wifi);
  EXPECT_EQ(a.at(UeId(2)).downlink, Rat::Gnb);
  EXPECT_EQ(a.at(UeId(3)).downlink, Rat::Gnb);
}

TEST(Baseline, UplinkCoupledAndIdempotent) {
  fr::RatAssignment dl{{UeId(0), {Rat::Wifi, Rat::Gnb}}, {UeId(1), {Rat::Gnb, Rat::Wifi}}};
  const auto ul = fr::baseline_uplink(dl);
  EXPECT_EQ(ul.at(UeId(0)).uplink, Rat::Wifi);
  EXPECT_EQ(ul.at(UeId(1)).uplink, Rat::Gnb);
  EXPECT_EQ(fr::baseline_uplink(ul), ul);
}
