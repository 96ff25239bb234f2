// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "flowran/macphy/dcf.hpp"
#include "flowran/macphy/nr_rate.hpp"
#include "flowran/macphy/nr_scheduler.hpp"
#include "flowran/macphy/tdd.hpp"
#include "flowran/macphy/wifi_rate.hpp"
#include "harness.hpp"

namespace mp = flowran::macphy;
using flowran::Direction;
using flowran::Rng;
using flowran::UeId;

namespace {

mp::SchedulingRequest req(std::uint32_t ue, double backlog, int prio, double bpp = 100.0) {
  return {UeId(ue), backlog, prio, bpp};
}

int grant_of(const mp::Allocation& a, std::uint32_t ue) {
  for (const auto& g : a) {
    if (g.ue == UeId(ue)) return g.prbs;
  }
  return 0;
}

}  // namespace

TEST(Tdd, StandardPatternIndexing) {
  const auto p = mp::TddPattern::standard();
  EXPECT_EQ(mp::tdd_slot_type(0, p), mp::SlotType::D);
  EXPECT_EQ(mp::tdd_slot_type(3, p), mp::SlotType::S);
  EXPECT_EQ(mp::tdd_slot_type(4, p), mp::SlotType::U);
  EXPECT_EQ(mp::tdd_slot_type(static_cast<std::int64_t>(p.slots.size()), p), mp::tdd_slot_type(0, p));
  EXPECT_EQ(p.period_us(), 5000);
  EXPECT_EQ(p.to_string(), "DDDSUUUUUU");
}

TEST(Tdd, ParseAndReject) {
  EXPECT_EQ(mp::TddPattern::parse("{D,D,D,S,U,U,U,U,U}").to_string(), "DDDSUUUUU");
  EXPECT_THROW(mp::TddPattern::parse("DDX"), flowran::DomainError);
  EXPECT_THROW(mp::TddPattern::parse(""), flowran::DomainError);
}

TEST(Tdd, SpecialSlotShares) {
  EXPECT_DOUBLE_EQ(mp::slot_share(mp::SlotType::S, Direction::Downlink), 13.0 / 14.0);
  EXPECT_DOUBLE_EQ(mp::slot_share(mp::SlotType::S, Direction::Uplink), 0.0);
  EXPECT_DOUBLE_EQ(mp::slot_share(mp::SlotType::D, Direction::Uplink), 0.0);
  EXPECT_DOUBLE_EQ(mp::slot_share(mp::SlotType::U, Direction::Uplink), 1.0);
}

TEST(NrRate, OutageAndPeak) {
  EXPECT_EQ(mp::link_rate_nr(-10.0), 0.0);
  EXPECT_NEAR(mp::link_rate_nr(40.0), 116.6487, 1e-4);  // 12 * 14 * 5.5547 / 8
  EXPECT_LE(mp::link_rate_nr(10.0), mp::link_rate_nr(20.0));
}

TEST(NrRate, MonotoneAndTotal) {
  double prev = -1;
  for (double s = -60; s <= 60; s += 0.05) {
    const double r = mp::link_rate_nr(s);
    EXPECT_TRUE(std::isfinite(r));
    EXPECT_GE(r, prev);
    prev = r;
  }
  EXPECT_EQ(mp::link_rate_nr(-1e300), 0.0);
  EXPECT_EQ(mp::link_rate_nr(1e300), mp::link_rate_nr(40.0));
}

TEST(WifiRate, TableEnds) {
  const auto top = mp::wifi_rate(30.0);
  ASSERT_TRUE(top);
  EXPECT_EQ(top->index, 7);
  EXPECT_DOUBLE_EQ(top->rate_mbps, 65.0);
  const auto bottom = mp::wifi_rate(mp::kHtMcsTable[0].min_snr_db + 0.01);
  ASSERT_TRUE(bottom);
  EXPECT_DOUBLE_EQ(bottom->rate_mbps, 6.5);
  EXPECT_FALSE(mp::wifi_rate(mp::kHtMcsTable[0].min_snr_db - 0.01));
}

TEST(WifiRate, Monotone) {
  double prev = 0;
  for (double s = -20; s <= 50; s += 0.1) {
    const auto m = mp::wifi_rate(s);
    const double r = m ? m->rate_mbps : 0.0;
    EXPECT_GE(r, prev);
    prev = r;
  }
}

TEST(Scheduler, StrictPriorityTakesAll) {
  const auto a = mp::nr_schedule_slot({req(0, 1e9, 4), req(1, 1e9, 1)}, 162, mp::SchedulerMode::Priority);
  EXPECT_EQ(grant_of(a, 1), 162);
  EXPECT_EQ(grant_of(a, 0), 0);
}

TEST(Scheduler, PriorityCapsAtBacklog) {
  // 950 bytes at 100 bytes/PRB needs 10 PRBs; the rest spills to the next UE.
  const auto a = mp::nr_schedule_slot({req(1, 950, 1), req(2, 1e9, 2)}, 162, mp::SchedulerMode::Priority);
  EXPECT_EQ(grant_of(a, 1), 10);
  EXPECT_EQ(grant_of(a, 2), 152);
}

TEST(Scheduler, RoundRobinEqualSplit) {
  const auto a = mp::nr_schedule_slot({req(0, 1e9, 1), req(1, 1e9, 4), req(2, 1e9, 2)}, 162,
                                      mp::SchedulerMode::RoundRobin);
  EXPECT_EQ(grant_of(a, 0), 54);
  EXPECT_EQ(grant_of(a, 1), 54);
  EXPECT_EQ(grant_of(a, 2), 54);
}

TEST(Scheduler, RoundRobinRemainderAndRedistribution) {
  auto a = mp::nr_schedule_slot({req(5, 1e9, 1), req(3, 1e9, 1)}, 161, mp::SchedulerMode::RoundRobin);
  EXPECT_EQ(grant_of(a, 3), 81);
  EXPECT_EQ(grant_of(a, 5), 80);
  // UE 0 needs 2 PRBs; the other two split what it leaves.
  a = mp::nr_schedule_slot({req(0, 200, 1), req(1, 1e9, 1), req(2, 1e9, 1)}, 162, mp::SchedulerMode::RoundRobin);
  EXPECT_EQ(grant_of(a, 0), 2);
  EXPECT_EQ(grant_of(a, 1), 80);
  EXPECT_EQ(grant_of(a, 2), 80);
}

TEST(Scheduler, UnservableUesGetNothing) {
  const auto a = mp::nr_schedule_slot({req(0, 1e9, 1, 0.0), req(1, 0, 1)}, 162, mp::SchedulerMode::Priority);
  EXPECT_TRUE(a.empty());
}

TEST(Scheduler, ConservationAndStrictPriorityProperties) {
  std::mt19937_64 g(11);
  for (int it = 0; it < 2000; ++it) {
    std::vector<mp::SchedulingRequest> q;
    const int n = 1 + static_cast<int>(g() % 12);
    for (int i = 0; i < n; ++i) {
      q.push_back(req(static_cast<std::uint32_t>(i), static_cast<double>(g() % 20000),
                      1 + static_cast<int>(g() % 4), 1.0 + static_cast<double>(g() % 116)));
    }
    for (auto mode : {mp::SchedulerMode::Priority, mp::SchedulerMode::RoundRobin}) {
      const auto a = mp::nr_schedule_slot(q, 162, mode);
      ASSERT_LE(mp::total_prbs(a), 162);
      for (const auto& r : q) ASSERT_LE(grant_of(a, r.ue.value), r.prbs_needed());
      int need_all = 0;
      for (const auto& r : q) need_all += r.prbs_needed();
      ASSERT_EQ(mp::total_prbs(a), std::min(162, need_all));  // work conserving
      if (mode != mp::SchedulerMode::Priority) continue;
      for (const auto& lo : q) {
        if (grant_of(a, lo.ue.value) == 0) continue;
        for (const auto& hi : q) {
          if (hi.priority < lo.priority || (hi.priority == lo.priority && hi.ue < lo.ue)) {
            ASSERT_EQ(grant_of(a, hi.ue.value), hi.prbs_needed());
          }
        }
      }
    }
  }
}

TEST(Dcf, SingleContenderNeverCollides) {
  mp::WifiContentionState st(1);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto r = mp::wifi_txop(st, {{0, 100}}, rng);
    ASSERT_TRUE(r.winner);
    ASSERT_TRUE(r.collided.empty());
    ASSERT_GE(r.idle_slots, 0);
    ASSERT_LE(r.idle_slots, 15);
  }
}

TEST(Dcf, EqualCountersCollideAndDouble) {
  mp::WifiContentionState st(2);
  st.stas[0].backoff = 3;
  st.stas[1].backoff = 3;
  Rng rng(1);
  const auto r = mp::wifi_txop(st, {{0, 100}, {1, 150}}, rng);
  EXPECT_FALSE(r.winner);
  EXPECT_EQ(r.collided.size(), 2u);
  EXPECT_EQ(st.stas[0].cw, 31);
  EXPECT_EQ(st.stas[1].cw, 31);
  EXPECT_EQ(r.airtime_us, 34 + 3 * 9 + 150 + 16 + 28);
}

TEST(Dcf, LoserFreezesResidualCounter) {
  mp::WifiContentionState st(2);
  st.stas[0].backoff = 2;
  st.stas[1].backoff = 7;
  Rng rng(1);
  const auto r = mp::wifi_txop(st, {{0, 100}, {1, 100}}, rng);
  ASSERT_TRUE(r.winner);
  EXPECT_EQ(*r.winner, 0u);
  EXPECT_EQ(*st.stas[1].backoff, 5);
  EXPECT_FALSE(st.stas[0].backoff);
  EXPECT_EQ(st.stas[0].cw, 15);
}

TEST(Dcf, WindowCapsAndRetryLimitDrops) {
  mp::DcfParams p;
  p.retry_limit = 7;
  mp::WifiContentionState st(2, p);
  Rng rng(1);
  std::vector<int> cws;
  bool dropped = false;
  for (int i = 0; i < 8 && !dropped; ++i) {
    st.stas[0].backoff = 0;
    st.stas[1].backoff = 0;
    const auto r = mp::wifi_txop(st, {{0, 100}, {1, 100}}, rng);
    cws.push_back(st.stas[0].cw);
    dropped = !r.dropped.empty();
  }
  EXPECT_TRUE(dropped);
  EXPECT_EQ(cws.size(), 8u);
  EXPECT_EQ(cws[0], 31);
  EXPECT_EQ(cws[5], 1023);
  EXPECT_EQ(cws[6], 1023);
  EXPECT_EQ(cws[7], 15);  // reset after the drop
  for (const auto& s : st.stas) {
    EXPECT_GE(s.cw, p.cw_min);
    EXPECT_LE(s.cw, p.cw_max);
  }
}

TEST(Dcf, RejectsEmptyContention) {
  mp::WifiContentionState st(1);
  Rng rng(1);
  EXPECT_THROW(mp::wifi_txop(st, {}, rng), flowran::DomainError);
}

TEST(Dcf, PpduDuration) {
  // 1098-byte MPDU at 65 Mb/s: ceil((16 + 8784 + 6) / 260) = 34 symbols.
  EXPECT_EQ(mp::ppdu_duration_us(1098, 65.0, {}), 36 + 4 * 34);
}

TEST(Dcf, SaturatedFairnessChiSquare) {
  const auto r = harness::saturated_dcf(5, 200000, 1, 200, 2000);
  EXPECT_LT(harness::max_share_deviation(r.airtime_us), 0.05);
  ASSERT_EQ(r.batches.size(), 100u);
  // 4 degrees of freedom, p = 0.001.
  EXPECT_LT(harness::batch_means_chi_square(r.batches), 18.47);
  EXPECT_GT(r.collisions, 0);
}

TEST(Dcf, BatchChiSquareDetectsBias) {
  // A station that always wins twice as often must be flagged.
  std::vector<std::vector<long>> b;
  std::mt19937_64 g(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<long> row{0, 0, 0, 0, 0};
    for (int j = 0; j < 2000; ++j) {
      const auto u = g() % 6;
      row[u == 5 ? 0 : u]++;
    }
    b.push_back(row);
  }
  EXPECT_GT(harness::batch_means_chi_square(b), 18.47);
}
