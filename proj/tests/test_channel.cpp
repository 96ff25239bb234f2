// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "flowran/channel/deployment.hpp"
#include "flowran/channel/link_budget.hpp"
#include "flowran/channel/pathloss.hpp"
#include "flowran/channel/topology.hpp"

namespace fc = flowran::channel;
using flowran::Rng;

namespace {

double sample_mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
  const double m = sample_mean(v);
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

TEST(PathLoss, UmaLosAt100m) {
  // 28 + 22 log10(sqrt(100^2 + 23.5^2)) + 20 log10(1.9)
  EXPECT_NEAR(fc::pathloss_nr(100.0, fc::LosState::Los, {}), 77.8319, 1e-3);
}

TEST(PathLoss, UmiLosAt20m) {
  // 32.4 + 21 log10(sqrt(20^2 + 8.5^2)) + 20 log10(2.4)
  EXPECT_NEAR(fc::pathloss_wifi(20.0, fc::LosState::Los, {}), 68.0830, 1e-3);
}

TEST(PathLoss, NlosNeverBelowLos) {
  for (double d = 1; d <= 250; d += 7) {
    EXPECT_GE(fc::pathloss_nr(d, fc::LosState::Nlos, {}), fc::pathloss_nr(d, fc::LosState::Los, {}));
    EXPECT_GE(fc::pathloss_wifi(d, fc::LosState::Nlos, {}), fc::pathloss_wifi(d, fc::LosState::Los, {}));
  }
}

TEST(PathLoss, StrictlyIncreasingInDistance) {
  for (auto los : {fc::LosState::Los, fc::LosState::Nlos}) {
    double prev_nr = -1e9, prev_w = -1e9;
    for (double d = 0.5; d <= 250.0; d += 0.5) {
      const double nr = fc::pathloss_nr(d, los, {});
      const double w = fc::pathloss_wifi(d, los, {});
      EXPECT_GT(nr, prev_nr) << d;
      EXPECT_GT(w, prev_w) << d;
      prev_nr = nr;
      prev_w = w;
    }
  }
  EXPECT_LT(fc::pathloss_nr(10, fc::LosState::Los, {}), fc::pathloss_nr(200, fc::LosState::Los, {}));
  EXPECT_LT(fc::pathloss_wifi(5, fc::LosState::Nlos, {}), fc::pathloss_wifi(35, fc::LosState::Nlos, {}));
}

TEST(PathLoss, RejectsNonPositiveDistance) {
  EXPECT_THROW(fc::pathloss_nr(0.0, fc::LosState::Los, {}), flowran::DomainError);
  EXPECT_THROW(fc::pathloss_wifi(-3.0, fc::LosState::Los, {}), flowran::DomainError);
}

TEST(LosProbability, BoundsAndShortRange) {
  EXPECT_DOUBLE_EQ(fc::los_probability_uma(10, 1.5), 1.0);
  EXPECT_DOUBLE_EQ(fc::los_probability_umi(18), 1.0);
  for (double d = 19; d < 250; d += 11) {
    const double p = fc::los_probability_uma(d, 1.5);
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 1.0);
  }
}

TEST(LinkBudget, WorkedExample) {
  // 23 + 17 - 100 - (-174 + 10 log10(60e6) + 7)
  const auto s = fc::compute_snr({23, 17, 100, 0, 7}, 60e6);
  EXPECT_NEAR(s.snr_db, 29.2185, 1e-3);
  EXPECT_EQ(s.quality, fc::ChannelQuality::Good);
}

TEST(LinkBudget, ThresholdIsInclusive) {
  EXPECT_EQ(fc::classify(6.0), fc::ChannelQuality::Good);
  EXPECT_EQ(fc::classify(5.9), fc::ChannelQuality::Bad);
  EXPECT_EQ(fc::classify(std::nextafter(6.0, 0.0)), fc::ChannelQuality::Bad);
  for (double s = -20; s < 40; s += 0.37) EXPECT_EQ(fc::classify(s) == fc::ChannelQuality::Good, s >= 6.0);
}

TEST(LinkBudget, RejectsNonPositiveBandwidth) {
  EXPECT_THROW(fc::compute_snr({}, 0.0), flowran::DomainError);
  EXPECT_THROW(fc::compute_snr({}, -1.0), flowran::DomainError);
}

TEST(LinkBudget, ShadowingAttenuates) {
  const auto a = fc::compute_snr({23, 17, 100, 0, 7}, 60e6);
  const auto b = fc::compute_snr({23, 17, 100, 3, 7}, 60e6);
  EXPECT_NEAR(a.snr_db - b.snr_db, 3.0, 1e-12);
}

TEST(Topology, ContainmentAndCounts) {
  const auto t = fc::place_topology(7, {10, 80, 0.8});
  ASSERT_EQ(t.ap_count(), 10u);
  ASSERT_EQ(t.ue_count(), 80u);
  for (const auto& p : t.ap_positions) EXPECT_LE(fc::distance(p, t.gnb_position), 250.0);
  for (const auto& p : t.ue_positions) EXPECT_LE(fc::distance(p, t.gnb_position), 250.0);
  EXPECT_EQ(t.dual_connected_count(), 64);
  EXPECT_EQ(t.coverage_deficit, 0);
}

TEST(Topology, AssociationIsNearestApWithinCoverage) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (auto mode : {fc::PlacementMode::CoverageConditioned, fc::PlacementMode::Uniform}) {
      const auto t = fc::place_topology(seed, {10, 80, 0.8}, {}, mode);
      for (std::size_t i = 0; i < t.ue_count(); ++i) {
        double best = 1e18;
        std::size_t best_ap = 0;
        for (std::size_t a = 0; a < t.ap_count(); ++a) {
          const double d = fc::distance(t.ue_positions[i], t.ap_positions[a]);
          if (d < best) {
            best = d;
            best_ap = a;
          }
        }
        if (best <= 40.0) {
          ASSERT_TRUE(t.ue_ap_association[i].has_value());
          EXPECT_EQ(t.ue_ap_association[i]->value, best_ap);
        } else {
          EXPECT_FALSE(t.ue_ap_association[i].has_value());
        }
        if (t.dual_connected[i]) {
          EXPECT_TRUE(t.ue_ap_association[i].has_value());
        }
      }
      if (mode == fc::PlacementMode::CoverageConditioned) {
        EXPECT_EQ(t.dual_connected_count(), 64);
      } else {
        EXPECT_EQ(t.dual_connected_count() + t.coverage_deficit, 64);
      }
    }
  }
}

TEST(Topology, NearestApOutsideCoverage) {
  const std::vector<fc::Point2> aps{{0, 0}};
  EXPECT_FALSE(fc::nearest_ap({41, 0}, aps, 40.0).has_value());
  EXPECT_TRUE(fc::nearest_ap({40, 0}, aps, 40.0).has_value());
}

TEST(Topology, BitDeterministicPerSeed) {
  std::ostringstream a, b, c;
  fc::write_topology_csv(a, fc::place_topology(11, {10, 80, 0.8}));
  fc::write_topology_csv(b, fc::place_topology(11, {10, 80, 0.8}));
  fc::write_topology_csv(c, fc::place_topology(12, {10, 80, 0.8}));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str(), c.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "ue_id,x,y,ap_id,dual_connected");
}

TEST(Topology, RejectsNonPositiveCounts) {
  EXPECT_THROW(fc::place_topology(1, {0, 80, 0.8}), flowran::DomainError);
}

TEST(Deployment, ShadowingStatistics) {
  std::vector<double> uma_los, uma_nlos, umi_los, umi_nlos;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Rng root(seed);
    const auto t = fc::place_topology(root.split("placement"), {10, 80, 0.8}, {});
    const auto links = fc::compute_deployment_channels(t, {}, root.split("los"), root.split("shadowing"));
    for (const auto& l : links) {
      (l.nr_los == fc::LosState::Los ? uma_los : uma_nlos).push_back(l.nr_dl.shadowing_db);
      if (l.wifi_dl) (*l.wifi_los == fc::LosState::Los ? umi_los : umi_nlos).push_back(l.wifi_dl->shadowing_db);
    }
  }
  const struct {
    const std::vector<double>& v;
    double sigma;
  } sets[] = {{uma_los, 4.0}, {uma_nlos, 6.0}, {umi_los, 4.0}, {umi_nlos, 7.82}};
  for (const auto& s : sets) {
    ASSERT_GT(s.v.size(), 500u);
    EXPECT_NEAR(sample_mean(s.v), 0.0, 4.0 * s.sigma / std::sqrt(static_cast<double>(s.v.size())));
    EXPECT_NEAR(sample_std(s.v), s.sigma, 0.1 * s.sigma);
  }
}

TEST(Deployment, BothDirectionsShareShadowing) {
  const Rng root(5);
  const auto t = fc::place_topology(root.split("placement"), {10, 80, 0.8}, {});
  const auto links = fc::compute_deployment_channels(t, {}, root.split("los"), root.split("shadowing"));
  for (const auto& l : links) {
    EXPECT_EQ(l.nr_dl.shadowing_db, l.nr_ul.shadowing_db);
    EXPECT_EQ(l.nr_dl.path_loss_db, l.nr_ul.path_loss_db);
  }
}
