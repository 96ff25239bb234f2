// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "flowran/channel/link_budget.hpp"
#include "flowran/channel/pathloss.hpp"
#include "flowran/channel/topology.hpp"

namespace flowran::channel {

/// Frozen radio state of one UE for the lifetime of a deployment.
struct UeLinks {
  LosState nr_los = LosState::Nlos;
  ChannelSample nr_dl;
  ChannelSample nr_ul;

  // Present when the UE sits inside an AP's coverage.
  std::optional<LosState> wifi_los;
  std::optional<ChannelSample> wifi_dl;
  std::optional<ChannelSample> wifi_ul;
};

/// LOS state and shadowing are drawn once per link from per-UE substreams of
/// `los_rng` / `shadow_rng`, so UE i's draws do not depend on the UE count.
/// The same shadowing value applies to both directions of a link.
inline std::vector<UeLinks> compute_deployment_channels(const Topology& t, const RadioParams& p,
                                                        const Rng& los_rng,
                                                        const Rng& shadow_rng) {
  const double nr_bw = p.nr_bandwidth_mhz * 1e6;
  const double wifi_bw = p.wifi_bandwidth_mhz * 1e6;
  std::vector<UeLinks> out(t.ue_count());

  for (std::size_t i = 0; i < t.ue_count(); ++i) {
    Rng los = los_rng.split("ue", i);
    Rng shadow = shadow_rng.split("ue", i);
    UeLinks& l = out[i];

    const double d_gnb = std::max(distance(t.ue_positions[i], t.gnb_position), 1e-3);
    l.nr_los = los.uniform() < los_probability_uma(d_gnb, p.ue_height_m) ? LosState::Los
                                                                          : LosState::Nlos;
    const double pl_nr = pathloss_nr(d_gnb, l.nr_los, p);
    const double sh_nr = shadow.normal(0.0, shadowing_sigma_uma(l.nr_los));
    const double nr_gains = p.gnb_antenna_gain_dbi + p.ue_antenna_gain_dbi;
    l.nr_dl = compute_snr({p.gnb_tx_power_dbm, nr_gains, pl_nr, sh_nr, p.ue_noise_figure_db},
                          nr_bw, p.good_snr_threshold_db);
    l.nr_ul = compute_snr({p.ue_nr_tx_power_dbm, nr_gains, pl_nr, sh_nr, p.gnb_noise_figure_db},
                          nr_bw, p.good_snr_threshold_db);

    // Always consume the Wi-Fi draws so NR draws of later UEs stay aligned.
    const double u_wifi = los.uniform();
    const double z_wifi = shadow.normal();
    if (const auto ap = t.ue_ap_association[i]) {
      const double d_ap = std::max(distance(t.ue_positions[i], t.ap_positions[ap->value]), 1e-3);
      const LosState wl = u_wifi < los_probability_umi(d_ap) ? LosState::Los : LosState::Nlos;
      const double pl_w = pathloss_wifi(d_ap, wl, p);
      const double sh_w = z_wifi * shadowing_sigma_umi(wl);
      const double w_gains = p.ap_antenna_gain_dbi + p.ue_antenna_gain_dbi;
      l.wifi_los = wl;
      l.wifi_dl = compute_snr({p.ap_tx_power_dbm, w_gains, pl_w, sh_w, p.ue_noise_figure_db},
                              wifi_bw, p.good_snr_threshold_db);
      l.wifi_ul = compute_snr({p.ue_wifi_tx_power_dbm, w_gains, pl_w, sh_w, p.ap_noise_figure_db},
                              wifi_bw, p.good_snr_threshold_db);
    }
  }
  return out;
}

}  // namespace flowran::channel
