// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace flowran::channel {

/// Per-node-class radio parameters for the two RATs.
///
/// Defaults follow the published network-model table. Two fields deserve a
/// note: the table lists "UE/gNB transmit power 43/23 dBm"; the defaults here
/// use gNB = 43 dBm and UE = 23 dBm (the conventional order), and the AP noise
/// figure is not listed at all, so it borrows the UE value.
struct RadioParams {
  double cell_radius_m = 250.0;

  // 5G-NR
  double nr_carrier_ghz = 1.9;
  double nr_bandwidth_mhz = 60.0;
  int nr_prbs = 162;
  int nr_slots_per_subframe = 2;
  double gnb_tx_power_dbm = 43.0;
  double ue_nr_tx_power_dbm = 23.0;
  double gnb_antenna_gain_dbi = 15.0;
  double ue_antenna_gain_dbi = 2.0;
  double gnb_height_m = 25.0;
  double ue_height_m = 1.5;
  double gnb_noise_figure_db = 10.0;
  double ue_noise_figure_db = 7.0;

  // Wi-Fi
  double wifi_carrier_ghz = 2.4;
  double wifi_bandwidth_mhz = 20.0;
  double wifi_coverage_m = 40.0;
  double ap_tx_power_dbm = 15.0;
  double ue_wifi_tx_power_dbm = 20.0;
  double ap_antenna_gain_dbi = 4.0;
  double ap_height_m = 10.0;
  double ap_noise_figure_db = 7.0;
  int mpdu_bytes = 1500;

  double good_snr_threshold_db = 6.0;
};

}  // namespace flowran::channel
