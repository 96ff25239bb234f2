// Copyright 2026 The FlowRAN Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>

#include "flowran/channel/radio_params.hpp"
#include "flowran/core/types.hpp"

namespace flowran::channel {

enum class LosState { Los, Nlos };

inline constexpr double kSpeedOfLight = 299'792'458.0;

// TR 38.901 Table 7.4.1-1 shadow-fading standard deviations.
inline constexpr double kUmaShadowingLosDb = 4.0;
inline constexpr double kUmaShadowingNlosDb = 6.0;
inline constexpr double kUmiShadowingLosDb = 4.0;
inline constexpr double kUmiShadowingNlosDb = 7.82;

namespace detail {

inline void require_positive_distance(double d2d) {
  if (!(d2d > 0.0)) throw DomainError("2D distance must be positive");
}

inline double distance_3d(double d2d, double h_bs, double h_ut) {
  return std::hypot(d2d, h_bs - h_ut);
}

}  // namespace detail

/// UMa LOS probability (TR 38.901 Table 7.4.2-1).
inline double los_probability_uma(double d2d, double h_ut) {
  detail::require_positive_distance(d2d);
  if (d2d <= 18.0) return 1.0;
  const double c_prime =
      h_ut <= 13.0 ? 0.0 : std::pow((h_ut - 13.0) / 10.0, 1.5);
  const double base = 18.0 / d2d + std::exp(-d2d / 63.0) * (1.0 - 18.0 / d2d);
  return base * (1.0 + c_prime * 1.25 * std::pow(d2d / 100.0, 3) * std::exp(-d2d / 150.0));
}

/// UMi street-canyon LOS probability (TR 38.901 Table 7.4.2-1).
inline double los_probability_umi(double d2d) {
  detail::require_positive_distance(d2d);
  if (d2d <= 18.0) return 1.0;
  return 18.0 / d2d + std::exp(-d2d / 36.0) * (1.0 - 18.0 / d2d);
}

/// UMa path loss in dB for the gNB link. Effective environment height is
/// fixed at 1 m, which is exact for UE heights below 13 m.
inline double pathloss_nr(double d2d, LosState los, const RadioParams& p) {
  detail::require_positive_distance(d2d);
  const double fc = p.nr_carrier_ghz;
  const double h_bs = p.gnb_height_m;
  const double h_ut = p.ue_height_m;
  const double d3d = detail::distance_3d(d2d, h_bs, h_ut);
  const double d_bp = 4.0 * (h_bs - 1.0) * (h_ut - 1.0) * fc * 1e9 / kSpeedOfLight;

  const double pl_los =
      d2d <= d_bp ? 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(fc)
                  : 28.0 + 40.0 * std::log10(d3d) + 20.0 * std::log10(fc) -
                        9.0 * std::log10(d_bp * d_bp + (h_bs - h_ut) * (h_bs - h_ut));
  if (los == LosState::Los) return pl_los;

  const double pl_nlos =
      13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(fc) - 0.6 * (h_ut - 1.5);
  return std::max(pl_los, pl_nlos);
}

/// UMi street-canyon path loss in dB for an AP link.
inline double pathloss_wifi(double d2d, LosState los, const RadioParams& p) {
  detail::require_positive_distance(d2d);
  const double fc = p.wifi_carrier_ghz;
  const double h_bs = p.ap_height_m;
  const double h_ut = p.ue_height_m;
  const double d3d = detail::distance_3d(d2d, h_bs, h_ut);
  const double d_bp = 4.0 * (h_bs - 1.0) * (h_ut - 1.0) * fc * 1e9 / kSpeedOfLight;

  const double pl_los =
      d2d <= d_bp ? 32.4 + 21.0 * std::log10(d3d) + 20.0 * std::log10(fc)
                  : 32.4 + 40.0 * std::log10(d3d) + 20.0 * std::log10(fc) -
                        9.5 * std::log10(d_bp * d_bp + (h_bs - h_ut) * (h_bs - h_ut));
  if (los == LosState::Los) return pl_los;

  const double pl_nlos =
      22.4 + 35.3 * std::log10(d3d) + 21.3 * std::log10(fc) - 0.3 * (h_ut - 1.5);
  return std::max(pl_los, pl_nlos);
}

inline double shadowing_sigma_uma(LosState los) {
  return los == LosState::Los ? kUmaShadowingLosDb : kUmaShadowingNlosDb;
}
inline double shadowing_sigma_umi(LosState los) {
  return los == LosState::Los ? kUmiShadowingLosDb : kUmiShadowingNlosDb;
}

}  // namespace flowran::channel
