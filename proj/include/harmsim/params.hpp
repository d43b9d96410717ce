#pragma once

#include <cstdint>
#include <vector>

namespace harmsim {

enum class UserPlacement {
  kUniform,          // uniform over the whole coverage area
  kOnePerCellFirst,  // first R users pinned one per RSC grid cell, rest uniform
};

// All physical and algorithmic constants of one scenario. Values are stored
// in linear SI units; dBm/dB inputs are converted once at config load.
struct ScenarioParams {
  int num_groups = 1;        // C
  int rscs_per_group = 6;    // S
  int num_users = 9;         // K
  int num_subchannels = 50;  // N

  double subchannel_bw_hz = 360e3;
  double noise_psd_w_per_hz = 3.9810717055349694e-21;  // -174 dBm/Hz
  double circuit_active_w = 6.8;                       // active-mode circuit power
  double circuit_sleep_w = 4.3;                        // sleep-mode circuit power
  double signaling_overhead_w = 1.2589254117941673e-3;  // 1 dBm, per offloaded user
  double max_tx_power_w = 0.1;                          // 20 dBm per RSC
  double min_rate_bps = 10e6;

  // Per-RSC fronthaul capacity. Either one entry (uniform) or one per RSC,
  // indexed by global RSC id.
  std::vector<double> fronthaul_cap_bps{20e6};

  double area_side_m = 90.0;
  double min_rsc_user_distance_m = 2.0;
  int num_walls = 1;     // wall count plugged into the NLoS pathloss term
  int power_levels = 4;  // L, discrete power levels per CSC action
  double error_ratio = 0.0;  // rho, belief-exchange error ratio
  uint64_t rng_seed = 1;

  bool all_los = false;               // force line-of-sight for every link
  double pathloss_const_db = 174.32;  // additive constant in both pathloss formulas
  UserPlacement placement = UserPlacement::kUniform;

  int total_rscs() const { return num_groups * rscs_per_group; }
  double noise_floor_w() const { return noise_psd_w_per_hz * subchannel_bw_hz; }
  int group_of_rsc(int rsc) const { return rsc / rscs_per_group; }
  double fronthaul_cap(int rsc) const {
    return fronthaul_cap_bps.size() == 1 ? fronthaul_cap_bps[0]
                                         : fronthaul_cap_bps[static_cast<size_t>(rsc)];
  }

  // Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

}  // namespace harmsim
