#pragma once

#include <string>

#include "qjump/rewards/kernel.hpp"
#include "qjump/task.hpp"

namespace qjump::rewards {

// Jumping, first stage (sparse). h_f/d_f are the normalization caps used
// by the stage-1 clip.
struct JipStage1 {
  double h_f = 0.9;
  double d_f = 1.3;  // not tabulated for jip; only scales the distance kernel input
  Kernel g_theta{0.3, 0.0225};
  Kernel g_d{0.05, 0.05};
  double c_h = 0.7;
  double b = 0.1;
  double q = 0.08;
  double m = 0.064;
};

struct JfStage1 {
  double h_f = 0.3;
  double d_f = 1.3;
  Kernel g_theta{0.25, 0.0225};
  double c_d = 0.5;
  double c_h = 25.0;
  double b = 0.1;
  double q = 0.08;
  double m = 0.096;
};

// Jumping, second stage (dense).
struct JipStage2 {
  double a_h = 0.01;
  double h_min = 0.29;
  double h_max = 1.3;
  double a_c = 1.5e-4;
  double f_min = 800.0;
  Kernel g_d{6.5e-4, 40.0};
  Kernel g_s{3e-3, 0.1};
  Kernel g_theta{4.2e-3, 26.0};
  double m = 0.25;
};

struct JfStage2 {
  double a_h = 6.5e-3;
  double h_min = 0.29;
  double h_max = 1.1;
  double a_c = 1.2e-4;
  double f_min = 800.0;
  double k_d = 1.52e-2;
  double d_max = 1.3;
  Kernel g_s{3e-3, 0.1};
  Kernel g_theta{4.2e-3, 26.0};
  double b = 0.025;
};

// Pronking. The paper defines the functional form but tabulates no values;
// these defaults are artifact configuration, not paper numbers.
struct PronkStage1 {
  double h_f = 0.5;
  double d_f = 0.5;
  double w_h = 0.7;
  double w_d = 0.3;
  Kernel g_theta{0.3, 0.0225};
  double w_t = 0.5;
  double w_s = 0.5;
  double k = 0.5;
  double w_avg = 1.0;
  double w_max = 1.0;
  double w_c = 0.3;
  double b = 1.0;
  double perf_threshold = 0.3;
};

struct PronkStage2 {
  double a_h = 0.01;
  double h_min = 0.29;
  double h_max = 1.3;
  double a_c = 1.5e-4;
  double f_min = 800.0;
  Kernel g_d{6.5e-4, 40.0};
  Kernel g_s{3e-3, 0.1};
  Kernel g_theta{4.2e-3, 26.0};
  double m = 0.25;
  Kernel g_p{1.0, 5e-3};  // energy kernel
  double w_j = 2.0;
  double l_j = 0.5;
  double perf_threshold = 0.3;
};

// Back-flip. theta_max = 2*pi is fixed by the normalized-full-rotation
// convention; the weights are artifact configuration.
struct FlipStage1 {
  double w_h = 1.0;
  double w_theta = 3.0;
  double w_htheta = 2.0;
  double b = 0.5;
};

struct FlipStage2 {
  double a_h = 0.01;
  double h_min = 0.29;
  double h_max = 1.3;
  double a_c = 1.5e-4;
  double f_min = 800.0;
  Kernel g_s{3e-3, 0.1};
  Kernel g_theta{4.2e-3, 26.0};
  double w_bonus = 5.0;
};

struct ImitationConfig {
  double w_a = 1.0;
  double w_b = 5.0;
};

struct RewardConfig {
  JipStage1 jip1;
  JipStage2 jip2;
  JfStage1 jf1;
  JfStage2 jf2;
  PronkStage1 pronk1;
  PronkStage2 pronk2;
  FlipStage1 flip1;
  FlipStage2 flip2;
  ImitationConfig imitation;

  static constexpr double kFlipThetaMax = 2.0 * 3.14159265358979323846;

  // Normalization caps for per-jump records and stage-1 aggregates.
  double height_cap(Task task) const;
  double distance_cap(Task task) const;
  double jump_perf_threshold(Task task) const;
  // Single-jump performance weights (pronking); jip/jf use height only.
  double perf_w_h(Task task) const;
  double perf_w_d(Task task) const;

  void validate() const;
};

// Serializes every constant as "key = value" lines grouped in
// [rewards.<task>.<stage>] sections; parsing it back reproduces the values
// bit-exactly. This is the payload of `rewards dump-defaults`.
std::string serialize_reward_config(const RewardConfig& cfg);

// Applies "rewards.<task>.<stage>.<key>" overrides; returns false if the
// key is unknown.
bool apply_reward_override(RewardConfig& cfg, const std::string& section,
                           const std::string& key, double value);

}  // namespace qjump::rewards
