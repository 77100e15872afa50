#pragma once

#include "qjump/rewards/episode_stats.hpp"
#include "qjump/rewards/reward_config.hpp"
#include "qjump/sim/types.hpp"

namespace qjump::rewards {

// ---- stage 1 (sparse, emitted only at termination) ----

// Jumping in place / forward. `stats` must describe a finished episode.
double stage1_jump_reward(const EpisodeStats& stats, const RewardConfig& cfg,
                          Task task);

// Pronking: average/max single-jump performance, entropy, jump count.
double pronk_stage1_reward(const EpisodeStats& stats, const RewardConfig& cfg);

// Back-flip: height, normalized rotation, their product, survival bonus.
double backflip_stage1_reward(const EpisodeStats& stats, const RewardConfig& cfg);

double stage1_reward(const EpisodeStats& stats, const RewardConfig& cfg, Task task);

// ---- stage 2 (dense) ----

// Per-control-step inputs to the dense reward.
struct StepInputs {
  double height = 0.0;          // h
  double avg_contact_force = 0.0;  // f
  double distance = 0.0;        // trunk x displacement since reset
  double tau_delta_norm = 0.0;  // ||tau_k - tau_{k-1}||
  double pitch = 0.0;           // theta
};

// r_h + r_c + r_d + r_s + r_theta for one step (no bonus terms).
double stage2_step_reward(const StepInputs& in, const RewardConfig& cfg, Task task);

// Terminal bonus of the dense reward, added on the episode's last step.
double stage2_terminal_bonus(const EpisodeStats& stats, const RewardConfig& cfg,
                             Task task);

// Pronking extras: r_p = g_p(E) at termination; r_j emitted at each
// completed jump (0 if that jump's performance is below the threshold).
double pronk_energy_reward(const EpisodeStats& stats, const RewardConfig& cfg);
double pronk_jump_event_reward(const std::vector<double>& p_j_so_far,
                               double latest_p_sj, const RewardConfig& cfg);

// ---- imitation (warm start) ----
double imitation_reward(const sim::Vec6& action, const sim::Vec6& teacher_action,
                        const ImitationConfig& cfg);

// Shannon entropy (natural log) of the sum-normalized array; 0 for empty,
// single-element, or all-zero arrays.
double performance_entropy(const std::vector<double>& p_j);

}  // namespace qjump::rewards
