#pragma once

#include <vector>

#include "qjump/sim/types.hpp"

namespace qjump::rewards {

enum class TerminationCause { kTimeout, kFallen, kCollision, kTiltExceeded, kSuccess };

struct TerminationReport {
  bool terminated = false;
  TerminationCause cause = TerminationCause::kTimeout;
  bool early = false;
};

// One completed flight->touchdown cycle.
struct JumpRecord {
  double max_height = 0.0;   // trunk apex within the cycle
  double distance = 0.0;     // trunk x at touchdown minus x at take-off
};

// Everything the reward catalog consumes, accumulated over one episode.
struct EpisodeStats {
  double max_height = 0.0;       // h-bar, max trunk height over the episode
  double jump_distance = 0.0;    // d-bar, trunk x displacement at touchdown
  double max_abs_pitch = 0.0;    // theta-bar (pitch is unwrapped)
  bool early_termination = false;
  TerminationCause cause = TerminationCause::kTimeout;

  std::vector<double> p_j;       // per-jump performance array
  int jumps = 0;                 // n = p_j.size()
  int jumps_above_threshold = 0; // c_j
  std::vector<JumpRecord> jump_records;

  double t_n = 0.0;              // episode end time / horizon, in [0,1]
  double energy = 0.0;           // sum |tau . qd| dt over the episode, J

  std::vector<double> f_avg_history;    // per control step
  std::vector<double> tau_delta_norm;   // ||delta_tau|| per control step

  int steps = 0;                       // control steps taken
  double final_time = 0.0;
  double final_displacement = 0.0;     // trunk x at episode end minus start
  double peak_contact_force = 0.0;     // max F_contact over the episode
  double max_motor_torque = 0.0;       // clamp instrumentation
  int longest_flight_steps = 0;        // longest run of F_contact == 0
  bool reached_flight = false;         // any qualifying flight phase
};

}  // namespace qjump::rewards
