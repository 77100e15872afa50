#pragma once

#include <cmath>

#include "qjump/sim/robot_model.hpp"
#include "qjump/sim/sim_state.hpp"
#include "qjump/util/error.hpp"

namespace qjump::sim {

// Motor torque tau_i = kp (q_ref_i - q_i) - kd qd_i, clamped to the joint
// torque limit.
inline Vec6 pd_torque(const Vec6& q_ref, const SimState& state,
                      const PdGains& gains, const Vec6& torque_limit) {
  if (!q_ref.allFinite())
    throw InputDomainError("pd_torque: non-finite joint reference");
  if (!(gains.kp > 0.0) || !(gains.kd >= 0.0) || !std::isfinite(gains.kp) ||
      !std::isfinite(gains.kd))
    throw InputDomainError("pd_torque: invalid gains");
  Vec6 tau = gains.kp * (q_ref - state.q) - gains.kd * state.qd;
  return tau.cwiseMax(-torque_limit).cwiseMin(torque_limit);
}

// Parallel-spring torque from the commanded angle and angular velocity:
// tau_s_i = k_i (q_ref_i - q0_i) + c_i qd_ref_i on engaged joints, 0 elsewhere.
inline Vec6 spring_torque(const Vec6& q_ref, const Vec6& qd_ref,
                          const SpringSpec& spec) {
  if (!q_ref.allFinite() || !qd_ref.allFinite())
    throw InputDomainError("spring_torque: non-finite input");
  Vec6 tau = Vec6::Zero();
  for (int j = 0; j < kNumJoints; ++j) {
    if (!spec.engaged[j]) continue;
    tau[j] = spec.stiffness[j] * (q_ref[j] - spec.rest_angle[j]) +
             spec.damping[j] * qd_ref[j];
  }
  return tau;
}

}  // namespace qjump::sim
