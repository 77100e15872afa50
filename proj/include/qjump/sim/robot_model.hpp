#pragma once

#include <array>

#include "qjump/sim/types.hpp"

namespace qjump::sim {

struct LinkParams {
  double mass = 0.0;     // kg
  double length = 0.0;   // m
  double inertia = 0.0;  // kg m^2, about link CoM
  double com_ratio = 0.5;  // CoM position along the link, fraction of length
};

// Planar sagittal quadruped: one front and one rear leg, each standing in
// for a mirrored left/right pair. Chain per leg: trunk -> hip link -> thigh
// -> calf, all pitch joints; the foot is the calf's distal point.
struct RobotModel {
  double trunk_mass = 6.0;
  double trunk_inertia = 0.08;
  double trunk_length = 0.3762;        // hip-to-hip span
  Vec2 trunk_com_offset{0.0, 0.0};     // CoM offset in trunk frame

  LinkParams hip{1.18, 0.05, 2.458e-4, 0.5};
  LinkParams thigh{1.55, 0.213, 5.86e-3, 0.5};
  LinkParams calf{0.27, 0.213, 1.021e-3, 0.5};

  Vec6 joint_lower;
  Vec6 joint_upper;
  Vec6 torque_limit;
  Vec6 homing_pose;          // q0
  double standing_height = 0.32;  // z0, trunk height in the homing pose

  double foot_radius = 0.02;
  double joint_damping = 0.01;  // N m s/rad, viscous, applied to qdot

  RobotModel() {
    joint_lower << -2.72, -0.69, -0.8, -2.72, -0.69, -0.8;
    joint_upper << -0.84, 4.50, 0.8, -0.84, 4.50, 0.8;
    torque_limit.setConstant(33.5);
    homing_pose = homing_for_height(standing_height);
  }

  // Symmetric-crouch homing pose reaching the requested trunk height with
  // hip links vertical and the foot directly below the hip attachment.
  Vec6 homing_for_height(double z0) const {
    const double drop = z0 - foot_radius - hip.length;
    const double c = drop / (thigh.length + calf.length);
    const double alpha = std::acos(std::min(1.0, std::max(-1.0, c)));
    Vec6 q;
    for (int leg = 0; leg < kNumLegs; ++leg) {
      q[calf_of(leg)] = -2.0 * alpha;
      q[thigh_of(leg)] = alpha;
      q[hip_of(leg)] = 0.0;
    }
    return q;
  }

  void validate() const;
};

struct SpringSpec {
  Vec6 stiffness;    // N m/rad
  Vec6 damping;      // N m s/rad
  Vec6 rest_angle;   // rad
  std::array<bool, kNumJoints> engaged{};

  SpringSpec() {
    stiffness.setZero();
    damping.setZero();
    rest_angle.setZero();
  }

  // Thigh+calf springs at the given coefficients, resting at the homing pose.
  static SpringSpec engaged_default(const RobotModel& model, double k = 25.0,
                                    double c = 0.5) {
    SpringSpec s;
    s.rest_angle = model.homing_pose;
    for (int leg = 0; leg < kNumLegs; ++leg) {
      for (int j : {calf_of(leg), thigh_of(leg)}) {
        s.stiffness[j] = k;
        s.damping[j] = c;
        s.engaged[j] = true;
      }
    }
    return s;
  }

  static SpringSpec disengaged() { return SpringSpec{}; }

  void validate() const;
};

struct PdGains {
  double kp = 55.0;
  double kd = 0.8;

  void validate() const;
};

}  // namespace qjump::sim
