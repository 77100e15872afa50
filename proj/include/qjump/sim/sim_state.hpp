#pragma once

#include <array>

#include "qjump/sim/types.hpp"

namespace qjump::sim {

struct SimState {
  double x = 0.0;      // trunk frame origin, horizontal
  double z = 0.0;      // trunk height h
  double theta = 0.0;  // pitch, CCW positive
  double xd = 0.0;
  double zd = 0.0;
  double thetad = 0.0;
  Vec6 q = Vec6::Zero();
  Vec6 qd = Vec6::Zero();
  std::array<double, kNumLegs> foot_force{};  // normal force per foot, >= 0
  double t = 0.0;

  Vec9 generalized_position() const {
    Vec9 p;
    p << x, z, theta, q;
    return p;
  }
  Vec9 generalized_velocity() const {
    Vec9 v;
    v << xd, zd, thetad, qd;
    return v;
  }
  double total_contact_force() const { return foot_force[0] + foot_force[1]; }
};

struct ContactSummary {
  double total_force = 0.0;  // F_contact
  int contact_legs = 0;
  double avg_force = 0.0;    // F_contact / contact legs, 0 when airborne
};

struct CollisionFlags {
  bool fallen = false;             // trunk height below the fall threshold
  bool knee_collision = false;     // any knee point at or below ground
  double trunk_tilt_dot = 1.0;     // local z-axis . global z-axis = cos(theta)
};

inline constexpr double kFallenHeight = 0.1;  // m

}  // namespace qjump::sim
