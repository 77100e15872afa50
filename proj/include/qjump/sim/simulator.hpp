#pragma once

#include <array>

#include "qjump/sim/robot_model.hpp"
#include "qjump/sim/sim_state.hpp"

namespace qjump::sim {

// Ground contact and joint-limit penalty parameters.
struct WorldParams {
  double gravity = 9.81;
  double contact_kn = 1e5;   // normal penalty stiffness, N/m
  double contact_dn = 1e3;   // normal damping, N s/m
  double contact_kt = 1e5;   // tangential (stiction anchor) stiffness, N/m
  double contact_dt = 1e3;   // tangential damping, N s/m
  double friction_mu = 0.8;  // Coulomb cap
  double limit_k = 500.0;    // joint-limit penalty stiffness, N m/rad
  double limit_d = 5.0;      // joint-limit penalty damping, N m s/rad
  double max_dt = 5e-3;      // largest accepted physics step
};

// World-frame points of one leg chain, trunk attachment to foot center.
struct LegPoints {
  Vec2 hip_joint;
  Vec2 knee;        // thigh-calf junction (hip link distal = thigh joint also kept)
  Vec2 thigh_joint;
  Vec2 foot;        // calf distal point (foot center)
};

// Planar articulated rigid-body simulator: trunk (x, z, theta) plus two
// 3-link legs, semi-implicit Euler, penalty ground contact with stiction
// anchors, penalty joint limits. One instance owns one robot; instances
// are independent.
class Simulator {
 public:
  Simulator(const RobotModel& model, const WorldParams& world = WorldParams{});

  // Replaces the state and clears contact anchors / step counter.
  void reset(const SimState& state);

  // Standing at the homing pose, feet exactly on the surface.
  static SimState homing_state(const RobotModel& model);

  // Advances one physics step under the given applied joint torques
  // (actuation: motor + parallel spring; limits/damping are internal).
  void step(const Vec6& applied_torque, double dt);

  const SimState& state() const { return state_; }
  const RobotModel& model() const { return model_; }
  const WorldParams& world() const { return world_; }
  long step_count() const { return step_count_; }

  ContactSummary contact_summary() const;
  CollisionFlags collision_flags() const;

  // Kinetic + gravitational potential energy of the articulated body.
  double mechanical_energy() const;

  LegPoints leg_points(int leg) const;
  Vec2 robot_com() const;

  // Freezes all joint coordinates (trunk keeps its 3 DoF). Test hook.
  void set_joints_locked(bool locked) { joints_locked_ = locked; }

 private:
  struct ContactAnchor {
    bool active = false;
    double anchor_x = 0.0;
  };

  static constexpr int kContactPoints = 4;  // 2 feet + 2 trunk ends

  RobotModel model_;
  WorldParams world_;
  SimState state_;
  std::array<ContactAnchor, kContactPoints> contact_{};
  bool joints_locked_ = false;
  long step_count_ = 0;
};

}  // namespace qjump::sim
