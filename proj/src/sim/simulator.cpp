#include "qjump/sim/simulator.hpp"

#include <cmath>

#include "qjump/util/error.hpp"

namespace qjump::sim {

namespace {

using Jac = Eigen::Matrix<double, 2, 9>;

inline Vec2 link_dir(double phi) { return {std::sin(phi), -std::cos(phi)}; }
inline Vec2 perp(const Vec2& v) { return {-v.y(), v.x()}; }

// A point rigidly attached to the chain, tracked together with its
// position Jacobian and the acceleration it has at zero generalized
// acceleration (the centripetal drift J̇ v).
struct ChainPoint {
  Vec2 p;
  Jac J;
  Vec2 drift;

  static ChainPoint base(double x, double z) {
    ChainPoint c;
    c.p = {x, z};
    c.J.setZero();
    c.J(0, 0) = 1.0;
    c.J(1, 1) = 1.0;
    c.drift.setZero();
    return c;
  }

  // Appends a rotating segment v (world frame) whose absolute angle depends
  // on the DoF columns in `deps` with the given signs and currently turns
  // at rate `alpha_dot`.
  ChainPoint extended(const Vec2& v, const int* deps, const double* signs,
                      int ndeps, double alpha_dot) const {
    ChainPoint c = *this;
    c.p += v;
    const Vec2 pv = perp(v);
    for (int i = 0; i < ndeps; ++i) c.J.col(deps[i]) += signs[i] * pv;
    c.drift += -(alpha_dot * alpha_dot) * v;
    return c;
  }
};

struct BodyKin {
  double mass;
  double inertia;
  ChainPoint com;
  Vec9 w;  // angular velocity selector row; angle rate = w . v
};

// Ground-interacting point: the two feet (reported in SimState) plus the
// trunk ends, which keep a toppled robot from tunnelling through the floor.
struct ContactPointKin {
  ChainPoint pt;
  double radius;
  int foot_index;  // 0/1 for feet, -1 for internal points
};

inline constexpr int kNumContacts = 4;
inline constexpr double kTrunkCornerRadius = 0.04;

struct Kinematics {
  std::array<BodyKin, 7> bodies;
  std::array<ContactPointKin, kNumContacts> contacts;
  std::array<Vec2, kNumLegs> knees;
  int nbodies = 0;
};

// The rear leg is the front leg mirrored about the trunk's transverse
// plane: its joint angles enter the absolute link angles with a negative
// sign, so identical joint vectors give a symmetric stance.
Kinematics compute_kinematics(const RobotModel& m, const SimState& s) {
  Kinematics kin;
  const double ct = std::cos(s.theta);
  const double st = std::sin(s.theta);

  auto add_body = [&](double mass, double inertia, const ChainPoint& com,
                      const Vec9& w) {
    kin.bodies[kin.nbodies++] = BodyKin{mass, inertia, com, w};
  };

  // Trunk: frame origin is the geometric center; CoM may be offset.
  {
    ChainPoint base = ChainPoint::base(s.x, s.z);
    const Vec2 off_world{ct * m.trunk_com_offset.x() - st * m.trunk_com_offset.y(),
                         st * m.trunk_com_offset.x() + ct * m.trunk_com_offset.y()};
    const int theta_dep[1] = {2};
    const double theta_sign[1] = {1.0};
    ChainPoint com = base.extended(off_world, theta_dep, theta_sign, 1, s.thetad);
    Vec9 w = Vec9::Zero();
    w[2] = 1.0;
    add_body(m.trunk_mass, m.trunk_inertia, com, w);
  }

  for (int leg = 0; leg < kNumLegs; ++leg) {
    const double side = (leg == 0) ? 1.0 : -1.0;   // front +x, rear -x
    const double jsign = side;                      // rear joints mirrored
    const Vec2 attach_world{ct * side * 0.5 * m.trunk_length,
                            st * side * 0.5 * m.trunk_length};

    const int jc = 3 + calf_of(leg);
    const int jt = 3 + thigh_of(leg);
    const int jh = 3 + hip_of(leg);

    const double phi_hip = s.theta + jsign * s.q[hip_of(leg)];
    const double phi_thigh = phi_hip + jsign * s.q[thigh_of(leg)];
    const double phi_calf = phi_thigh + jsign * s.q[calf_of(leg)];
    const double phid_hip = s.thetad + jsign * s.qd[hip_of(leg)];
    const double phid_thigh = phid_hip + jsign * s.qd[thigh_of(leg)];
    const double phid_calf = phid_thigh + jsign * s.qd[calf_of(leg)];

    const int dep_attach[1] = {2};
    const double sgn_attach[1] = {1.0};
    const int dep_hip[2] = {2, jh};
    const double sgn_hip[2] = {1.0, jsign};
    const int dep_thigh[3] = {2, jh, jt};
    const double sgn_thigh[3] = {1.0, jsign, jsign};
    const int dep_calf[4] = {2, jh, jt, jc};
    const double sgn_calf[4] = {1.0, jsign, jsign, jsign};

    ChainPoint hip_joint = ChainPoint::base(s.x, s.z).extended(
        attach_world, dep_attach, sgn_attach, 1, s.thetad);

    const Vec2 d_hip = link_dir(phi_hip);
    const Vec2 d_thigh = link_dir(phi_thigh);
    const Vec2 d_calf = link_dir(phi_calf);

    auto selector = [&](int njoints) {
      Vec9 w = Vec9::Zero();
      w[2] = 1.0;
      w[jh] = jsign;
      if (njoints > 1) w[jt] = jsign;
      if (njoints > 2) w[jc] = jsign;
      return w;
    };

    ChainPoint hip_com = hip_joint.extended(
        m.hip.com_ratio * m.hip.length * d_hip, dep_hip, sgn_hip, 2, phid_hip);
    add_body(m.hip.mass, m.hip.inertia, hip_com, selector(1));

    ChainPoint thigh_joint =
        hip_joint.extended(m.hip.length * d_hip, dep_hip, sgn_hip, 2, phid_hip);
    ChainPoint thigh_com =
        thigh_joint.extended(m.thigh.com_ratio * m.thigh.length * d_thigh,
                             dep_thigh, sgn_thigh, 3, phid_thigh);
    add_body(m.thigh.mass, m.thigh.inertia, thigh_com, selector(2));

    ChainPoint knee = thigh_joint.extended(m.thigh.length * d_thigh, dep_thigh,
                                           sgn_thigh, 3, phid_thigh);
    ChainPoint calf_com = knee.extended(m.calf.com_ratio * m.calf.length * d_calf,
                                        dep_calf, sgn_calf, 4, phid_calf);
    add_body(m.calf.mass, m.calf.inertia, calf_com, selector(3));

    ChainPoint foot =
        knee.extended(m.calf.length * d_calf, dep_calf, sgn_calf, 4, phid_calf);

    kin.contacts[leg] = ContactPointKin{foot, m.foot_radius, leg};
    kin.knees[leg] = knee.p;

    // trunk end on the same side
    ChainPoint corner = ChainPoint::base(s.x, s.z).extended(
        attach_world, dep_attach, sgn_attach, 1, s.thetad);
    kin.contacts[kNumLegs + leg] =
        ContactPointKin{corner, kTrunkCornerRadius, -1};
  }
  return kin;
}

}  // namespace

Simulator::Simulator(const RobotModel& model, const WorldParams& world)
    : model_(model), world_(world) {
  model_.validate();
  state_ = homing_state(model_);
}

void Simulator::reset(const SimState& state) {
  state_ = state;
  contact_ = {};
  step_count_ = 0;
}

SimState Simulator::homing_state(const RobotModel& model) {
  SimState s;
  s.z = model.standing_height;
  s.q = model.homing_pose;
  return s;
}

void Simulator::step(const Vec6& applied_torque, double dt) {
  if (!(dt > 0.0) || dt > world_.max_dt)
    throw InputDomainError("Simulator::step: dt out of range");
  if (!applied_torque.allFinite())
    throw InputDomainError("Simulator::step: non-finite torque");

  const Kinematics kin = compute_kinematics(model_, state_);
  const Vec9 vel = state_.generalized_velocity();

  Mat9 M = Mat9::Zero();
  Vec9 Q = Vec9::Zero();  // velocity-independent generalized forces

  for (int i = 0; i < kin.nbodies; ++i) {
    const BodyKin& b = kin.bodies[i];
    M.noalias() += b.mass * (b.com.J.transpose() * b.com.J);
    M.noalias() += b.inertia * (b.w * b.w.transpose());
    // gravity and centripetal bias
    Q.noalias() -= b.mass * world_.gravity * b.com.J.row(1).transpose();
    Q.noalias() -= b.mass * (b.com.J.transpose() * b.com.drift);
  }

  // All linear dampers (joint viscous, limit, contact) are folded into the
  // implicit velocity update (M + dt D) v+ = M v + dt Q, which keeps the
  // stiff spec values stable at dt = 1 ms.
  Vec9 damping_diag = Vec9::Zero();

  // joint torques: actuation plus elastic limit penalty
  for (int j = 0; j < kNumJoints; ++j) {
    double tau = applied_torque[j];
    damping_diag[3 + j] += model_.joint_damping;
    const double lo = model_.joint_lower[j];
    const double hi = model_.joint_upper[j];
    if (state_.q[j] < lo) {
      tau += world_.limit_k * (lo - state_.q[j]);
      damping_diag[3 + j] += world_.limit_d;
    } else if (state_.q[j] > hi) {
      tau += world_.limit_k * (hi - state_.q[j]);
      damping_diag[3 + j] += world_.limit_d;
    }
    Q[3 + j] += tau;
  }

  // Contact candidates: points below the surface. Each step starts in the
  // sticking mode; an active-set loop drops separating contacts (fn < 0)
  // and switches points whose stiction force exceeds the Coulomb cap to a
  // kinetic (capped, explicit) force.
  enum class Mode { kOff, kStick, kSlide };
  struct Cand {
    Mode mode = Mode::kOff;
    double penetration = 0.0;
    double slide_force = 0.0;
    double fn = 0.0;
  };
  std::array<Cand, kNumContacts> cand{};
  for (int i = 0; i < kNumContacts; ++i) {
    const ContactPointKin& cp = kin.contacts[i];
    const double penetration = cp.radius - cp.pt.p.y();
    if (penetration > 0.0) {
      cand[i].mode = Mode::kStick;
      cand[i].penetration = penetration;
      if (!contact_[i].active) {
        contact_[i].active = true;
        contact_[i].anchor_x = cp.pt.p.x();
      }
    } else {
      contact_[i].active = false;
    }
  }

  Vec9 new_vel = vel;
  for (int pass = 0; pass < 4; ++pass) {
    Mat9 A = M;
    A.diagonal() += dt * damping_diag;
    Vec9 rhs = M * vel + dt * Q;

    for (int i = 0; i < kNumContacts; ++i) {
      const Cand& c = cand[i];
      if (c.mode == Mode::kOff) continue;
      const Jac& J = kin.contacts[i].pt.J;
      // normal: elastic on RHS, damper implicit
      rhs.noalias() +=
          dt * world_.contact_kn * c.penetration * J.row(1).transpose();
      A.noalias() += (dt * world_.contact_dn) * (J.row(1).transpose() * J.row(1));
      if (c.mode == Mode::kStick) {
        const double stretch = kin.contacts[i].pt.p.x() - contact_[i].anchor_x;
        rhs.noalias() -= dt * world_.contact_kt * stretch * J.row(0).transpose();
        A.noalias() +=
            (dt * world_.contact_dt) * (J.row(0).transpose() * J.row(0));
      } else {
        rhs.noalias() += dt * c.slide_force * J.row(0).transpose();
      }
    }

    if (joints_locked_) {
      new_vel.setZero();
      new_vel.head<3>() =
          A.topLeftCorner<3, 3>().ldlt().solve(rhs.head<3>().eval());
    } else {
      new_vel = A.ldlt().solve(rhs);
    }

    bool changed = false;
    for (int i = 0; i < kNumContacts; ++i) {
      Cand& c = cand[i];
      if (c.mode == Mode::kOff) continue;
      const Vec2 vpt = kin.contacts[i].pt.J * new_vel;
      const double fn =
          world_.contact_kn * c.penetration - world_.contact_dn * vpt.y();
      if (fn <= 0.0) {
        c.mode = Mode::kOff;
        c.fn = 0.0;
        contact_[i].active = false;
        changed = true;
        continue;
      }
      c.fn = fn;
      const double cap = world_.friction_mu * fn;
      if (c.mode == Mode::kStick) {
        const double stretch = kin.contacts[i].pt.p.x() - contact_[i].anchor_x;
        const double ft =
            -world_.contact_kt * stretch - world_.contact_dt * vpt.x();
        if (std::abs(ft) > cap) {
          c.mode = Mode::kSlide;
          c.slide_force = (ft > 0.0) ? cap : -cap;
          // drag the anchor along so the spring alone would carry the cap
          contact_[i].anchor_x =
              kin.contacts[i].pt.p.x() + c.slide_force / world_.contact_kt;
          changed = true;
        }
      } else {
        // refresh the kinetic force with the latest normal force
        const double updated = (c.slide_force > 0.0) ? cap : -cap;
        if (std::abs(updated - c.slide_force) > 1e-9 * (1.0 + cap)) {
          c.slide_force = updated;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  for (int i = 0; i < kNumContacts; ++i) {
    const int foot = kin.contacts[i].foot_index;
    if (foot >= 0) state_.foot_force[foot] = cand[i].fn;
  }

  const Vec9 new_pos = state_.generalized_position() + dt * new_vel;

  if (!new_pos.allFinite() || !new_vel.allFinite())
    throw SimDivergedError("simulation diverged", step_count_);

  state_.x = new_pos[0];
  state_.z = new_pos[1];
  state_.theta = new_pos[2];
  state_.q = new_pos.tail<6>();
  state_.xd = new_vel[0];
  state_.zd = new_vel[1];
  state_.thetad = new_vel[2];
  state_.qd = new_vel.tail<6>();
  state_.t += dt;
  ++step_count_;
}

ContactSummary Simulator::contact_summary() const {
  ContactSummary cs;
  for (int leg = 0; leg < kNumLegs; ++leg) {
    cs.total_force += state_.foot_force[leg];
    if (state_.foot_force[leg] > 0.0) ++cs.contact_legs;
  }
  cs.avg_force = cs.contact_legs > 0 ? cs.total_force / cs.contact_legs : 0.0;
  return cs;
}

CollisionFlags Simulator::collision_flags() const {
  CollisionFlags f;
  f.fallen = state_.z < kFallenHeight;
  const Kinematics kin = compute_kinematics(model_, state_);
  for (int leg = 0; leg < kNumLegs; ++leg)
    if (kin.knees[leg].y() <= 0.0) f.knee_collision = true;
  f.trunk_tilt_dot = std::cos(state_.theta);
  return f;
}

double Simulator::mechanical_energy() const {
  const Kinematics kin = compute_kinematics(model_, state_);
  const Vec9 vel = state_.generalized_velocity();
  double e = 0.0;
  for (int i = 0; i < kin.nbodies; ++i) {
    const BodyKin& b = kin.bodies[i];
    const Vec2 v = b.com.J * vel;
    const double omega = b.w.dot(vel);
    e += 0.5 * b.mass * v.squaredNorm() + 0.5 * b.inertia * omega * omega;
    e += b.mass * world_.gravity * b.com.p.y();
  }
  return e;
}

LegPoints Simulator::leg_points(int leg) const {
  const Kinematics kin = compute_kinematics(model_, state_);
  const double ct = std::cos(state_.theta);
  const double st = std::sin(state_.theta);
  const double side = (leg == 0) ? 1.0 : -1.0;
  LegPoints pts;
  pts.hip_joint = Vec2{state_.x + ct * side * 0.5 * model_.trunk_length,
                       state_.z + st * side * 0.5 * model_.trunk_length};
  const double phi_hip = state_.theta + side * state_.q[hip_of(leg)];
  pts.thigh_joint = pts.hip_joint + model_.hip.length * link_dir(phi_hip);
  pts.knee = kin.knees[leg];
  pts.foot = kin.contacts[leg].pt.p;
  return pts;
}

Vec2 Simulator::robot_com() const {
  const Kinematics kin = compute_kinematics(model_, state_);
  Vec2 com = Vec2::Zero();
  double mass = 0.0;
  for (int i = 0; i < kin.nbodies; ++i) {
    com += kin.bodies[i].mass * kin.bodies[i].com.p;
    mass += kin.bodies[i].mass;
  }
  return com / mass;
}

void RobotModel::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(trunk_mass) || !positive(trunk_inertia) || !positive(trunk_length))
    throw ConfigError("RobotModel: trunk mass/inertia/length must be positive");
  for (const LinkParams* link : {&hip, &thigh, &calf}) {
    if (!positive(link->mass) || !positive(link->length) || !positive(link->inertia))
      throw ConfigError("RobotModel: link mass/length/inertia must be positive");
    if (link->com_ratio < 0.0 || link->com_ratio > 1.0)
      throw ConfigError("RobotModel: link com_ratio outside [0,1]");
  }
  if (!positive(foot_radius)) throw ConfigError("RobotModel: foot_radius must be positive");
  if (joint_damping < 0.0) throw ConfigError("RobotModel: joint_damping negative");
  for (int j = 0; j < kNumJoints; ++j) {
    if (!(joint_lower[j] < joint_upper[j]))
      throw ConfigError("RobotModel: joint " + std::to_string(j + 1) +
                        " limits must satisfy lower < upper");
    if (!positive(torque_limit[j]))
      throw ConfigError("RobotModel: torque limit must be positive");
    if (!(homing_pose[j] > joint_lower[j] && homing_pose[j] < joint_upper[j]))
      throw ConfigError("RobotModel: homing pose outside joint limits (joint " +
                        std::to_string(j + 1) + ")");
  }
}

void SpringSpec::validate() const {
  for (int j = 0; j < kNumJoints; ++j) {
    if (stiffness[j] < 0.0 || damping[j] < 0.0)
      throw ConfigError("SpringSpec: stiffness/damping must be non-negative");
    if (engaged[j] && (j == kFrontHip || j == kRearHip))
      throw ConfigError("SpringSpec: only thigh and calf joints may be engaged");
  }
}

void PdGains::validate() const {
  if (!(kp > 0.0) || !(kd >= 0.0)) throw ConfigError("PdGains: kp > 0, kd >= 0 required");
}

}  // namespace qjump::sim
