#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qjump/sim/pd.hpp"
#include "qjump/sim/simulator.hpp"

using namespace qjump;
using namespace qjump::sim;

namespace {

RobotModel default_model() { return RobotModel{}; }

// Runs the simulator with zero applied torque for the given duration.
void run_passive(Simulator& s, double seconds, double dt = 1e-3) {
  const Vec6 zero = Vec6::Zero();
  const long n = std::lround(seconds / dt);
  for (long i = 0; i < n; ++i) s.step(zero, dt);
}

}  // namespace

TEST_CASE("pd_torque identity and linear cases") {
  RobotModel m = default_model();
  Simulator sim(m);
  SimState s = Simulator::homing_state(m);

  // q_ref = q, qd = 0 -> zero torque
  Vec6 tau = pd_torque(s.q, s, PdGains{50.0, 0.0}, m.torque_limit);
  CHECK(tau.cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  // kp = 50, error 0.2 -> 10 Nm
  Vec6 q_ref = s.q.array() + 0.2;
  tau = pd_torque(q_ref, s, PdGains{50.0, 0.0}, m.torque_limit);
  for (int j = 0; j < kNumJoints; ++j) CHECK(tau[j] == doctest::Approx(10.0));

  // clamped at the torque limit
  q_ref = s.q.array() + 2.0;
  tau = pd_torque(q_ref, s, PdGains{50.0, 1.0}, m.torque_limit);
  for (int j = 0; j < kNumJoints; ++j) CHECK(tau[j] == doctest::Approx(33.5));
  // sweeping the limit moves the clamp boundary (unclamped value is 100)
  Vec6 big_limit = Vec6::Constant(150.0);
  tau = pd_torque(q_ref, s, PdGains{50.0, 1.0}, big_limit);
  for (int j = 0; j < kNumJoints; ++j) CHECK(tau[j] == doctest::Approx(100.0));

  Vec6 bad = q_ref;
  bad[0] = std::nan("");
  CHECK_THROWS_AS(pd_torque(bad, s, PdGains{50.0, 1.0}, m.torque_limit),
                  InputDomainError);
}

TEST_CASE("spring_torque rest angle, linearity, superposition") {
  RobotModel m = default_model();
  SpringSpec spec = SpringSpec::engaged_default(m, 20.0, 0.5);

  // at rest angle with zero rate -> zero torque
  Vec6 tau = spring_torque(spec.rest_angle, Vec6::Zero(), spec);
  CHECK(tau.cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  // k = 20, deflection 0.5 -> 10 Nm on engaged joints, 0 on hips
  SpringSpec k_only = spec;
  k_only.damping.setZero();
  Vec6 q_ref = spec.rest_angle.array() + 0.5;
  tau = spring_torque(q_ref, Vec6::Zero(), k_only);
  CHECK(tau[kFrontCalf] == doctest::Approx(10.0));
  CHECK(tau[kFrontThigh] == doctest::Approx(10.0));
  CHECK(tau[kFrontHip] == doctest::Approx(0.0));

  // k and c together: 20 * 0.5 + 0.5 * 2 = 11
  Vec6 qd_ref = Vec6::Constant(2.0);
  tau = spring_torque(q_ref, qd_ref, spec);
  CHECK(tau[kRearCalf] == doctest::Approx(11.0));

  // exact superposition of the stiffness-only and damping-only parts
  SpringSpec c_only = spec;
  c_only.stiffness.setZero();
  Vec6 sum = spring_torque(q_ref, qd_ref, k_only) + spring_torque(q_ref, qd_ref, c_only);
  Vec6 both = spring_torque(q_ref, qd_ref, spec);
  CHECK((sum - both).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ballistic apex matches closed form within 1%") {
  RobotModel m = default_model();
  // legs made negligible so the trunk dominates; joints frozen
  for (LinkParams* link : {&m.hip, &m.thigh, &m.calf}) {
    link->mass = 1e-6;
    link->inertia = 1e-9;
  }
  Simulator sim(m);
  sim.set_joints_locked(true);
  SimState s = Simulator::homing_state(m);
  s.z = 1.0;
  const double v0 = 2.0;
  s.zd = v0;
  sim.reset(s);

  double apex = s.z;
  for (int i = 0; i < 1000; ++i) {
    sim.step(Vec6::Zero(), 1e-3);
    apex = std::max(apex, sim.state().z);
  }
  const double expect = v0 * v0 / (2.0 * sim.world().gravity);
  CHECK(std::abs((apex - s.z) - expect) / expect < 0.01);
}

TEST_CASE("free-air mechanical energy drift below 0.1% per second") {
  RobotModel m = default_model();
  m.joint_damping = 0.0;
  Simulator sim(m);
  SimState s = Simulator::homing_state(m);
  s.z = 6.0;
  s.zd = 0.4;
  s.thetad = 0.8;
  s.qd << 0.3, -0.2, 0.1, -0.3, 0.2, -0.1;
  sim.reset(s);

  const double e0 = sim.mechanical_energy();
  double max_rel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    sim.step(Vec6::Zero(), 1e-3);
    REQUIRE(sim.state().foot_force[0] == 0.0);
    REQUIRE(sim.state().foot_force[1] == 0.0);
    max_rel = std::max(max_rel, std::abs(sim.mechanical_energy() - e0) / std::abs(e0));
  }
  CHECK(max_rel < 1e-3);
}

TEST_CASE("settle then hold: passive robot reaches a static fixed point") {
  RobotModel m = default_model();
  Simulator sim(m);
  sim.reset(Simulator::homing_state(m));
  run_passive(sim, 5.0);

  const SimState settled = sim.state();
  double drift = 0.0;
  for (int i = 0; i < 100; ++i) {
    sim.step(Vec6::Zero(), 1e-3);
    const SimState& now = sim.state();
    drift = std::max(drift, std::abs(now.x - settled.x));
    drift = std::max(drift, std::abs(now.z - settled.z));
    drift = std::max(drift, std::abs(now.theta - settled.theta));
    drift = std::max(drift, (now.q - settled.q).cwiseAbs().maxCoeff());
  }
  CHECK(drift < 1e-6);
}

TEST_CASE("contact force one-sided and zero when airborne") {
  RobotModel m = default_model();
  Simulator sim(m);
  SimState s = Simulator::homing_state(m);
  s.z += 0.5;  // airborne
  sim.reset(s);
  for (int i = 0; i < 200; ++i) {
    sim.step(Vec6::Zero(), 1e-3);
    CHECK(sim.state().foot_force[0] >= 0.0);
    CHECK(sim.state().foot_force[1] >= 0.0);
  }
}

TEST_CASE("contact summary arithmetic") {
  RobotModel m = default_model();
  Simulator sim(m);
  SimState s = Simulator::homing_state(m);

  s.foot_force = {0.0, 0.0};
  sim.reset(s);
  ContactSummary cs = sim.contact_summary();
  CHECK(cs.total_force == 0.0);
  CHECK(cs.contact_legs == 0);
  CHECK(cs.avg_force == 0.0);

  s.foot_force = {400.0, 400.0};
  sim.reset(s);
  cs = sim.contact_summary();
  CHECK(cs.total_force == doctest::Approx(800.0));
  CHECK(cs.contact_legs == 2);
  CHECK(cs.avg_force == doctest::Approx(400.0));

  s.foot_force = {800.0, 0.0};
  sim.reset(s);
  cs = sim.contact_summary();
  CHECK(cs.total_force == doctest::Approx(800.0));
  CHECK(cs.contact_legs == 1);
  CHECK(cs.avg_force == doctest::Approx(800.0));
}

TEST_CASE("collision flags: fallen height, tilt dot, knee contact") {
  RobotModel m = default_model();
  Simulator sim(m);
  SimState s = Simulator::homing_state(m);

  s.z = 0.05;
  sim.reset(s);
  CHECK(sim.collision_flags().fallen);

  s = Simulator::homing_state(m);
  s.theta = 0.0;
  sim.reset(s);
  CHECK(sim.collision_flags().trunk_tilt_dot == doctest::Approx(1.0));

  s.theta = 0.6;
  sim.reset(s);
  CHECK(sim.collision_flags().trunk_tilt_dot == doctest::Approx(std::cos(0.6)));
  CHECK(sim.collision_flags().trunk_tilt_dot < 0.85);

  // fold the legs so the knees dip to the ground
  s = Simulator::homing_state(m);
  s.z = 0.12;
  sim.reset(s);
  CHECK(sim.collision_flags().knee_collision);
}

TEST_CASE("deterministic trajectories for identical inputs") {
  RobotModel m = default_model();
  Simulator a(m), b(m);
  a.reset(Simulator::homing_state(m));
  b.reset(Simulator::homing_state(m));
  Vec6 tau;
  tau << 1.0, -2.0, 0.3, 1.2, -0.7, 0.1;
  for (int i = 0; i < 500; ++i) {
    a.step(tau, 1e-3);
    b.step(tau, 1e-3);
  }
  CHECK(a.state().x == b.state().x);
  CHECK(a.state().z == b.state().z);
  CHECK((a.state().q - b.state().q).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.state().qd - b.state().qd).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("model validation rejects bad parameters") {
  RobotModel m = default_model();
  m.trunk_mass = -1.0;
  CHECK_THROWS_AS(Simulator{m}, ConfigError);

  m = default_model();
  m.joint_lower[0] = m.joint_upper[0] + 1.0;
  CHECK_THROWS_AS(Simulator{m}, ConfigError);

  SpringSpec spec = SpringSpec::engaged_default(default_model());
  spec.engaged[kFrontHip] = true;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("homing state stands at z0 with feet on the surface") {
  RobotModel m = default_model();
  Simulator sim(m);
  sim.reset(Simulator::homing_state(m));
  CHECK(sim.state().z == doctest::Approx(0.32));
  for (int leg = 0; leg < kNumLegs; ++leg) {
    LegPoints pts = sim.leg_points(leg);
    CHECK(pts.foot.y() == doctest::Approx(m.foot_radius).epsilon(1e-9));
  }
  // held by PD at homing, the robot should stay near standing height
  const Vec6 q_ref = m.homing_pose;
  PdGains gains;
  for (int i = 0; i < 2000; ++i) {
    Vec6 tau = pd_torque(q_ref, sim.state(), gains, m.torque_limit);
    sim.step(tau, 1e-3);
  }
  CHECK(sim.state().z > 0.25);
  CHECK(std::abs(sim.state().theta) < 0.1);
}
