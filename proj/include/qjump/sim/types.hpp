#pragma once

#include <Eigen/Dense>

namespace qjump::sim {

inline constexpr int kNumJoints = 6;
inline constexpr int kNumLegs = 2;
inline constexpr int kNumDof = 9;  // x, z, theta, q1..q6

using Vec2 = Eigen::Vector2d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;

// Joint vector layout follows the calf/thigh/hip numbering convention:
//   q[0] front calf, q[1] front thigh, q[2] front hip,
//   q[3] rear calf,  q[4] rear thigh,  q[5] rear hip.
enum JointIndex : int {
  kFrontCalf = 0,
  kFrontThigh = 1,
  kFrontHip = 2,
  kRearCalf = 3,
  kRearThigh = 4,
  kRearHip = 5,
};

inline int calf_of(int leg) { return leg == 0 ? kFrontCalf : kRearCalf; }
inline int thigh_of(int leg) { return leg == 0 ? kFrontThigh : kRearThigh; }
inline int hip_of(int leg) { return leg == 0 ? kFrontHip : kRearHip; }

}  // namespace qjump::sim
