#pragma once

#include <Eigen/Core>
#include <numbers>
#include <vector>

#include "singcbf/class_k.hpp"
#include "singcbf/system_model.hpp"
#include "singcbf/trajectory_log.hpp"

namespace singcbf {

/// 2-link planar manipulator with joint-velocity inputs:
///   qdot = u,  z = forward kinematics of the tip.
struct ArmParameters {
  double l1 = 1.0;       // link lengths, m
  double l2 = 1.0;
  double kp = 2.0;       // proportional task-space gain, 1/s
  double epsilon = 0.1;  // barrier margin on lambda_1

  void validate() const;
};

struct ArmState {
  double q1 = 0.0;  // joint angles, rad
  double q2 = 0.0;
};

struct ArmScenario {
  std::vector<Eigen::Vector2d> waypoints;  // task targets z_d, in order
  std::vector<double> switch_times;        // one fewer than waypoints
  bool cbf_enabled = true;

  void validate(const ArmParameters& p) const;
  Eigen::Vector2d target_at(double t) const;
};

Eigen::Vector2d forward_kinematics(const ArmParameters& p, const ArmState& q);
Eigen::Matrix2d arm_jacobian(const ArmParameters& p, const ArmState& q);

/// Closed-form eigenvalues (lambda1 <= lambda2) of J J^T for unit links.
/// Throws UnsupportedParameters when l1 or l2 differ from 1; the numeric
/// spectrum must be used instead.
std::pair<double, double> analytic_eigenvalues(const ArmParameters& p,
                                               double q2);

/// Closed-form d lambda1 / d q2 for unit links.
double analytic_lambda1_gradient(const ArmParameters& p, double q2);

/// u_ref = pinv(J) * kp (z_d - z), Moore-Penrose with singular values
/// below 1e-10 truncated to zero.
InputVector arm_reference_controller(const ArmParameters& p, const ArmState& q,
                                     const Eigen::Vector2d& z_d);

/// Control-affine model: f = 0, g = I2, task map = forward kinematics.
SystemModel arm_system_model(const ArmParameters& p);

/// Closed-loop run. Columns: t,q1,q2,u1,u2,lambda1,h,ex,ey,active.
TrajectoryLog run_arm_scenario(const ArmParameters& p,
                               const ArmScenario& scenario,
                               const SimulatorConfig& sim,
                               const ClassKFunction& alpha =
                                   ClassKFunction::linear(1.0),
                               ArmState q0 = {std::numbers::pi / 4.0,
                                              std::numbers::pi / 2.0});

}  // namespace singcbf
