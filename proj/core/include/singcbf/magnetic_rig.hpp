#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "singcbf/class_k.hpp"
#include "singcbf/mesh_query.hpp"
#include "singcbf/point_cloud.hpp"
#include "singcbf/system_model.hpp"
#include "singcbf/trajectory_log.hpp"

namespace singcbf {

/// Planar magnetic actuation rig: stationary coils modeled as point
/// dipoles drive a dipole agent with pose (x, y, theta). First-order
/// driftless dynamics, Xdot = g(X) u with coil currents u.
struct CoilConfig {
  std::vector<Eigen::Vector2d> positions;  // m
  std::vector<Eigen::Vector2d> moments;    // A*m^2 per ampere
  double mu0_over_4pi = 1e-7;              // T*m^3 / (A*m^2)
  double workspace_radius = 0.0175;        // m (35 mm diameter)

  /// Four coils at 90 degree spacing on a ring just outside the
  /// workspace, moments pointing radially inward.
  static CoilConfig standard_ring(double ring_radius = 0.040,
                                  double moment_magnitude = 5.0,
                                  double workspace_diameter = 0.035);

  void validate() const;
};

struct AgentState {
  double x = 0.0;      // m
  double y = 0.0;      // m
  double theta = 0.0;  // rad, heading of the agent's dipole moment
};

struct AgentParams {
  double m0 = 5e-3;   // agent dipole magnitude, A*m^2
  double c_t = 1e-3;  // translational friction, N*s/m
  double c_r = 1e-6;  // rotational friction, N*m*s/rad

  void validate() const;
};

/// In-plane dipole field B = k (3 (m.rhat) rhat - m) / |r|^3 of a source
/// at `source_pos` with moment `source_moment`, evaluated at `query_pos`.
/// Throws DomainError when the query is within 1e-9 m of the source.
Eigen::Vector2d dipole_field(const Eigen::Vector2d& source_pos,
                             const Eigen::Vector2d& source_moment,
                             const Eigen::Vector2d& query_pos,
                             double mu0_over_4pi);

/// In-plane block of the analytic field gradient dB/d(x,y).
Eigen::Matrix2d dipole_field_gradient(const Eigen::Vector2d& source_pos,
                                      const Eigen::Vector2d& source_moment,
                                      const Eigen::Vector2d& query_pos,
                                      double mu0_over_4pi);

/// Full 3D field and gradient of the same dipole model; the planar
/// functions are its z = 0 restriction. Exposed for the divergence and
/// curl checks.
Eigen::Vector3d dipole_field3(const Eigen::Vector3d& source_pos,
                              const Eigen::Vector3d& source_moment,
                              const Eigen::Vector3d& query_pos,
                              double mu0_over_4pi);
Eigen::Matrix3d dipole_field_gradient3(const Eigen::Vector3d& source_pos,
                                       const Eigen::Vector3d& source_moment,
                                       const Eigen::Vector3d& query_pos,
                                       double mu0_over_4pi);

/// Force and torque on the agent per ampere through coil i:
/// F = (m . grad) B, tau = m_x B_y - m_y B_x.
struct UnitWrench {
  double fx = 0.0;   // N per A
  double fy = 0.0;   // N per A
  double tau = 0.0;  // N*m per A
};

UnitWrench unit_wrench(const CoilConfig& cfg, int coil, const AgentState& agent,
                       const AgentParams& params);

/// g(X): 3 x n_coils, column i = (F_x,i / c_t, F_y,i / c_t, tau_i / c_r).
Eigen::MatrixXd actuation_matrix(const CoilConfig& cfg, const AgentState& agent,
                                 const AgentParams& params);

/// Control-affine model of the rig: n = d = 3, m = #coils, f = 0,
/// task map = identity.
SystemModel magnetic_system_model(const CoilConfig& cfg,
                                  const AgentParams& params);

/// Minimum-norm currents for a desired pose rate:
/// u_ref = pinv(g) (pose_ref_rate + K_track (pose_ref - pose)), theta
/// error wrapped to (-pi, pi]. Truncation tolerance 1e-10.
InputVector reference_current_controller(const CoilConfig& cfg,
                                         const AgentState& agent,
                                         const AgentParams& params,
                                         const Eigen::Vector3d& pose_ref,
                                         const Eigen::Vector3d& pose_ref_rate,
                                         const Eigen::Vector3d& k_track);

/// Piecewise-linear pose reference travelled at constant (x, y) speed,
/// with linearly interpolated theta.
struct SuturePath {
  std::vector<Eigen::Vector3d> waypoints;  // (x, y, theta)
  double speed = 1.5e-3;                   // m/s along the (x, y) path

  double duration() const;
  /// Pose and pose rate at time t (clamped to the final waypoint).
  std::pair<Eigen::Vector3d, Eigen::Vector3d> sample(double t) const;
  void validate(const CoilConfig& cfg) const;
};

struct SutureQPConfig {
  Eigen::Matrix3d W = Eigen::Vector3d(100.0, 100.0, 1.0).asDiagonal();
  Eigen::MatrixXd Gamma;  // defaults to 1e-6 I
  double delta = 0.03;    // obstacle margin, unit-cube units
  ClassKFunction alpha = ClassKFunction::quadratic(5.0);
  Eigen::Vector3d k_track = Eigen::Vector3d(40.0, 40.0, 40.0);
  double current_limit = 4.0;  // A, saturation after the QP
};

struct SutureRunStats {
  int qp_infeasible_count = 0;
  int saturation_count = 0;
};

/// Closed-loop suturing run against configuration-space obstacles (one
/// distance-barrier row per obstacle component per step). Columns:
/// t,x,y,theta,I1..In,h_min,ex,ey,etheta,active_obstacle.
TrajectoryLog run_suturing_scenario(const CoilConfig& cfg,
                                    const AgentParams& params,
                                    const SuturePath& path,
                                    const MeshQuery& obstacles,
                                    const ScaleMap& scale,
                                    const SutureQPConfig& qp_cfg,
                                    const SimulatorConfig& sim,
                                    SutureRunStats* stats = nullptr);

double wrap_angle(double a);  // to (-pi, pi]

}  // namespace singcbf
