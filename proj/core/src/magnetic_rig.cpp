#include "singcbf/magnetic_rig.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>

#include "singcbf/barrier.hpp"
#include "singcbf/log.hpp"
#include "singcbf/safety_filter.hpp"

namespace singcbf {

CoilConfig CoilConfig::standard_ring(double ring_radius,
                                     double moment_magnitude,
                                     double workspace_diameter) {
  CoilConfig cfg;
  cfg.workspace_radius = 0.5 * workspace_diameter;
  for (int i = 0; i < 4; ++i) {
    const double angle = i * std::numbers::pi / 2.0;
    const Eigen::Vector2d radial(std::cos(angle), std::sin(angle));
    cfg.positions.push_back(ring_radius * radial);
    cfg.moments.push_back(-moment_magnitude * radial);  // pointing inward
  }
  return cfg;
}

void CoilConfig::validate() const {
  std::vector<std::string> issues;
  if (positions.size() != moments.size())
    issues.push_back("coil positions and moments differ in count");
  if (positions.empty()) issues.push_back("at least one coil required");
  if (!(mu0_over_4pi > 0.0)) issues.push_back("mu0_over_4pi must be > 0");
  if (!(workspace_radius > 0.0))
    issues.push_back("workspace_radius must be > 0");
  for (size_t i = 0; i < positions.size(); ++i) {
    if (positions[i].norm() <= workspace_radius)
      issues.push_back("coil " + std::to_string(i) +
                       " lies inside the workspace disk");
    for (size_t j = i + 1; j < positions.size(); ++j)
      if ((positions[i] - positions[j]).norm() < 1e-12)
        issues.push_back("coils " + std::to_string(i) + " and " +
                         std::to_string(j) + " coincide");
  }
  for (size_t i = 0; i < moments.size(); ++i)
    if (!(moments[i].norm() > 0.0))
      issues.push_back("coil " + std::to_string(i) + " has zero moment");
  if (!issues.empty()) throw ConfigError(issues);
}

void AgentParams::validate() const {
  std::vector<std::string> issues;
  if (!(m0 > 0.0)) issues.push_back("m0 must be > 0");
  if (!(c_t > 0.0)) issues.push_back("c_t must be > 0");
  if (!(c_r > 0.0)) issues.push_back("c_r must be > 0");
  if (!issues.empty()) throw ConfigError(issues);
}

Eigen::Vector3d dipole_field3(const Eigen::Vector3d& source_pos,
                              const Eigen::Vector3d& source_moment,
                              const Eigen::Vector3d& query_pos,
                              double mu0_over_4pi) {
  const Eigen::Vector3d r = query_pos - source_pos;
  const double dist = r.norm();
  if (dist <= 1e-9)
    throw DomainError("dipole_field: query point on top of the source");
  const Eigen::Vector3d n = r / dist;
  return mu0_over_4pi *
         (3.0 * source_moment.dot(n) * n - source_moment) /
         (dist * dist * dist);
}

Eigen::Matrix3d dipole_field_gradient3(const Eigen::Vector3d& source_pos,
                                       const Eigen::Vector3d& source_moment,
                                       const Eigen::Vector3d& query_pos,
                                       double mu0_over_4pi) {
  const Eigen::Vector3d r = query_pos - source_pos;
  const double dist = r.norm();
  if (dist <= 1e-9)
    throw DomainError("dipole_field_gradient: query point on top of the source");
  const Eigen::Vector3d n = r / dist;
  const double mn = source_moment.dot(n);
  const double k = 3.0 * mu0_over_4pi / (dist * dist * dist * dist);
  // dB_i/dr_j = k [ (m.n) delta_ij + m_i n_j + n_i m_j - 5 (m.n) n_i n_j ]
  Eigen::Matrix3d grad =
      k * (mn * Eigen::Matrix3d::Identity() +
           source_moment * n.transpose() + n * source_moment.transpose() -
           5.0 * mn * n * n.transpose());
  return grad;
}

Eigen::Vector2d dipole_field(const Eigen::Vector2d& source_pos,
                             const Eigen::Vector2d& source_moment,
                             const Eigen::Vector2d& query_pos,
                             double mu0_over_4pi) {
  const Eigen::Vector3d b =
      dipole_field3({source_pos[0], source_pos[1], 0.0},
                    {source_moment[0], source_moment[1], 0.0},
                    {query_pos[0], query_pos[1], 0.0}, mu0_over_4pi);
  return {b[0], b[1]};
}

Eigen::Matrix2d dipole_field_gradient(const Eigen::Vector2d& source_pos,
                                      const Eigen::Vector2d& source_moment,
                                      const Eigen::Vector2d& query_pos,
                                      double mu0_over_4pi) {
  const Eigen::Matrix3d g =
      dipole_field_gradient3({source_pos[0], source_pos[1], 0.0},
                             {source_moment[0], source_moment[1], 0.0},
                             {query_pos[0], query_pos[1], 0.0}, mu0_over_4pi);
  return g.topLeftCorner<2, 2>();
}

UnitWrench unit_wrench(const CoilConfig& cfg, int coil, const AgentState& agent,
                       const AgentParams& params) {
  if (coil < 0 || coil >= static_cast<int>(cfg.positions.size()))
    throw ContractViolation("unit_wrench: coil index out of range");
  const Eigen::Vector2d pos(agent.x, agent.y);
  const Eigen::Vector2d m =
      params.m0 * Eigen::Vector2d(std::cos(agent.theta), std::sin(agent.theta));

  const Eigen::Vector2d B =
      dipole_field(cfg.positions[coil], cfg.moments[coil], pos, cfg.mu0_over_4pi);
  const Eigen::Matrix2d dB = dipole_field_gradient(
      cfg.positions[coil], cfg.moments[coil], pos, cfg.mu0_over_4pi);

  UnitWrench w;
  const Eigen::Vector2d F = dB * m;  // F_i = sum_j m_j dB_i/dr_j
  w.fx = F[0];
  w.fy = F[1];
  w.tau = m[0] * B[1] - m[1] * B[0];
  return w;
}

Eigen::MatrixXd actuation_matrix(const CoilConfig& cfg, const AgentState& agent,
                                 const AgentParams& params) {
  const int n_coils = static_cast<int>(cfg.positions.size());
  Eigen::MatrixXd g(3, n_coils);
  for (int i = 0; i < n_coils; ++i) {
    const UnitWrench w = unit_wrench(cfg, i, agent, params);
    g(0, i) = w.fx / params.c_t;
    g(1, i) = w.fy / params.c_t;
    g(2, i) = w.tau / params.c_r;
  }
  return g;
}

SystemModel magnetic_system_model(const CoilConfig& cfg,
                                  const AgentParams& params) {
  SystemModel model;
  model.n = 3;
  model.m = static_cast<int>(cfg.positions.size());
  model.d = 3;
  model.drift = [](const Eigen::VectorXd&) { return Eigen::Vector3d::Zero(); };
  model.input_matrix = [cfg, params](const Eigen::VectorXd& x) {
    return actuation_matrix(cfg, {x[0], x[1], x[2]}, params);
  };
  model.task_map = [](const Eigen::VectorXd& x) { return x; };
  model.task_jacobian = [](const Eigen::VectorXd&) {
    return Eigen::Matrix3d::Identity();
  };
  return model;
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * std::numbers::pi);  // [-pi, pi]
  if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

InputVector reference_current_controller(const CoilConfig& cfg,
                                         const AgentState& agent,
                                         const AgentParams& params,
                                         const Eigen::Vector3d& pose_ref,
                                         const Eigen::Vector3d& pose_ref_rate,
                                         const Eigen::Vector3d& k_track) {
  Eigen::Vector3d err(pose_ref[0] - agent.x, pose_ref[1] - agent.y,
                      wrap_angle(pose_ref[2] - agent.theta));
  const Eigen::Vector3d xdot_des = pose_ref_rate + k_track.asDiagonal() * err;

  const Eigen::MatrixXd g = actuation_matrix(cfg, agent, params);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      g, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd inv_sigma = Eigen::VectorXd::Zero(svd.singularValues().size());
  for (Eigen::Index i = 0; i < inv_sigma.size(); ++i)
    if (svd.singularValues()[i] > 1e-10)
      inv_sigma[i] = 1.0 / svd.singularValues()[i];
  return svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().transpose() *
         xdot_des;
}

double SuturePath::duration() const {
  double length = 0.0;
  for (size_t i = 1; i < waypoints.size(); ++i)
    length += (waypoints[i].head<2>() - waypoints[i - 1].head<2>()).norm();
  return length / speed;
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> SuturePath::sample(double t) const {
  if (waypoints.empty())
    throw ContractViolation("SuturePath: no waypoints");
  if (waypoints.size() == 1 || t <= 0.0)
    return {waypoints.front(), Eigen::Vector3d::Zero()};

  double remaining = t * speed;
  for (size_t i = 1; i < waypoints.size(); ++i) {
    const Eigen::Vector3d& a = waypoints[i - 1];
    const Eigen::Vector3d& b = waypoints[i];
    const double seg_len = (b.head<2>() - a.head<2>()).norm();
    if (remaining <= seg_len || i + 1 == waypoints.size()) {
      if (remaining >= seg_len) return {b, Eigen::Vector3d::Zero()};
      const double s = seg_len > 0.0 ? remaining / seg_len : 1.0;
      const Eigen::Vector3d pose = a + s * (b - a);
      Eigen::Vector3d rate = (b - a) / seg_len * speed;
      return {pose, rate};
    }
    remaining -= seg_len;
  }
  return {waypoints.back(), Eigen::Vector3d::Zero()};
}

void SuturePath::validate(const CoilConfig& cfg) const {
  std::vector<std::string> issues;
  if (waypoints.size() < 2)
    issues.push_back("path needs at least two waypoints");
  if (!(speed > 0.0)) issues.push_back("path speed must be > 0");
  for (size_t i = 0; i < waypoints.size(); ++i)
    if (waypoints[i].head<2>().norm() >= cfg.workspace_radius)
      issues.push_back("waypoint " + std::to_string(i) +
                       " outside the workspace disk");
  if (!issues.empty()) throw ConfigError(issues);
}

TrajectoryLog run_suturing_scenario(const CoilConfig& cfg,
                                    const AgentParams& params,
                                    const SuturePath& path,
                                    const MeshQuery& obstacles,
                                    const ScaleMap& scale,
                                    const SutureQPConfig& qp_cfg,
                                    const SimulatorConfig& sim,
                                    SutureRunStats* stats) {
  cfg.validate();
  params.validate();
  path.validate(cfg);
  sim.validate();

  const SystemModel model = magnetic_system_model(cfg, params);
  const int n_coils = model.m;
  const Eigen::MatrixXd Gamma =
      qp_cfg.Gamma.size() > 0
          ? qp_cfg.Gamma
          : Eigen::MatrixXd(1e-6 * Eigen::MatrixXd::Identity(n_coils, n_coils));
  const CostSpec cost{qp_cfg.W, Gamma};
  const InputBounds bounds{
      Eigen::VectorXd::Constant(n_coils, -qp_cfg.current_limit),
      Eigen::VectorXd::Constant(n_coils, qp_cfg.current_limit)};

  TrajectoryLog log;
  log.columns = {"t", "x", "y", "theta"};
  for (int i = 0; i < n_coils; ++i)
    log.columns.push_back("I" + std::to_string(i + 1));
  for (const char* c : {"h_min", "ex", "ey", "etheta", "active_obstacle"})
    log.columns.push_back(c);

  // The scaled theta axis covers one period plus a replica on each side,
  // so queries wrapped into the middle copy see obstacles across the
  // 0/2pi seam at their true distance.
  const double two_pi = 2.0 * std::numbers::pi;
  auto scaled_pose = [&](const Eigen::VectorXd& x) {
    double theta = x[2] - two_pi * std::floor(x[2] / two_pi);  // [0, 2pi)
    return scale.to_unit({x[0], x[1], theta});
  };

  Eigen::VectorXd x(3);
  x << path.waypoints.front()[0], path.waypoints.front()[1],
      path.waypoints.front()[2];
  Eigen::VectorXd u_prev = Eigen::VectorXd::Zero(n_coils);

  SutureRunStats local_stats;
  const long n_steps = std::lround(sim.t_end / sim.dt);
  for (long k = 0; k <= n_steps; ++k) {
    const double t = static_cast<double>(k) * sim.dt;
    const auto [pose_ref, pose_rate] = path.sample(t);
    const AgentState agent{x[0], x[1], x[2]};
    const Eigen::VectorXd u_ref = reference_current_controller(
        cfg, agent, params, pose_ref, pose_rate, qp_cfg.k_track);

    // One distance-barrier row per obstacle component, all in unit-cube
    // coordinates: phi_s = S g maps currents to scaled pose rates.
    const Eigen::Vector3d xs = scaled_pose(x);
    const Eigen::MatrixXd g = actuation_matrix(cfg, agent, params);
    Eigen::MatrixXd phi_s = g;
    for (int r = 0; r < 3; ++r)
      phi_s.row(r) =
          g.row(r) / (scale.extent[r] > 0.0 ? scale.extent[r] : 1.0);

    QPProblem qp = build_cost(phi_s, qp_cfg.W, Gamma, u_ref);
    double h_min = std::numeric_limits<double>::infinity();
    for (int c = 0; c < obstacles.num_components(); ++c) {
      const ClosestPointResult cp = obstacles.closest_point(c, xs);
      qp.constraints.push_back(assemble_distance_barrier(
          xs, cp.point, qp_cfg.delta, qp_cfg.alpha, phi_s,
          "obstacle_" + std::to_string(c)));
      h_min = std::min(h_min, qp.constraints.back().h_value);
    }
    if (obstacles.num_components() == 0) h_min = 0.0;

    const QPSolution sol = solve_qp(qp);
    Eigen::VectorXd u;
    double active_obstacle = -1.0;
    if (sol.status == QPStatus::Optimal) {
      u = sol.u;
      for (int idx : sol.active_set)
        if (idx < obstacles.num_components()) {
          active_obstacle = idx;
          break;
        }
    } else {
      // Hold the last feasible input for one step and re-solve next step.
      u = u_prev;
      ++local_stats.qp_infeasible_count;
      log_warn("suture QP infeasible at t=" + std::to_string(t) +
               ", holding previous input");
    }
    if (saturate(u, bounds) > 0) {
      ++local_stats.saturation_count;
      log_warn("current saturation at t=" + std::to_string(t) +
               " (safety not guaranteed under input bounds)");
    }

    std::vector<double> row = {t, x[0], x[1], x[2]};
    for (int i = 0; i < n_coils; ++i) row.push_back(u[i]);
    row.push_back(h_min);
    row.push_back(pose_ref[0] - x[0]);
    row.push_back(pose_ref[1] - x[1]);
    row.push_back(wrap_angle(pose_ref[2] - x[2]));
    row.push_back(active_obstacle);
    log.append(std::move(row));

    if (k < n_steps) {
      x = step(model, x, u, sim);
      u_prev = u;
    }
  }
  if (stats) *stats = local_stats;
  return log;
}

}  // namespace singcbf
