#include "singcbf/planar_arm.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "singcbf/barrier.hpp"
#include "singcbf/safety_filter.hpp"

namespace singcbf {

void ArmParameters::validate() const {
  std::vector<std::string> issues;
  if (!(l1 > 0.0)) issues.push_back("l1 must be > 0");
  if (!(l2 > 0.0)) issues.push_back("l2 must be > 0");
  if (!(kp > 0.0)) issues.push_back("kp must be > 0");
  if (!(epsilon > 0.0)) issues.push_back("epsilon must be > 0");
  if (!issues.empty()) throw ConfigError(issues);
}

void ArmScenario::validate(const ArmParameters& p) const {
  std::vector<std::string> issues;
  if (waypoints.empty()) issues.push_back("waypoints must be non-empty");
  if (switch_times.size() + 1 != waypoints.size() && !waypoints.empty())
    issues.push_back("switch_times must have one entry fewer than waypoints");
  // Reachable annulus, boundary included: the singular-target experiment
  // deliberately aims at the outer radius.
  const double r_min = std::abs(p.l1 - p.l2);
  const double r_max = p.l1 + p.l2;
  for (size_t i = 0; i < waypoints.size(); ++i) {
    const double r = waypoints[i].norm();
    if (r < r_min - 1e-9 || r > r_max + 1e-9)
      issues.push_back("waypoint " + std::to_string(i) +
                       " outside the reachable annulus");
  }
  for (size_t i = 1; i < switch_times.size(); ++i)
    if (!(switch_times[i] > switch_times[i - 1]))
      issues.push_back("switch_times must be strictly increasing");
  if (!issues.empty()) throw ConfigError(issues);
}

Eigen::Vector2d ArmScenario::target_at(double t) const {
  size_t k = 0;
  while (k < switch_times.size() && t >= switch_times[k]) ++k;
  return waypoints[k];
}

Eigen::Vector2d forward_kinematics(const ArmParameters& p, const ArmState& q) {
  return {p.l1 * std::cos(q.q1) + p.l2 * std::cos(q.q1 + q.q2),
          p.l1 * std::sin(q.q1) + p.l2 * std::sin(q.q1 + q.q2)};
}

Eigen::Matrix2d arm_jacobian(const ArmParameters& p, const ArmState& q) {
  const double s1 = std::sin(q.q1);
  const double c1 = std::cos(q.q1);
  const double s12 = std::sin(q.q1 + q.q2);
  const double c12 = std::cos(q.q1 + q.q2);
  Eigen::Matrix2d J;
  J << -p.l1 * s1 - p.l2 * s12, -p.l2 * s12,
        p.l1 * c1 + p.l2 * c12,  p.l2 * c12;
  return J;
}

namespace {

void require_unit_links(const ArmParameters& p) {
  if (p.l1 != 1.0 || p.l2 != 1.0)
    throw UnsupportedParameters(
        "closed-form arm eigenvalues require l1 = l2 = 1");
}

double radicand(double c2) { return 12.0 * c2 + 8.0 * c2 * c2 + 5.0; }

}  // namespace

std::pair<double, double> analytic_eigenvalues(const ArmParameters& p,
                                               double q2) {
  require_unit_links(p);
  const double c2 = std::cos(q2);
  const double root = std::sqrt(radicand(c2));
  return {c2 - 0.5 * root + 1.5, c2 + 0.5 * root + 1.5};
}

double analytic_lambda1_gradient(const ArmParameters& p, double q2) {
  require_unit_links(p);
  const double s2 = std::sin(q2);
  const double c2 = std::cos(q2);
  return -s2 + (12.0 * s2 + 16.0 * c2 * s2) / (4.0 * std::sqrt(radicand(c2)));
}

InputVector arm_reference_controller(const ArmParameters& p, const ArmState& q,
                                     const Eigen::Vector2d& z_d) {
  const Eigen::Vector2d zdot_des = p.kp * (z_d - forward_kinematics(p, q));
  const Eigen::Matrix2d J = arm_jacobian(p, q);
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(
      J, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector2d inv_sigma = Eigen::Vector2d::Zero();
  for (int i = 0; i < 2; ++i)
    if (svd.singularValues()[i] > 1e-10)
      inv_sigma[i] = 1.0 / svd.singularValues()[i];
  return svd.matrixV() * inv_sigma.asDiagonal() *
         svd.matrixU().transpose() * zdot_des;
}

SystemModel arm_system_model(const ArmParameters& p) {
  SystemModel model;
  model.n = 2;
  model.m = 2;
  model.d = 2;
  model.drift = [](const Eigen::VectorXd&) { return Eigen::Vector2d::Zero(); };
  model.input_matrix = [](const Eigen::VectorXd&) {
    return Eigen::Matrix2d::Identity();
  };
  model.task_map = [p](const Eigen::VectorXd& x) {
    return forward_kinematics(p, {x[0], x[1]});
  };
  model.task_jacobian = [p](const Eigen::VectorXd& x) {
    return arm_jacobian(p, {x[0], x[1]});
  };
  return model;
}

TrajectoryLog run_arm_scenario(const ArmParameters& p,
                               const ArmScenario& scenario,
                               const SimulatorConfig& sim,
                               const ClassKFunction& alpha, ArmState q0) {
  p.validate();
  scenario.validate(p);
  sim.validate();

  const SystemModel model = arm_system_model(p);
  // Closed forms exist for unit links only; otherwise fall back to finite
  // differences of the numeric spectrum.
  const bool unit_links = (p.l1 == 1.0 && p.l2 == 1.0);
  const GradientSpec grad =
      unit_links ? GradientSpec::analytic_form(
                       [p](const Eigen::VectorXd& x) -> Eigen::VectorXd {
                         return Eigen::Vector2d(
                             0.0, analytic_lambda1_gradient(p, x[1]));
                       })
                 : GradientSpec::finite_difference();
  const std::vector<BarrierSpecFn> barriers = {
      [&, grad](const SystemModel& mdl, const StateVector& x) {
        return assemble_eigenvalue_barrier(mdl, x, 0, p.epsilon, alpha, grad);
      }};
  const CostSpec cost{Eigen::Matrix2d::Identity(), std::nullopt};

  TrajectoryLog log;
  log.columns = {"t",  "q1", "q2", "u1", "u2",
                 "lambda1", "h",  "ex", "ey", "active"};

  Eigen::VectorXd x(2);
  x << q0.q1, q0.q2;
  const long n_steps = std::lround(sim.t_end / sim.dt);
  for (long k = 0; k <= n_steps; ++k) {
    const double t = static_cast<double>(k) * sim.dt;
    const ArmState q{x[0], x[1]};
    const Eigen::Vector2d z_d = scenario.target_at(t);
    const Eigen::Vector2d e = z_d - forward_kinematics(p, q);
    const Eigen::VectorXd u_ref = arm_reference_controller(p, q, z_d);

    Eigen::VectorXd u = u_ref;
    double active = 0.0;
    if (scenario.cbf_enabled) {
      const FilterResult res =
          safety_filter(model, x, u_ref, barriers, cost, std::nullopt);
      u = res.u;
      active = res.diag.active.empty() ? 0.0 : 1.0;
    }
    const double lambda1 =
        unit_links ? analytic_eigenvalues(p, q.q2).first
                   : gram_eigenvalue(model, x, 0);

    log.append({t, q.q1, q.q2, u[0], u[1], lambda1, lambda1 - p.epsilon,
                e[0], e[1], active});
    if (k < n_steps) x = step(model, x, u, sim);
  }
  return log;
}

}  // namespace singcbf
