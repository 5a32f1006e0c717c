#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>

#include "singcbf/errors.hpp"

namespace singcbf {

using StateVector = Eigen::VectorXd;
using InputVector = Eigen::VectorXd;
using TaskOutput = Eigen::VectorXd;

/// Control-affine system
///
///   xdot = f(x) + g(x) u,   z = gamma(x)
///
/// with n states, m inputs and a d-dimensional task output. All member
/// functions must be pure: they may not keep internal state, so that
/// finite-difference checks against task_map stay valid.
struct SystemModel {
  int n = 0;
  int m = 0;
  int d = 0;

  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> drift;          // f(x), n
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> input_matrix;   // g(x), n x m
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> task_map;       // gamma(x), d
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> task_jacobian;  // J(x), d x n
};

/// Optional per-component box on admissible inputs.
struct InputBounds {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
};

/// Clamp u into the box. Returns the number of clipped components.
int saturate(Eigen::VectorXd& u, const InputBounds& bounds);

enum class Integrator { Euler, RK4 };

struct SimulatorConfig {
  double dt = 1e-3;
  double t_end = 10.0;
  Integrator integrator = Integrator::RK4;

  void validate() const;
};

/// phi(x) = J(x) g(x), the input-output mapping matrix (d x m).
Eigen::MatrixXd mapping_matrix(const SystemModel& model, const StateVector& x);

/// zdot = J(x) f(x) + phi(x) u.
Eigen::VectorXd task_velocity(const SystemModel& model, const StateVector& x,
                              const InputVector& u);

/// One fixed step of xdot = f(x) + g(x) u with u held constant (zero-order
/// hold). Throws IntegrationBlowup if the result is not finite.
StateVector step(const SystemModel& model, const StateVector& x,
                 const InputVector& u, const SimulatorConfig& cfg);

}  // namespace singcbf
