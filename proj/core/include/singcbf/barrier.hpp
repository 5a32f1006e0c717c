#pragma once

#include <Eigen/Core>
#include <string>

#include "singcbf/class_k.hpp"
#include "singcbf/eigen_gradient.hpp"
#include "singcbf/system_model.hpp"

namespace singcbf {

/// One affine-in-u safety constraint  a^T u >= b, derived from a barrier h
/// and a class-K alpha:  a = L_g h,  b = -L_f h - alpha(h).
struct BarrierConstraint {
  Eigen::VectorXd a;
  double b = 0.0;
  double h_value = 0.0;
  std::string label;
};

/// Barrier h_i(x) = lambda_i(x) - epsilon on the i-th Gram eigenvalue
/// (ascending, 0-based). Requires lambda_i simple at x; propagates
/// NondifferentiablePoint from the gradient.
BarrierConstraint assemble_eigenvalue_barrier(const SystemModel& model,
                                              const StateVector& x, int index,
                                              double epsilon,
                                              const ClassKFunction& alpha,
                                              const GradientSpec& grad_spec);

/// Distance barrier h = 1/2 (||X - p_obstacle||^2 - delta^2) against the
/// current closest obstacle point, with p_obstacle frozen at this instant
/// so grad h = X - p_obstacle. X, p_obstacle and phi must share one
/// coordinate system: phi maps inputs to velocities of X in exactly those
/// coordinates.
BarrierConstraint assemble_distance_barrier(const Eigen::VectorXd& X,
                                            const Eigen::VectorXd& p_obstacle,
                                            double delta,
                                            const ClassKFunction& alpha,
                                            const Eigen::MatrixXd& phi,
                                            const std::string& label = "");

}  // namespace singcbf
