#include "singcbf/barrier.hpp"

namespace singcbf {

BarrierConstraint assemble_eigenvalue_barrier(const SystemModel& model,
                                              const StateVector& x, int index,
                                              double epsilon,
                                              const ClassKFunction& alpha,
                                              const GradientSpec& grad_spec) {
  const Eigen::VectorXd grad = eigenvalue_gradient(model, x, index, grad_spec);
  const double lambda = gram_eigenvalue(model, x, index);
  const double h = lambda - epsilon;

  const Eigen::VectorXd f = model.drift(x);
  const Eigen::MatrixXd g = model.input_matrix(x);

  BarrierConstraint c;
  c.a = g.transpose() * grad;  // (grad^T g)^T
  c.b = -grad.dot(f) - class_k_eval(alpha, h);
  c.h_value = h;
  c.label = "lambda_" + std::to_string(index);
  return c;
}

BarrierConstraint assemble_distance_barrier(const Eigen::VectorXd& X,
                                            const Eigen::VectorXd& p_obstacle,
                                            double delta,
                                            const ClassKFunction& alpha,
                                            const Eigen::MatrixXd& phi,
                                            const std::string& label) {
  if (X.size() != p_obstacle.size())
    throw ContractViolation("assemble_distance_barrier: size mismatch");
  if (phi.rows() != X.size())
    throw ContractViolation(
        "assemble_distance_barrier: phi rows must match dim of X");

  const Eigen::VectorXd grad = X - p_obstacle;  // p frozen at this instant
  const double h = 0.5 * (grad.squaredNorm() - delta * delta);

  BarrierConstraint c;
  c.a = phi.transpose() * grad;
  c.b = -class_k_eval(alpha, h);
  c.h_value = h;
  c.label = label.empty() ? "distance" : label;
  return c;
}

}  // namespace singcbf
