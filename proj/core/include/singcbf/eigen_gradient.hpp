#pragma once

#include <Eigen/Core>
#include <functional>

#include "singcbf/gram.hpp"
#include "singcbf/system_model.hpp"

namespace singcbf {

/// Minimum gap to the nearest neighbor eigenvalue below which an
/// eigenvalue is treated as repeated (gradients are then undefined).
inline constexpr double kSimpleEigengap = 1e-8;

/// How to differentiate an eigenvalue of the Gram matrix along the state.
struct GradientSpec {
  enum class Mode { Analytic, FiniteDifference };

  Mode mode = Mode::FiniteDifference;
  /// Closed-form gradient of lambda_index w.r.t. x, supplied by the model.
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> analytic;
  double fd_step = 1e-6;

  static GradientSpec analytic_form(
      std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad) {
    GradientSpec s;
    s.mode = Mode::Analytic;
    s.analytic = std::move(grad);
    return s;
  }
  static GradientSpec finite_difference(double h = 1e-6) {
    GradientSpec s;
    s.mode = Mode::FiniteDifference;
    s.fd_step = h;
    return s;
  }
};

/// lambda_index of gram(phi(x)), eigenvalues ascending, index 0-based.
double gram_eigenvalue(const SystemModel& model, const StateVector& x,
                       int index);

/// Gradient of lambda_index w.r.t. the state. Requires the eigenvalue to
/// be simple at x (gap > kSimpleEigengap); throws NondifferentiablePoint
/// otherwise.
Eigen::VectorXd eigenvalue_gradient(const SystemModel& model,
                                    const StateVector& x, int index,
                                    const GradientSpec& spec);

}  // namespace singcbf
