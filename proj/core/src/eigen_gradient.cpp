#include "singcbf/eigen_gradient.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace singcbf {

namespace {

Eigen::VectorXd spectrum_at(const SystemModel& model, const StateVector& x) {
  return eigen_spectrum(gram_matrix(mapping_matrix(model, x))).eigenvalues;
}

void check_simple(const Eigen::VectorXd& lambdas, int index) {
  const int k = static_cast<int>(lambdas.size());
  if (index < 0 || index >= k)
    throw ContractViolation("eigenvalue index " + std::to_string(index) +
                            " out of range [0, " + std::to_string(k) + ")");
  double gap = std::numeric_limits<double>::infinity();
  if (index > 0) gap = std::min(gap, lambdas[index] - lambdas[index - 1]);
  if (index + 1 < k) gap = std::min(gap, lambdas[index + 1] - lambdas[index]);
  if (gap <= kSimpleEigengap)
    throw NondifferentiablePoint(
        "eigenvalue " + std::to_string(index) +
        " is repeated (gap " + std::to_string(gap) + ")");
}

}  // namespace

double gram_eigenvalue(const SystemModel& model, const StateVector& x,
                       int index) {
  const Eigen::VectorXd lambdas = spectrum_at(model, x);
  if (index < 0 || index >= lambdas.size())
    throw ContractViolation("gram_eigenvalue: index out of range");
  return lambdas[index];
}

Eigen::VectorXd eigenvalue_gradient(const SystemModel& model,
                                    const StateVector& x, int index,
                                    const GradientSpec& spec) {
  check_simple(spectrum_at(model, x), index);

  if (spec.mode == GradientSpec::Mode::Analytic) {
    if (!spec.analytic)
      throw ContractViolation("GradientSpec: analytic mode without a form");
    return spec.analytic(x);
  }

  if (!(spec.fd_step > 0.0))
    throw ContractViolation("GradientSpec: fd_step must be > 0");
  const double h = spec.fd_step;
  Eigen::VectorXd grad(model.n);
  StateVector xp = x;
  for (int j = 0; j < model.n; ++j) {
    xp[j] = x[j] + h;
    const double lp = spectrum_at(model, xp)[index];
    xp[j] = x[j] - h;
    const double lm = spectrum_at(model, xp)[index];
    xp[j] = x[j];
    grad[j] = (lp - lm) / (2.0 * h);
  }
  return grad;
}

}  // namespace singcbf
