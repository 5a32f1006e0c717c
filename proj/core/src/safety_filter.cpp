#include "singcbf/safety_filter.hpp"

#include <nlohmann/json.hpp>

#include "singcbf/gram.hpp"

namespace singcbf {

namespace {

void check_spd(const Eigen::MatrixXd& M, const std::string& name) {
  if (M.rows() != M.cols())
    throw ContractViolation(name + " must be square");
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw ContractViolation(name + " must be symmetric");
  if (symmetric_eigen(M).eigenvalues[0] <= 0.0)
    throw ContractViolation(name + " must be positive definite");
}

}  // namespace

QPProblem build_cost(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& W,
                     const std::optional<Eigen::MatrixXd>& Gamma,
                     const Eigen::VectorXd& u_ref) {
  const int d = static_cast<int>(phi.rows());
  const int m = static_cast<int>(phi.cols());
  if (W.rows() != d || W.cols() != d)
    throw ContractViolation("build_cost: W must be d x d");
  check_spd(W, "build_cost: W");
  if (u_ref.size() != m)
    throw ContractViolation("build_cost: u_ref length != m");

  QPProblem qp;
  qp.Q = phi.transpose() * W * phi;
  if (d < m) {
    if (!Gamma)
      throw ConfigError(
          {"build_cost: Gamma is required for over-actuated systems (d < m)"});
    if (Gamma->rows() != m || Gamma->cols() != m)
      throw ContractViolation("build_cost: Gamma must be m x m");
    check_spd(*Gamma, "build_cost: Gamma");
    qp.Q += *Gamma;
  }
  qp.Q = 0.5 * (qp.Q + qp.Q.transpose());  // kill round-off asymmetry
  if (symmetric_eigen(qp.Q).eigenvalues[0] <= 1e-12)
    throw SingularCost("build_cost: cost matrix is singular (filter at a singularity)");
  qp.u_ref = u_ref;
  return qp;
}

FilterResult safety_filter(const SystemModel& model, const StateVector& x,
                           const InputVector& u_ref,
                           const std::vector<BarrierSpecFn>& barriers,
                           const CostSpec& cost,
                           const std::optional<InputBounds>& bounds) {
  const Eigen::MatrixXd phi = mapping_matrix(model, x);
  QPProblem qp = build_cost(phi, cost.W, cost.Gamma, u_ref);
  for (const auto& make : barriers) qp.constraints.push_back(make(model, x));
  qp.bounds = bounds;

  const QPSolution sol = solve_qp(qp);

  FilterResult res;
  res.u_ref = u_ref;
  res.diag.status = sol.status;
  for (const auto& c : qp.constraints) res.diag.h.push_back(c.h_value);
  if (sol.status == QPStatus::Optimal) {
    res.u = sol.u;
    res.diag.active = sol.active_set;
    res.diag.deviation = (sol.u - u_ref).norm();
  } else {
    res.u = u_ref;  // caller decides the fallback
    res.diag.deviation = 0.0;
  }
  return res;
}

std::string diagnostics_json_line(double t, const FilterResult& result) {
  nlohmann::json j;
  j["t"] = t;
  j["h"] = result.diag.h;
  j["active"] = result.diag.active;
  j["u"] = std::vector<double>(result.u.data(), result.u.data() + result.u.size());
  j["u_ref"] = std::vector<double>(result.u_ref.data(),
                                   result.u_ref.data() + result.u_ref.size());
  j["deviation"] = result.diag.deviation;
  j["status"] =
      result.diag.status == QPStatus::Optimal ? "optimal" : "infeasible";
  return j.dump();
}

}  // namespace singcbf
