#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "singcbf/qp.hpp"

namespace singcbf {

/// Task-space-weighted cost matrix:
///   Q = phi^T W phi            when d >= m
///   Q = phi^T W phi + Gamma    when d <  m (over-actuated; Gamma required)
/// Returns the cost part of a QPProblem (Q and u_ref, no constraints).
/// Throws ConfigError when Gamma is missing for d < m and SingularCost
/// when lambda_min(Q) <= 1e-12.
QPProblem build_cost(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& W,
                     const std::optional<Eigen::MatrixXd>& Gamma,
                     const Eigen::VectorXd& u_ref);

/// Produces one BarrierConstraint for the current state. Scenario code
/// binds eigenvalue or distance barriers into this shape.
using BarrierSpecFn =
    std::function<BarrierConstraint(const SystemModel&, const StateVector&)>;

struct CostSpec {
  Eigen::MatrixXd W;                     // SPD d x d
  std::optional<Eigen::MatrixXd> Gamma;  // SPD m x m, required when d < m
};

struct FilterDiagnostics {
  std::vector<double> h;         // barrier values, in barrier order
  std::vector<int> active;       // active constraint indices
  double deviation = 0.0;        // ||u - u_ref||
  QPStatus status = QPStatus::Optimal;
};

struct FilterResult {
  Eigen::VectorXd u;
  Eigen::VectorXd u_ref;
  FilterDiagnostics diag;
};

/// Assembles every barrier at x, builds the weighted cost and solves the
/// safety-filter QP. On Infeasible the returned u equals u_ref and the
/// caller decides the fallback.
FilterResult safety_filter(const SystemModel& model, const StateVector& x,
                           const InputVector& u_ref,
                           const std::vector<BarrierSpecFn>& barriers,
                           const CostSpec& cost,
                           const std::optional<InputBounds>& bounds = {});

/// One diagnostics record as a single JSON line:
/// {"t":..., "h":[...], "active":[...], "u":[...], "u_ref":[...],
///  "deviation":...}
std::string diagnostics_json_line(double t, const FilterResult& result);

}  // namespace singcbf
