#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "singcbf/barrier.hpp"
#include "singcbf/system_model.hpp"

namespace singcbf {

/// Strictly convex QP
///
///   min_u 1/2 (u - u_ref)^T Q (u - u_ref)
///   s.t.  a_i^T u >= b_i           (rows of `constraints`)
///         lo <= u <= hi            (optional box)
///
/// Box bounds are appended to the constraint index space after the
/// explicit rows: index n_rows + i is u_i >= lo_i and n_rows + m + i is
/// -u_i >= -hi_i.
struct QPProblem {
  Eigen::MatrixXd Q;
  Eigen::VectorXd u_ref;
  std::vector<BarrierConstraint> constraints;
  std::optional<InputBounds> bounds;
};

enum class QPStatus { Optimal, Infeasible };

struct QPSolution {
  Eigen::VectorXd u;
  std::vector<int> active_set;      // ascending constraint indices
  std::vector<double> multipliers;  // aligned with active_set, >= 0
  QPStatus status = QPStatus::Optimal;
  int iterations = 0;
};

/// Residuals of the KKT conditions at a solution; all should be tiny for
/// an Optimal result (stationarity/complementarity <= 1e-7, feasibility
/// violation <= 1e-8, multipliers >= 0).
struct KKTResiduals {
  double stationarity = 0.0;      // ||Q(u - u_ref) - sum mu_i a_i||
  double feasibility = 0.0;       // max_i max(0, b_i - a_i^T u)
  double complementarity = 0.0;   // max_i |mu_i (a_i^T u - b_i)|
  double dual = 0.0;              // max_i max(0, -mu_i)
};

KKTResiduals kkt_residuals(const QPProblem& problem, const QPSolution& sol);

/// Dual active-set solve: starts at the unconstrained optimum u_ref,
/// repeatedly adds the most violated constraint (ties broken by lowest
/// index), takes the exact step from the equality-constrained KKT system
/// and drops constraints whose multipliers would go negative. Terminates
/// in finitely many iterations; an inconsistent constraint set is
/// certified during the dual step and reported as Infeasible. When u_ref
/// already satisfies every constraint it is returned unchanged with an
/// empty active set.
QPSolution solve_qp(const QPProblem& problem);

}  // namespace singcbf
