#include "singcbf/qp.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>

#include "singcbf/gram.hpp"

namespace singcbf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kActivationTol = 1e-11;  // violation below this is noise
constexpr double kDependentTol = 1e-12;   // curvature ratio for z ~ 0

struct Rows {
  std::vector<Eigen::VectorXd> a;
  std::vector<double> b;

  int size() const { return static_cast<int>(a.size()); }
};

Rows collect_rows(const QPProblem& p) {
  const int m = static_cast<int>(p.u_ref.size());
  Rows rows;
  for (const auto& c : p.constraints) {
    if (c.a.size() != m)
      throw ContractViolation("solve_qp: constraint row size != m");
    if (!c.a.allFinite() || !std::isfinite(c.b))
      throw ContractViolation("solve_qp: constraint has non-finite entries");
    rows.a.push_back(c.a);
    rows.b.push_back(c.b);
  }
  if (p.bounds) {
    if (p.bounds->lo.size() != m || p.bounds->hi.size() != m)
      throw ContractViolation("solve_qp: bounds size != m");
    for (int i = 0; i < m; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
      e[i] = 1.0;
      rows.a.push_back(e);
      rows.b.push_back(p.bounds->lo[i]);
    }
    for (int i = 0; i < m; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
      e[i] = -1.0;
      rows.a.push_back(e);
      rows.b.push_back(-p.bounds->hi[i]);
    }
  }
  return rows;
}

}  // namespace

KKTResiduals kkt_residuals(const QPProblem& problem, const QPSolution& sol) {
  const Rows rows = collect_rows(problem);
  KKTResiduals r;

  Eigen::VectorXd grad = problem.Q * (sol.u - problem.u_ref);
  for (size_t k = 0; k < sol.active_set.size(); ++k)
    grad -= sol.multipliers[k] * rows.a[sol.active_set[k]];
  r.stationarity = grad.norm();

  for (int i = 0; i < rows.size(); ++i)
    r.feasibility =
        std::max(r.feasibility, rows.b[i] - rows.a[i].dot(sol.u));
  r.feasibility = std::max(0.0, r.feasibility);

  for (size_t k = 0; k < sol.active_set.size(); ++k) {
    const int i = sol.active_set[k];
    r.complementarity =
        std::max(r.complementarity,
                 std::abs(sol.multipliers[k] * (rows.a[i].dot(sol.u) - rows.b[i])));
    r.dual = std::max(r.dual, std::max(0.0, -sol.multipliers[k]));
  }
  return r;
}

QPSolution solve_qp(const QPProblem& problem) {
  const int m = static_cast<int>(problem.u_ref.size());
  if (problem.Q.rows() != m || problem.Q.cols() != m)
    throw ContractViolation("solve_qp: Q must be m x m");
  {
    const double qscale = std::max(1.0, problem.Q.cwiseAbs().maxCoeff());
    if ((problem.Q - problem.Q.transpose()).cwiseAbs().maxCoeff() >
        1e-10 * qscale)
      throw ContractViolation("solve_qp: Q is not symmetric");
    if (symmetric_eigen(problem.Q).eigenvalues[0] <= 0.0)
      throw ContractViolation("solve_qp: Q is not positive definite");
  }

  const Rows rows = collect_rows(problem);
  const int n_rows = rows.size();

  Eigen::LLT<Eigen::MatrixXd> llt(problem.Q);
  if (llt.info() != Eigen::Success)
    throw ContractViolation("solve_qp: Cholesky of Q failed");

  QPSolution sol;
  sol.status = QPStatus::Optimal;

  std::vector<int> active;       // in addition order
  std::vector<double> mu;        // aligned with `active`
  Eigen::VectorXd u = problem.u_ref;

  auto in_active = [&](int i) {
    return std::find(active.begin(), active.end(), i) != active.end();
  };

  // Rebuilds the small projections for the current working set and a
  // candidate row: z is the primal direction in the null space of the
  // active rows (Q-metric), r the dual direction.
  auto directions = [&](const Eigen::VectorXd& ap, Eigen::VectorXd& z,
                        Eigen::VectorXd& r) {
    const Eigen::VectorXd qinv_ap = llt.solve(ap);
    const int w = static_cast<int>(active.size());
    if (w == 0) {
      z = qinv_ap;
      r.resize(0);
      return;
    }
    Eigen::MatrixXd A(w, m);
    for (int k = 0; k < w; ++k) A.row(k) = rows.a[active[k]];
    const Eigen::MatrixXd QinvAt = llt.solve(A.transpose());
    const Eigen::MatrixXd B = A * QinvAt;  // w x w, SPD while rows independent
    r = B.ldlt().solve(A * qinv_ap);
    z = qinv_ap - QinvAt * r;
  };

  const int max_iter = 100 * (n_rows + 1);
  int iter = 0;
  bool done = false;
  while (!done) {
    if (++iter > max_iter)
      throw Error("solve_qp: iteration cap exceeded");

    // Most violated constraint outside the working set, lowest index wins
    // ties.
    int p = -1;
    double worst = -kActivationTol;
    for (int i = 0; i < n_rows; ++i) {
      if (in_active(i)) continue;
      const double s = rows.a[i].dot(u) - rows.b[i];
      const double tol = kActivationTol * std::max(1.0, std::abs(rows.b[i]));
      if (s < -tol && s < worst) {
        worst = s;
        p = i;
      }
    }
    if (p < 0) break;  // primal feasible and dual feasible by construction

    const Eigen::VectorXd& ap = rows.a[p];
    double mu_p = 0.0;

    // Inner loop: bring constraint p into the working set, dropping
    // blockers as their multipliers hit zero.
    while (true) {
      if (++iter > max_iter)
        throw Error("solve_qp: iteration cap exceeded");

      Eigen::VectorXd z, r;
      directions(ap, z, r);

      const double curvature = ap.dot(z);
      const double curv_scale = std::max(ap.dot(llt.solve(ap)), 1e-300);
      const bool dependent = curvature <= kDependentTol * curv_scale;

      // Dual step length: first working-set multiplier driven to zero.
      double t1 = kInf;
      int blocker = -1;
      for (int k = 0; k < static_cast<int>(active.size()); ++k) {
        if (r.size() > k && r[k] > kDependentTol) {
          const double ratio = mu[k] / r[k];
          if (ratio < t1 ||
              (ratio == t1 && blocker >= 0 && active[k] < active[blocker])) {
            t1 = ratio;
            blocker = k;
          }
        }
      }

      const double s_p = ap.dot(u) - rows.b[p];
      const double t2 = dependent ? kInf : -s_p / curvature;

      if (dependent && t1 == kInf) {
        // No primal progress possible and no dual mass to shift: the
        // constraint set is inconsistent.
        sol.status = QPStatus::Infeasible;
        sol.u = u;
        sol.iterations = iter;
        return sol;
      }

      const double t = std::min(t1, t2);
      if (!dependent) u += t * z;
      for (int k = 0; k < static_cast<int>(active.size()); ++k)
        if (r.size() > k) mu[k] -= t * r[k];
      mu_p += t;

      if (t == t2 && !dependent) {
        active.push_back(p);
        mu.push_back(mu_p);
        break;
      }
      // Partial step: drop the blocker and retry.
      active.erase(active.begin() + blocker);
      mu.erase(mu.begin() + blocker);
    }
  }

  // Polish: re-solve the equality-constrained problem on the final
  // working set so the KKT residuals are at round-off.
  if (!active.empty()) {
    const int w = static_cast<int>(active.size());
    Eigen::MatrixXd A(w, m);
    Eigen::VectorXd bw(w);
    for (int k = 0; k < w; ++k) {
      A.row(k) = rows.a[active[k]];
      bw[k] = rows.b[active[k]];
    }
    const Eigen::MatrixXd QinvAt = llt.solve(A.transpose());
    const Eigen::VectorXd lam =
        (A * QinvAt).ldlt().solve(bw - A * problem.u_ref);
    const Eigen::VectorXd u_polished = problem.u_ref + QinvAt * lam;

    bool ok = u_polished.allFinite();
    for (int i = 0; ok && i < n_rows; ++i)
      ok = rows.a[i].dot(u_polished) >= rows.b[i] - 1e-8;
    for (int k = 0; ok && k < w; ++k) ok = lam[k] >= -1e-9;
    if (ok) {
      u = u_polished;
      for (int k = 0; k < w; ++k) mu[k] = std::max(0.0, lam[k]);
    }
  }

  // Report active set in ascending index order.
  std::vector<int> order(active.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return active[x] < active[y]; });
  for (int k : order) {
    sol.active_set.push_back(active[k]);
    sol.multipliers.push_back(mu[k]);
  }
  sol.u = u;
  sol.iterations = iter;
  return sol;
}

}  // namespace singcbf
