#include "singcbf/system_model.hpp"

#include <cmath>
#include <sstream>

namespace singcbf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

std::string shape(const Eigen::MatrixXd& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols();
  return os.str();
}

Eigen::VectorXd state_rate(const SystemModel& model, const StateVector& x,
                           const InputVector& u) {
  return model.drift(x) + model.input_matrix(x) * u;
}

}  // namespace

int saturate(Eigen::VectorXd& u, const InputBounds& bounds) {
  require(bounds.lo.size() == u.size() && bounds.hi.size() == u.size(),
          "saturate: bounds size does not match input size");
  int clipped = 0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u[i] < bounds.lo[i]) {
      u[i] = bounds.lo[i];
      ++clipped;
    } else if (u[i] > bounds.hi[i]) {
      u[i] = bounds.hi[i];
      ++clipped;
    }
  }
  return clipped;
}

void SimulatorConfig::validate() const {
  if (!(dt > 0.0)) throw ContractViolation("SimulatorConfig: dt must be > 0");
  if (!(t_end >= dt))
    throw ContractViolation("SimulatorConfig: t_end must be >= dt");
}

Eigen::MatrixXd mapping_matrix(const SystemModel& model, const StateVector& x) {
  require(x.size() == model.n, "mapping_matrix: state length != n");
  require(x.allFinite(), "mapping_matrix: state not finite");
  const Eigen::MatrixXd J = model.task_jacobian(x);
  const Eigen::MatrixXd g = model.input_matrix(x);
  require(J.rows() == model.d && J.cols() == model.n,
          "mapping_matrix: task_jacobian returned " + shape(J) +
              ", expected dxn");
  require(g.rows() == model.n && g.cols() == model.m,
          "mapping_matrix: input_matrix returned " + shape(g) +
              ", expected nxm");
  return J * g;
}

Eigen::VectorXd task_velocity(const SystemModel& model, const StateVector& x,
                              const InputVector& u) {
  require(u.size() == model.m, "task_velocity: input length != m");
  const Eigen::MatrixXd J = model.task_jacobian(x);
  require(J.rows() == model.d && J.cols() == model.n,
          "task_velocity: task_jacobian returned " + shape(J) +
              ", expected dxn");
  return J * model.drift(x) + mapping_matrix(model, x) * u;
}

StateVector step(const SystemModel& model, const StateVector& x,
                 const InputVector& u, const SimulatorConfig& cfg) {
  cfg.validate();
  require(x.size() == model.n, "step: state length != n");
  require(u.size() == model.m, "step: input length != m");

  const double dt = cfg.dt;
  StateVector next;
  switch (cfg.integrator) {
    case Integrator::Euler: {
      next = x + dt * state_rate(model, x, u);
      break;
    }
    case Integrator::RK4: {
      const Eigen::VectorXd k1 = state_rate(model, x, u);
      const Eigen::VectorXd k2 = state_rate(model, x + 0.5 * dt * k1, u);
      const Eigen::VectorXd k3 = state_rate(model, x + 0.5 * dt * k2, u);
      const Eigen::VectorXd k4 = state_rate(model, x + dt * k3, u);
      next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      break;
    }
  }
  if (!next.allFinite())
    throw IntegrationBlowup("step: integration produced non-finite state",
                            next);
  return next;
}

}  // namespace singcbf
