#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace singcbf {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An API precondition was violated (dimension mismatch, non-symmetric
/// input, and similar caller bugs).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (e.g. a field
/// query on top of a dipole source).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closed form was requested for parameters it does not cover.
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue gradient requested at a repeated eigenvalue.
class NondifferentiablePoint : public Error {
 public:
  using Error::Error;
};

/// The QP cost matrix lost positive definiteness; the filter itself is at
/// a singularity.
class SingularCost : public Error {
 public:
  using Error::Error;
};

/// Integration produced a non-finite state. Carries the offending state.
class IntegrationBlowup : public Error {
 public:
  IntegrationBlowup(const std::string& what, Eigen::VectorXd state)
      : Error(what), offending_state(std::move(state)) {}

  Eigen::VectorXd offending_state;
};

/// Configuration rejected at load time. Carries every issue found, not
/// just the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> issues)
      : Error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string all = "invalid configuration:";
    for (const auto& s : issues) all += "\n  - " + s;
    return all;
  }

  std::vector<std::string> issues_;
};

}  // namespace singcbf
