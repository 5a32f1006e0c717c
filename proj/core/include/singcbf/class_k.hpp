#pragma once

#include "singcbf/errors.hpp"

namespace singcbf {

/// Extended class-K function used in the barrier condition hdot >= -alpha(h).
/// Linear:    alpha(h) = gamma * h
/// Quadratic: alpha(h) = gamma * h * |h|   (signed square, so alpha stays
/// strictly increasing for h < 0)
struct ClassKFunction {
  enum class Kind { Linear, Quadratic };

  Kind kind = Kind::Linear;
  double gamma = 1.0;

  static ClassKFunction linear(double gamma) {
    check(gamma);
    return {Kind::Linear, gamma};
  }
  static ClassKFunction quadratic(double gamma) {
    check(gamma);
    return {Kind::Quadratic, gamma};
  }

 private:
  static void check(double gamma) {
    if (!(gamma > 0.0))
      throw ContractViolation("ClassKFunction: gamma must be > 0");
  }
};

double class_k_eval(const ClassKFunction& alpha, double h);

}  // namespace singcbf
