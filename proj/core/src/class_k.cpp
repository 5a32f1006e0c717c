#include "singcbf/class_k.hpp"

#include <cmath>

namespace singcbf {

double class_k_eval(const ClassKFunction& alpha, double h) {
  switch (alpha.kind) {
    case ClassKFunction::Kind::Linear:
      return alpha.gamma * h;
    case ClassKFunction::Kind::Quadratic:
      return alpha.gamma * h * std::abs(h);
  }
  return 0.0;  // unreachable
}

}  // namespace singcbf
