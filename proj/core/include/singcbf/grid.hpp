#pragma once

#include <Eigen/Core>
#include <vector>

#include "singcbf/errors.hpp"

namespace singcbf {

struct AxisSpec {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;
};

/// Regular grid with inclusive per-axis linspaces. Traversal is row-major
/// with the last axis fastest, which fixes the node order everywhere a
/// grid is enumerated or serialized.
struct GridSpec {
  std::vector<AxisSpec> axes;

  int dims() const { return static_cast<int>(axes.size()); }

  long total_nodes() const {
    long n = 1;
    for (const auto& a : axes) n *= a.count;
    return n;
  }

  double coord(int axis, int i) const {
    const AxisSpec& a = axes[axis];
    return a.lo + (a.hi - a.lo) * static_cast<double>(i) /
                      static_cast<double>(a.count - 1);
  }

  double spacing(int axis) const {
    const AxisSpec& a = axes[axis];
    return (a.hi - a.lo) / static_cast<double>(a.count - 1);
  }

  /// Multi-index of flat node `idx` under row-major, last-axis-fastest
  /// order.
  std::vector<int> unflatten(long idx) const {
    std::vector<int> mi(axes.size());
    for (int a = dims() - 1; a >= 0; --a) {
      mi[a] = static_cast<int>(idx % axes[a].count);
      idx /= axes[a].count;
    }
    return mi;
  }

  Eigen::VectorXd node(const std::vector<int>& mi) const {
    Eigen::VectorXd x(dims());
    for (int a = 0; a < dims(); ++a) x[a] = coord(a, mi[a]);
    return x;
  }

  void validate() const {
    if (axes.empty()) throw ContractViolation("GridSpec: no axes");
    for (const auto& a : axes) {
      if (a.count < 2)
        throw ContractViolation("GridSpec: axis count must be >= 2");
      if (!(a.hi > a.lo))
        throw ContractViolation("GridSpec: axis hi must exceed lo");
    }
  }
};

}  // namespace singcbf
