#pragma once

#include <string>
#include <vector>

#include "singcbf/grid.hpp"
#include "singcbf/system_model.hpp"

namespace singcbf {

struct SingularitySample {
  StateVector state;
  double sigma_min = 0.0;
};

/// Evaluates the smallest singular value of phi(x) at every grid node and
/// returns the nodes below the threshold, in deterministic traversal
/// order (row-major, last axis fastest).
std::vector<SingularitySample> sample_singular_set(const SystemModel& model,
                                                   const GridSpec& grid,
                                                   double threshold);

/// Point-cloud CSV: header `x1,...,xn,sigma_min`, one row per sample,
/// 9 significant digits.
std::string singular_set_csv(const std::vector<SingularitySample>& samples,
                             int state_dims);

}  // namespace singcbf
