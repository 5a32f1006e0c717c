#pragma once

#include <string>
#include <vector>

#include "singcbf/trajectory_log.hpp"

namespace singcbf {

struct MetricsReport {
  double rms_position_error = 0.0;     // m
  double rms_orientation_error = 0.0;  // rad, 0 when no etheta column
  std::vector<double> max_abs_input;   // per input channel
  std::vector<double> spike_ratio;     // no-CBF max / CBF max, per channel;
                                       // empty when only one run exists
  double min_barrier_value = 0.0;
  int qp_infeasible_count = 0;
  double wall_time_s = 0.0;
};

/// Metrics over a run, plus per-channel spike ratios when the matching
/// no-CBF log is supplied. Input channels are the columns named u1..uN or
/// I1..IN; position error comes from ex/ey, orientation error from etheta
/// (wrapped to (-pi, pi] before squaring), barrier from h or h_min.
/// Throws when the two logs are not aligned in time.
MetricsReport compute_metrics(const TrajectoryLog& log_cbf,
                              const TrajectoryLog* log_nocbf = nullptr);

std::string metrics_json(const MetricsReport& report);
MetricsReport metrics_from_json(const std::string& text);

}  // namespace singcbf
