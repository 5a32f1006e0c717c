#include "singcbf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>

#include "singcbf/magnetic_rig.hpp"

namespace singcbf {

namespace {

std::vector<int> input_columns(const TrajectoryLog& log) {
  std::vector<int> cols;
  for (const char* prefix : {"u", "I"}) {
    cols.clear();
    for (int i = 1;; ++i) {
      const int idx = log.column_index(prefix + std::to_string(i));
      if (idx < 0) break;
      cols.push_back(idx);
    }
    if (!cols.empty()) return cols;
  }
  return cols;
}

double max_abs(const TrajectoryLog& log, int col) {
  double m = 0.0;
  for (const auto& row : log.rows) m = std::max(m, std::abs(row[col]));
  return m;
}

}  // namespace

MetricsReport compute_metrics(const TrajectoryLog& log_cbf,
                              const TrajectoryLog* log_nocbf) {
  MetricsReport report;
  if (log_cbf.rows.empty()) throw Error("compute_metrics: empty log");

  const int ex = log_cbf.column_index("ex");
  const int ey = log_cbf.column_index("ey");
  if (ex >= 0 && ey >= 0) {
    double acc = 0.0;
    for (const auto& row : log_cbf.rows)
      acc += row[ex] * row[ex] + row[ey] * row[ey];
    report.rms_position_error = std::sqrt(acc / log_cbf.rows.size());
  }

  const int et = log_cbf.column_index("etheta");
  if (et >= 0) {
    double acc = 0.0;
    for (const auto& row : log_cbf.rows) {
      const double w = wrap_angle(row[et]);
      acc += w * w;
    }
    report.rms_orientation_error = std::sqrt(acc / log_cbf.rows.size());
  }

  const std::vector<int> inputs = input_columns(log_cbf);
  for (int col : inputs) report.max_abs_input.push_back(max_abs(log_cbf, col));

  int h_col = log_cbf.column_index("h");
  if (h_col < 0) h_col = log_cbf.column_index("h_min");
  if (h_col >= 0) {
    double h_min = std::numeric_limits<double>::infinity();
    for (const auto& row : log_cbf.rows) h_min = std::min(h_min, row[h_col]);
    report.min_barrier_value = h_min;
  }

  if (log_nocbf) {
    if (log_nocbf->rows.size() != log_cbf.rows.size())
      throw Error("compute_metrics: logs differ in length");
    const int ta = log_cbf.column_index("t");
    const int tb = log_nocbf->column_index("t");
    for (size_t i = 0; i < log_cbf.rows.size(); ++i)
      if (std::abs(log_cbf.rows[i][ta] - log_nocbf->rows[i][tb]) > 1e-12)
        throw Error("compute_metrics: logs not aligned in time");

    const std::vector<int> inputs_nocbf = input_columns(*log_nocbf);
    if (inputs_nocbf.size() != inputs.size())
      throw Error("compute_metrics: input channel mismatch between logs");
    for (size_t i = 0; i < inputs.size(); ++i) {
      const double denom = report.max_abs_input[i];
      const double numer = max_abs(*log_nocbf, inputs_nocbf[i]);
      report.spike_ratio.push_back(denom > 0.0 ? numer / denom
                                               : std::numeric_limits<double>::infinity());
    }
  }
  return report;
}

std::string metrics_json(const MetricsReport& report) {
  nlohmann::json j;
  j["rms_position_error"] = report.rms_position_error;
  j["rms_orientation_error"] = report.rms_orientation_error;
  j["max_abs_input"] = report.max_abs_input;
  if (!report.spike_ratio.empty()) j["spike_ratio"] = report.spike_ratio;
  j["min_barrier_value"] = report.min_barrier_value;
  j["qp_infeasible_count"] = report.qp_infeasible_count;
  j["wall_time_s"] = report.wall_time_s;
  return j.dump(2) + "\n";
}

MetricsReport metrics_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  MetricsReport r;
  r.rms_position_error = j.value("rms_position_error", 0.0);
  r.rms_orientation_error = j.value("rms_orientation_error", 0.0);
  if (j.contains("max_abs_input"))
    r.max_abs_input = j["max_abs_input"].get<std::vector<double>>();
  if (j.contains("spike_ratio"))
    r.spike_ratio = j["spike_ratio"].get<std::vector<double>>();
  r.min_barrier_value = j.value("min_barrier_value", 0.0);
  r.qp_infeasible_count = j.value("qp_infeasible_count", 0);
  r.wall_time_s = j.value("wall_time_s", 0.0);
  return r;
}

}  // namespace singcbf
