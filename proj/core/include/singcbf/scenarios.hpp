#pragma once

#include <filesystem>
#include <optional>

#include "singcbf/metrics.hpp"
#include "singcbf/obstacles.hpp"
#include "singcbf/scenario_config.hpp"
#include "singcbf/trajectory_log.hpp"

namespace singcbf {

struct RunArtifacts {
  TrajectoryLog log;
  std::optional<TrajectoryLog> log_nocbf;
  MetricsReport metrics;
  std::filesystem::path out_dir;
};

/// Dispatches on cfg.scenario, runs the simulation pipelines and writes
/// every artifact atomically under cfg.output_dir. Deterministic: the same
/// config yields byte-identical CSVs.
RunArtifacts run_scenario(const ScenarioConfig& cfg);

/// Obstacles for the suturing task: the sigma_min field sampled on the
/// configured grid with the theta axis extended by one period on each
/// side (wraparound distances), isosurfaced at the singular-value
/// threshold.
ConfigSpaceObstacles suture_obstacles(const ScenarioConfig& cfg);

/// delta fallback: one scaled grid cell (largest per-axis spacing in
/// unit-cube units).
double effective_delta(const MagneticScenarioConfig& mag, const GridSpec& grid);

/// Fig. 2 style two-panel plot (joint angles, joint velocities).
void emit_arm_plots(const TrajectoryLog& log, const std::filesystem::path& dir,
                    const std::string& stem);
/// Pose-error and min-barrier panels for the suturing run.
void emit_suture_plots(const TrajectoryLog& log,
                       const std::filesystem::path& dir);

}  // namespace singcbf
