#pragma once

#include <string>

#include "singcbf/class_k.hpp"
#include "singcbf/grid.hpp"
#include "singcbf/magnetic_rig.hpp"
#include "singcbf/planar_arm.hpp"
#include "singcbf/system_model.hpp"

namespace singcbf {

enum class ScenarioKind { ArmSpike, MagneticSuture, SingularMap };

struct MagneticScenarioConfig {
  CoilConfig coils = CoilConfig::standard_ring();
  AgentParams agent;
  Eigen::Vector3d w_diag{100.0, 100.0, 1.0};
  double gamma_reg = 1e-6;
  double delta = 0.0;  // <= 0 picks one scaled grid cell
  Eigen::Vector3d k_track{40.0, 40.0, 40.0};
  double current_limit = 4.0;
  SuturePath path;
  GridSpec grid;
  double threshold = 0.0;  // populated by defaults
  std::string obstacle_source = "compute";  // compute | grid_csv
  std::string grid_csv;
};

/// Fully validated scenario description. Loading rejects unknown keys and
/// reports every violation at once, with the offending key named.
struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::ArmSpike;
  unsigned long seed = 1;
  std::string output_dir = "out";
  bool compare_no_cbf = true;

  SimulatorConfig sim;
  bool cbf_enabled = true;
  ClassKFunction alpha = ClassKFunction::linear(1.0);
  double epsilon = 0.1;

  ArmParameters arm_params;
  ArmState arm_q0{std::numbers::pi / 4.0, std::numbers::pi / 2.0};
  ArmScenario arm_scenario;

  MagneticScenarioConfig magnetic;
};

ScenarioConfig parse_config(const std::string& path);
/// Same as parse_config but from text (JSON with // comments allowed).
ScenarioConfig parse_config_text(const std::string& text);

std::string scenario_name(ScenarioKind kind);

}  // namespace singcbf
