#include "singcbf/scenario_config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace singcbf {

namespace {

using nlohmann::json;

struct Validator {
  std::vector<std::string> issues;

  void fail(const std::string& msg) { issues.push_back(msg); }

  void check_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& known) {
    if (!obj.is_object()) {
      fail(path + ": expected an object");
      return;
    }
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!known.count(it.key()))
        fail(path + ": unknown key \"" + it.key() + "\"");
  }

  double num(const json& obj, const std::string& path, const std::string& key,
             double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) {
      fail(path + "." + key + ": expected a number");
      return fallback;
    }
    return obj[key].get<double>();
  }

  double positive(const json& obj, const std::string& path,
                  const std::string& key, double fallback) {
    const double v = num(obj, path, key, fallback);
    if (!(v > 0.0)) fail(path + "." + key + ": must be > 0");
    return v;
  }

  bool boolean(const json& obj, const std::string& path, const std::string& key,
               bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean()) {
      fail(path + "." + key + ": expected a boolean");
      return fallback;
    }
    return obj[key].get<bool>();
  }

  std::string str(const json& obj, const std::string& path,
                  const std::string& key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_string()) {
      fail(path + "." + key + ": expected a string");
      return fallback;
    }
    return obj[key].get<std::string>();
  }

  std::vector<double> num_array(const json& obj, const std::string& path,
                                const std::string& key, size_t size,
                                std::vector<double> fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_array() || (size > 0 && obj[key].size() != size)) {
      fail(path + "." + key + ": expected an array of " +
           std::to_string(size) + " numbers");
      return fallback;
    }
    std::vector<double> out;
    for (const auto& v : obj[key]) {
      if (!v.is_number()) {
        fail(path + "." + key + ": expected numbers");
        return fallback;
      }
      out.push_back(v.get<double>());
    }
    return out;
  }
};

AxisSpec axis_from(Validator& v, const json& obj, const std::string& path,
                   const std::string& key, AxisSpec fallback) {
  if (!obj.contains(key)) return fallback;
  const auto arr = v.num_array(obj, path, key, 3,
                               {fallback.lo, fallback.hi,
                                static_cast<double>(fallback.count)});
  AxisSpec axis{arr[0], arr[1], static_cast<int>(std::lround(arr[2]))};
  if (axis.count < 2) v.fail(path + "." + key + ": count must be >= 2");
  if (!(axis.hi > axis.lo)) v.fail(path + "." + key + ": hi must exceed lo");
  return axis;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SuturePath default_suture_path() {
  // Stitch across a 10 mm incision line: three penetration points with
  // dips between them, constant reference heading.
  const double theta_ref = 2.8;
  SuturePath path;
  path.speed = 1.5e-3;
  path.waypoints = {
      {-0.008, -0.004, theta_ref}, {-0.005, 0.000, theta_ref},
      {-0.0025, -0.003, theta_ref}, {0.000, 0.000, theta_ref},
      {0.0025, -0.003, theta_ref}, {0.005, 0.000, theta_ref},
      {0.008, -0.004, theta_ref}};
  return path;
}

GridSpec default_magnetic_grid(double workspace_radius) {
  GridSpec grid;
  grid.axes = {AxisSpec{-workspace_radius, workspace_radius, 40},
               AxisSpec{-workspace_radius, workspace_radius, 40},
               AxisSpec{0.0, kTwoPi, 60}};
  return grid;
}

}  // namespace

std::string scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::ArmSpike: return "arm_spike";
    case ScenarioKind::MagneticSuture: return "magnetic_suture";
    case ScenarioKind::SingularMap: return "singular_map";
  }
  return "?";
}

ScenarioConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("JSON parse error: ") + e.what()});
  }

  Validator v;
  ScenarioConfig cfg;

  v.check_keys(root, "config",
               {"scenario", "seed", "output_dir", "compare_no_cbf", "sim",
                "cbf", "arm", "magnetic"});

  const std::string name = v.str(root, "config", "scenario", "");
  if (name == "arm_spike") cfg.scenario = ScenarioKind::ArmSpike;
  else if (name == "magnetic_suture") cfg.scenario = ScenarioKind::MagneticSuture;
  else if (name == "singular_map") cfg.scenario = ScenarioKind::SingularMap;
  else
    v.fail("config.scenario: expected arm_spike | magnetic_suture | "
           "singular_map, got \"" + name + "\"");

  cfg.seed = static_cast<unsigned long>(
      v.num(root, "config", "seed", 1.0));
  cfg.output_dir = v.str(root, "config", "output_dir", "out");
  cfg.compare_no_cbf = v.boolean(root, "config", "compare_no_cbf",
                                 cfg.scenario == ScenarioKind::ArmSpike);

  const bool is_suture = cfg.scenario == ScenarioKind::MagneticSuture;

  // Simulation block.
  {
    const json sim = root.value("sim", json::object());
    v.check_keys(sim, "sim", {"dt", "t_end", "integrator"});
    cfg.sim.dt = v.positive(sim, "sim", "dt", 1e-3);
    cfg.sim.t_end = v.num(sim, "sim", "t_end", 0.0);  // <= 0: per-scenario
    const std::string integ = v.str(sim, "sim", "integrator", "rk4");
    if (integ == "rk4") cfg.sim.integrator = Integrator::RK4;
    else if (integ == "euler") cfg.sim.integrator = Integrator::Euler;
    else v.fail("sim.integrator: expected rk4 | euler");
  }

  // CBF block; suture defaults to the quadratic class-K.
  {
    const json cbf = root.value("cbf", json::object());
    v.check_keys(cbf, "cbf", {"enabled", "class_k", "gamma", "epsilon"});
    cfg.cbf_enabled = v.boolean(cbf, "cbf", "enabled", true);
    const std::string kind =
        v.str(cbf, "cbf", "class_k", is_suture ? "quadratic" : "linear");
    const double gamma =
        v.positive(cbf, "cbf", "gamma", is_suture ? 5.0 : 1.0);
    if (kind == "linear") cfg.alpha = ClassKFunction::linear(gamma);
    else if (kind == "quadratic") cfg.alpha = ClassKFunction::quadratic(gamma);
    else v.fail("cbf.class_k: expected linear | quadratic");
    cfg.epsilon = v.num(cbf, "cbf", "epsilon", 0.1);
    if (!(cfg.epsilon > 0.0)) v.fail("cbf.epsilon: must be > 0");
  }

  // Arm block.
  {
    const json arm = root.value("arm", json::object());
    v.check_keys(arm, "arm",
                 {"l1", "l2", "kp", "q0", "waypoints", "switch_times"});
    cfg.arm_params.l1 = v.positive(arm, "arm", "l1", 1.0);
    cfg.arm_params.l2 = v.positive(arm, "arm", "l2", 1.0);
    cfg.arm_params.kp = v.positive(arm, "arm", "kp", 2.0);
    cfg.arm_params.epsilon = cfg.epsilon;
    const auto q0 = v.num_array(arm, "arm", "q0", 2,
                                {std::numbers::pi / 4.0, std::numbers::pi / 2.0});
    cfg.arm_q0 = {q0[0], q0[1]};

    cfg.arm_scenario.cbf_enabled = cfg.cbf_enabled;
    cfg.arm_scenario.waypoints = {
        {std::numbers::sqrt2, std::numbers::sqrt2}, {0.5, 1.2}};
    cfg.arm_scenario.switch_times = {5.0};
    if (arm.contains("waypoints")) {
      cfg.arm_scenario.waypoints.clear();
      if (!arm["waypoints"].is_array() || arm["waypoints"].empty())
        v.fail("arm.waypoints: expected a non-empty array of [x, y] pairs");
      else
        for (const auto& wp : arm["waypoints"]) {
          if (!wp.is_array() || wp.size() != 2 || !wp[0].is_number() ||
              !wp[1].is_number()) {
            v.fail("arm.waypoints: each entry must be [x, y]");
            break;
          }
          cfg.arm_scenario.waypoints.emplace_back(wp[0].get<double>(),
                                                  wp[1].get<double>());
        }
    }
    if (arm.contains("switch_times")) {
      cfg.arm_scenario.switch_times.clear();
      if (!arm["switch_times"].is_array())
        v.fail("arm.switch_times: expected an array of times");
      else
        for (const auto& t : arm["switch_times"]) {
          if (!t.is_number()) {
            v.fail("arm.switch_times: expected numbers");
            break;
          }
          cfg.arm_scenario.switch_times.push_back(t.get<double>());
        }
    }
  }

  // Magnetic block.
  {
    const json mag = root.value("magnetic", json::object());
    v.check_keys(mag, "magnetic",
                 {"coil_ring_radius", "coil_moment", "workspace_diameter",
                  "mu0_over_4pi", "agent", "w_diag", "gamma_reg", "delta",
                  "k_track", "current_limit", "path", "grid", "threshold",
                  "obstacles"});
    const double ring = v.positive(mag, "magnetic", "coil_ring_radius", 0.040);
    const double moment = v.positive(mag, "magnetic", "coil_moment", 5.0);
    const double wsd =
        v.positive(mag, "magnetic", "workspace_diameter", 0.035);
    cfg.magnetic.coils = CoilConfig::standard_ring(ring, moment, wsd);
    cfg.magnetic.coils.mu0_over_4pi =
        v.positive(mag, "magnetic", "mu0_over_4pi", 1e-7);

    const json agent = mag.value("agent", json::object());
    v.check_keys(agent, "magnetic.agent", {"m0", "c_t", "c_r"});
    cfg.magnetic.agent.m0 = v.positive(agent, "magnetic.agent", "m0", 5e-3);
    cfg.magnetic.agent.c_t = v.positive(agent, "magnetic.agent", "c_t", 1e-3);
    cfg.magnetic.agent.c_r = v.positive(agent, "magnetic.agent", "c_r", 1e-6);

    const auto w = v.num_array(mag, "magnetic", "w_diag", 3, {100.0, 100.0, 1.0});
    cfg.magnetic.w_diag = Eigen::Vector3d(w[0], w[1], w[2]);
    for (int i = 0; i < 3; ++i)
      if (!(cfg.magnetic.w_diag[i] > 0.0))
        v.fail("magnetic.w_diag: entries must be > 0");
    cfg.magnetic.gamma_reg = v.positive(mag, "magnetic", "gamma_reg", 1e-6);
    cfg.magnetic.delta = v.num(mag, "magnetic", "delta", 0.0);
    const auto kt = v.num_array(mag, "magnetic", "k_track", 3, {40.0, 40.0, 40.0});
    cfg.magnetic.k_track = Eigen::Vector3d(kt[0], kt[1], kt[2]);
    cfg.magnetic.current_limit =
        v.positive(mag, "magnetic", "current_limit", 4.0);

    cfg.magnetic.path = default_suture_path();
    const json path = mag.value("path", json::object());
    v.check_keys(path, "magnetic.path", {"speed", "waypoints"});
    cfg.magnetic.path.speed =
        v.positive(path, "magnetic.path", "speed", cfg.magnetic.path.speed);
    if (path.contains("waypoints")) {
      cfg.magnetic.path.waypoints.clear();
      if (!path["waypoints"].is_array() || path["waypoints"].size() < 2)
        v.fail("magnetic.path.waypoints: expected >= 2 entries of [x, y, theta]");
      else
        for (const auto& wp : path["waypoints"]) {
          if (!wp.is_array() || wp.size() != 3) {
            v.fail("magnetic.path.waypoints: each entry must be [x, y, theta]");
            break;
          }
          cfg.magnetic.path.waypoints.emplace_back(
              wp[0].get<double>(), wp[1].get<double>(), wp[2].get<double>());
        }
    }

    cfg.magnetic.grid = default_magnetic_grid(cfg.magnetic.coils.workspace_radius);
    const json grid = mag.value("grid", json::object());
    v.check_keys(grid, "magnetic.grid", {"x", "y", "theta"});
    cfg.magnetic.grid.axes[0] =
        axis_from(v, grid, "magnetic.grid", "x", cfg.magnetic.grid.axes[0]);
    cfg.magnetic.grid.axes[1] =
        axis_from(v, grid, "magnetic.grid", "y", cfg.magnetic.grid.axes[1]);
    cfg.magnetic.grid.axes[2] =
        axis_from(v, grid, "magnetic.grid", "theta", cfg.magnetic.grid.axes[2]);

    cfg.magnetic.threshold = v.positive(mag, "magnetic", "threshold", 12.0);

    const json obs = mag.value("obstacles", json::object());
    v.check_keys(obs, "magnetic.obstacles", {"source", "grid_csv"});
    cfg.magnetic.obstacle_source =
        v.str(obs, "magnetic.obstacles", "source", "compute");
    if (cfg.magnetic.obstacle_source != "compute" &&
        cfg.magnetic.obstacle_source != "grid_csv")
      v.fail("magnetic.obstacles.source: expected compute | grid_csv");
    cfg.magnetic.grid_csv = v.str(obs, "magnetic.obstacles", "grid_csv", "");
    if (cfg.magnetic.obstacle_source == "grid_csv") {
      if (cfg.magnetic.grid_csv.empty())
        v.fail("magnetic.obstacles.grid_csv: required when source is grid_csv");
      else if (!std::filesystem::exists(cfg.magnetic.grid_csv))
        v.fail("magnetic.obstacles.grid_csv: file does not exist: " +
               cfg.magnetic.grid_csv);
    }
  }

  // Per-scenario default horizon.
  if (cfg.sim.t_end <= 0.0) {
    switch (cfg.scenario) {
      case ScenarioKind::ArmSpike:
        cfg.sim.t_end = 10.0;
        break;
      case ScenarioKind::MagneticSuture:
        cfg.sim.t_end = cfg.magnetic.path.duration() + 3.0;
        break;
      case ScenarioKind::SingularMap:
        cfg.sim.t_end = 1.0;  // unused
        break;
    }
  }
  if (!(cfg.sim.t_end >= cfg.sim.dt)) v.fail("sim.t_end: must be >= sim.dt");

  // Cross-checks that need a complete object.
  if (v.issues.empty()) {
    try {
      cfg.arm_params.validate();
      if (cfg.scenario == ScenarioKind::ArmSpike)
        cfg.arm_scenario.validate(cfg.arm_params);
      cfg.magnetic.coils.validate();
      cfg.magnetic.agent.validate();
      if (cfg.scenario == ScenarioKind::MagneticSuture)
        cfg.magnetic.path.validate(cfg.magnetic.coils);
      cfg.magnetic.grid.validate();
    } catch (const ConfigError& e) {
      for (const auto& issue : e.issues()) v.fail(issue);
    } catch (const Error& e) {
      v.fail(e.what());
    }
  }

  if (!v.issues.empty()) throw ConfigError(v.issues);
  return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError({"cannot open config file: " + path});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace singcbf
