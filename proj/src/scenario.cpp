/*!
 * \file scenario.cpp
 */

#include "windplan/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace windplan {

namespace {

using nlohmann::json;

Eigen::Vector3d vec3(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw ScenarioError("scenario: " + what + " must be [x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Eigen::Vector2d vec2(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ScenarioError("scenario: " + what + " must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

State parse_state(const json& j, const std::string& what) {
  if (!j.contains("position_m")) throw ScenarioError("scenario: " + what + " needs position_m");
  const Eigen::Vector3d p = vec3(j.at("position_m"), what + ".position_m");
  const double heading = deg2rad(j.value("heading_deg", 0.0));
  return State(p.x(), p.y(), p.z(), heading);
}

WindSpec parse_wind(const json& j) {
  WindSpec spec;
  const std::string kind = j.value("kind", "uniform");
  if (kind == "uniform") {
    spec.kind = WindSpec::Kind::Uniform;
    if (j.contains("wind_mps")) spec.uniform_wind = vec3(j.at("wind_mps"), "wind.wind_mps");
  } else if (kind == "shear") {
    spec.kind = WindSpec::Kind::Shear;
    const std::string axis = j.value("axis", "y");
    if (axis == "x") {
      spec.shear_axis = HorizontalShearWind::Axis::X;
    } else if (axis == "y") {
      spec.shear_axis = HorizontalShearWind::Axis::Y;
    } else {
      throw ScenarioError("scenario: wind.axis must be 'x' or 'y'");
    }
    spec.shear_boundary = j.value("boundary_m", 0.0);
    spec.shear_magnitude = j.value("magnitude_mps", 0.0);
    if (spec.shear_magnitude < 0.0) throw ScenarioError("scenario: wind.magnitude_mps must be >= 0");
  } else if (kind == "updraft") {
    spec.kind = WindSpec::Kind::Updraft;
    if (j.contains("center_m")) spec.updraft_center = vec2(j.at("center_m"), "wind.center_m");
    spec.updraft_radius = j.value("radius_m", 1.0);
    spec.updraft_strength = j.value("strength_mps", 0.0);
    if (spec.updraft_radius <= 0.0) throw ScenarioError("scenario: wind.radius_m must be > 0");
  } else if (kind == "grid") {
    spec.kind = WindSpec::Kind::Grid;
    if (!j.contains("file")) throw ScenarioError("scenario: wind.kind 'grid' needs a file");
    spec.grid_file = j.at("file").get<std::string>();
  } else {
    throw ScenarioError("scenario: unknown wind kind '" + kind + "'");
  }
  return spec;
}

VehicleModel parse_vehicle(const json& j) {
  VehicleModel m;
  m.mass_kg = j.value("mass_kg", m.mass_kg);
  m.curvature_max = j.value("kappa_max_per_m", m.curvature_max);
  m.thrust_power_coeff = j.value("thrust_power_coefficient", m.thrust_power_coeff);
  m.airspeed = j.value("airspeed_mps", m.airspeed);
  if (j.contains("gamma_ground_max_deg")) m.gamma_ground_max = deg2rad(j.at("gamma_ground_max_deg").get<double>());
  if (j.contains("gamma_air_max_deg")) m.gamma_air_max = deg2rad(j.at("gamma_air_max_deg").get<double>());
  m.drag_n = j.value("drag_n", m.drag_n);
  m.avionics_power_w = j.value("avionics_power_w", m.avionics_power_w);
  if (!m.valid()) throw ScenarioError("scenario: invalid vehicle model");
  return m;
}

}  // namespace

std::unique_ptr<WindField> make_synthetic(const WindSpec& spec) {
  switch (spec.kind) {
    case WindSpec::Kind::Uniform:
      return std::make_unique<UniformWind>(spec.uniform_wind);
    case WindSpec::Kind::Shear:
      return std::make_unique<HorizontalShearWind>(spec.shear_axis, spec.shear_boundary,
                                                   spec.shear_magnitude);
    case WindSpec::Kind::Updraft:
      return std::make_unique<UpdraftWind>(spec.updraft_center, spec.updraft_radius,
                                           spec.updraft_strength);
    default:
      return std::make_unique<GriddedWindField>(load_wind_grid(spec.grid_file));
  }
}

Objective objective_from_string(const std::string& name) {
  if (name == "distance") return Objective::Distance;
  if (name == "time") return Objective::Time;
  if (name == "energy") return Objective::Energy;
  throw ScenarioError("unknown objective '" + name + "' (expected distance|time|energy)");
}

PathFrame frame_from_string(const std::string& name) {
  if (name == "ground") return PathFrame::Ground;
  if (name == "air") return PathFrame::Air;
  throw ScenarioError("unknown path frame '" + name + "' (expected ground|air)");
}

Scenario parse_scenario(const std::string& json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario: JSON parse error: ") + e.what());
  }

  Scenario s;
  s.name = j.value("name", "unnamed");
  if (j.contains("vehicle")) s.vehicle = parse_vehicle(j.at("vehicle"));
  if (j.contains("wind")) s.wind = parse_wind(j.at("wind"));
  if (s.wind.kind == WindSpec::Kind::Grid && s.wind.grid_file.is_relative()) {
    s.wind.grid_file = base_dir / s.wind.grid_file;
  }

  if (j.contains("terrain")) {
    const json& t = j.at("terrain");
    if (!t.contains("file")) throw ScenarioError("scenario: terrain needs a file");
    std::filesystem::path file = t.at("file").get<std::string>();
    if (file.is_relative()) file = base_dir / file;
    s.terrain_file = file;
    s.terrain_clearance = t.value("clearance_m", 0.0);
  }

  if (!j.contains("start") || !j.contains("goal")) {
    throw ScenarioError("scenario: start and goal are required");
  }
  s.start = parse_state(j.at("start"), "start");
  s.goal = parse_state(j.at("goal"), "goal");

  if (!j.contains("bounds")) throw ScenarioError("scenario: bounds are required");
  s.bounds.min = vec3(j.at("bounds").at("min_m"), "bounds.min_m");
  s.bounds.max = vec3(j.at("bounds").at("max_m"), "bounds.max_m");
  if (s.bounds.degenerate()) throw ScenarioError("scenario: bounds are degenerate");
  if (!s.bounds.contains(s.start.position()) || !s.bounds.contains(s.goal.position())) {
    throw ScenarioError("scenario: start and goal must lie inside the bounds");
  }

  s.budget_s = j.value("budget_s", s.budget_s);
  s.max_iterations = j.value("max_iterations", s.max_iterations);
  if (s.budget_s <= 0.0 && s.max_iterations == 0) {
    throw ScenarioError("scenario: needs a positive budget_s or max_iterations");
  }
  s.goal_bias = j.value("goal_bias", s.goal_bias);
  if (s.goal_bias < 0.0 || s.goal_bias >= 1.0) throw ScenarioError("scenario: goal_bias must be in [0, 1)");
  s.step = j.value("integration_step_m", s.step);
  if (s.step <= 0.0) throw ScenarioError("scenario: integration_step_m must be > 0");
  s.rewire_factor = j.value("rewire_factor", s.rewire_factor);

  if (j.contains("objectives")) {
    s.objectives.clear();
    for (const auto& o : j.at("objectives")) s.objectives.push_back(objective_from_string(o.get<std::string>()));
  }
  if (j.contains("frames")) {
    s.frames.clear();
    for (const auto& f : j.at("frames")) s.frames.push_back(frame_from_string(f.get<std::string>()));
  }
  if (s.objectives.empty() || s.frames.empty()) {
    throw ScenarioError("scenario: objectives and frames must not be empty");
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ScenarioError("cannot open scenario file: " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Scenario s = parse_scenario(buffer.str(), file.parent_path());

  // referenced files must be resolvable at load time
  if (s.wind.kind == WindSpec::Kind::Grid && !std::filesystem::exists(s.wind.grid_file)) {
    throw ScenarioError("scenario: wind grid file not found: " + s.wind.grid_file.string());
  }
  if (s.terrain_file && !std::filesystem::exists(*s.terrain_file)) {
    throw ScenarioError("scenario: terrain file not found: " + s.terrain_file->string());
  }
  return s;
}

std::unique_ptr<WindField> build_wind(const Scenario& scenario) {
  return make_synthetic(scenario.wind);
}

std::optional<ElevationMap> build_terrain(const Scenario& scenario) {
  if (!scenario.terrain_file) return std::nullopt;
  return load_elevation(*scenario.terrain_file);
}

PlannerConfig planner_config(const Scenario& scenario, Objective objective, PathFrame frame,
                             uint32_t seed) {
  PlannerConfig config;
  config.budget_s = scenario.budget_s;
  config.max_iterations = scenario.max_iterations;
  config.seed = seed;
  config.bounds = scenario.bounds;
  config.goal_bias = scenario.goal_bias;
  config.rewire_factor = scenario.rewire_factor;
  config.step = scenario.step;
  config.objective = objective;
  config.frame = frame;
  config.terrain_clearance = scenario.terrain_clearance;
  config.air.step = scenario.step;
  return config;
}

}  // namespace windplan
