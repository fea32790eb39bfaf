/*!
 * \file scenario.hpp
 *
 * \brief Benchmark scenario definitions: vehicle, wind field, optional
 * terrain, endpoints, sampling bounds and planning budgets, loaded from JSON
 * scenario files.
 */

#ifndef WINDPLAN_SCENARIO_HPP_
#define WINDPLAN_SCENARIO_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "windplan/planner.hpp"

namespace windplan {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Parameters for one of the synthetic wind fields, or a gridded field on disk. */
struct WindSpec {
  enum class Kind { Uniform, Shear, Updraft, Grid };

  Kind kind = Kind::Uniform;
  Eigen::Vector3d uniform_wind = Eigen::Vector3d::Zero();
  HorizontalShearWind::Axis shear_axis = HorizontalShearWind::Axis::Y;
  double shear_boundary = 0.0;
  double shear_magnitude = 0.0;
  Eigen::Vector2d updraft_center = Eigen::Vector2d::Zero();
  double updraft_radius = 1.0;
  double updraft_strength = 0.0;
  std::filesystem::path grid_file;
};

/** Construct the wind field described by a spec (grid kind loads its file). */
std::unique_ptr<WindField> make_synthetic(const WindSpec& spec);

struct Scenario {
  std::string name;
  VehicleModel vehicle;
  WindSpec wind;
  std::optional<std::filesystem::path> terrain_file;
  double terrain_clearance = 0.0;
  State start;
  State goal;
  Box bounds;
  double budget_s = 30.0;
  uint64_t max_iterations = 0;
  double goal_bias = 0.05;
  double step = 10.0;
  double rewire_factor = 1.0;
  std::vector<Objective> objectives{Objective::Distance, Objective::Time, Objective::Energy};
  std::vector<PathFrame> frames{PathFrame::Ground};
};

/** Load and validate a scenario file; relative file references resolve against its directory. */
Scenario load_scenario(const std::filesystem::path& file);
Scenario parse_scenario(const std::string& json_text, const std::filesystem::path& base_dir);

std::unique_ptr<WindField> build_wind(const Scenario& scenario);
std::optional<ElevationMap> build_terrain(const Scenario& scenario);

/** Planner configuration for one (objective, frame, seed) run of a scenario. */
PlannerConfig planner_config(const Scenario& scenario, Objective objective, PathFrame frame,
                             uint32_t seed);

Objective objective_from_string(const std::string& name);
PathFrame frame_from_string(const std::string& name);

}  // namespace windplan

#endif  // WINDPLAN_SCENARIO_HPP_
