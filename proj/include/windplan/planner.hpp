/*!
 * \file planner.hpp
 *
 * \brief Anytime RRT* over the Dubins airplane state space with ground- or
 * air-relative steering, wind-aware motion cost, terrain validation, exact
 * goal connection, and rewiring.
 */

#ifndef WINDPLAN_PLANNER_HPP_
#define WINDPLAN_PLANNER_HPP_

#include <cstdint>
#include <optional>

#include "windplan/air_relative.hpp"
#include "windplan/energy.hpp"
#include "windplan/terrain.hpp"

namespace windplan {

enum class PathFrame { Ground = 0, Air };

std::string to_string(PathFrame frame);

struct PlannerConfig {
  double budget_s = 30.0;       ///< wall-clock budget
  uint64_t max_iterations = 0;  ///< 0 = no iteration cap; set for reproducible runs
  uint32_t seed = 0;
  Box bounds;              ///< sampling volume for positions
  double goal_bias = 0.05;
  double rewire_factor = 1.0;  ///< scales the shrinking-ball rewiring radius
  double step = 10.0;          ///< cost-integration and collision sampling spacing [m]
  Objective objective = Objective::Energy;
  PathFrame frame = PathFrame::Ground;
  double goal_connect_max = 0.0;  ///< max proxy distance for goal connection; <= 0 means always
  double terrain_clearance = 0.0;
  bool stop_on_first_solution = false;
  AirRelativeOptions air;  ///< used by the air-relative frame
};

struct BestCostSample {
  double time_s = 0.0;
  double cost = 0.0;
};

struct PlanMetrics {
  size_t graph_states = 0;  ///< retained tree nodes (rejected samples not counted)
  size_t iterations = 0;
  double t_first_solution_s = std::numeric_limits<double>::quiet_NaN();
  double planning_time_s = 0.0;
  double flight_time_s = std::numeric_limits<double>::quiet_NaN();
  double energy_j = std::numeric_limits<double>::quiet_NaN();
  double length_m = std::numeric_limits<double>::quiet_NaN();
  double objective_value = std::numeric_limits<double>::infinity();
  bool success = false;
  std::vector<BestCostSample> best_cost_trace;  ///< recorded whenever the best cost improves
};

/** One motion of the returned solution, with re-derived geometry and cost. */
struct SolutionEdge {
  State from;
  State to;
  DubinsAirplanePath geometry;          ///< ground-frame path, or the air-frame path for air edges
  std::optional<AirRelativePath> air;   ///< set for air-relative edges
  CostReport cost;
};

struct PlanResult {
  bool success = false;
  std::vector<State> states;  ///< start ... goal when successful
  std::vector<SolutionEdge> edges;
  PlanMetrics metrics;
};

/** Exact steering between two states (extension, rewiring and goal connection all use it). */
inline DubinsAirplanePath steer(const State& from, const State& to, const VehicleModel& model) {
  return dubins_airplane_connect(from, to, model);
}

class Planner {
 public:
  Planner(const WindField& field, const ElevationMap* terrain, const VehicleModel& model,
          PlannerConfig config);

  /** Anytime search; returns the best path found within the budget (or a no-solution result). */
  PlanResult plan(const State& start, const State& goal);

  /** Proxy metric used for nearest/near queries: ||dp|| + r_turn * wrapped heading gap. */
  double proxy_distance(const State& a, const State& b) const;

 private:
  const WindField& field_;
  const ElevationMap* terrain_;
  VehicleModel model_;
  PlannerConfig config_;
  double rewire_gamma_ = 0.0;
};

struct ValidationReport {
  bool feasible = false;
  double objective_value = std::numeric_limits<double>::infinity();
};

/** \brief Independent post-hoc validation of a returned plan.
 *
 * Re-derives every motion from its endpoint states, re-runs collision checking
 * and cost integration, and sums the objective.
 */
ValidationReport validate_plan(const PlanResult& result, const WindField& field,
                               const ElevationMap* terrain, const VehicleModel& model,
                               const PlannerConfig& config);

}  // namespace windplan

#endif  // WINDPLAN_PLANNER_HPP_
