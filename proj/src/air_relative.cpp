/*!
 * \file air_relative.cpp
 */

#include "windplan/air_relative.hpp"

#include <cmath>
#include <limits>

namespace windplan {

std::vector<Eigen::Vector3d> advect_ground_track(const DubinsAirplanePath& air_path,
                                                 const Eigen::Vector3d& start_position,
                                                 const WindField& field, const VehicleModel& model,
                                                 double step) {
  std::vector<Eigen::Vector3d> track;
  const double total = air_path.length();
  const auto steps = (total > 0.0) ? static_cast<size_t>(std::ceil(total / step - 1e-9)) : 0;
  track.reserve(steps + 1);

  Eigen::Vector3d ground = start_position;
  track.push_back(ground);
  const Eigen::Vector3d air_origin = air_path.start().position();
  double s = 0.0;
  Eigen::Vector3d air_prev = air_origin;
  for (size_t i = 0; i < steps; ++i) {
    const double ds = std::min(step, total - s);
    // wind sampled at the vehicle's world position, drift accumulated per step
    const Eigen::Vector3d wind = field.sample(ground);
    const Eigen::Vector3d air_next = air_path.state_at(s + ds).position();
    const double dt = ds / model.airspeed;
    ground += (air_next - air_prev) + wind * dt;
    track.push_back(ground);
    air_prev = air_next;
    s += ds;
  }
  return track;
}

AirRelativePath connect_air_relative(const State& start, const State& goal, const WindField& field,
                                     const VehicleModel& model, const AirRelativeOptions& options) {
  AirRelativePath result;
  const Eigen::Vector3d goal_position = goal.position();

  State virtual_goal = goal;
  double previous_error = std::numeric_limits<double>::infinity();
  int growth_streak = 0;

  for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
    result.iterations = iteration;
    result.air_path =
        dubins_airplane_connect(start, virtual_goal, model.curvature_max, model.gamma_air_max);
    result.ground_track =
        advect_ground_track(result.air_path, start.position(), field, model, options.step);
    const Eigen::Vector3d error_vec = result.ground_track.back() - goal_position;
    result.endpoint_error = error_vec.norm();
    result.virtual_goal = virtual_goal;

    if (result.endpoint_error < options.goal_tolerance) {
      result.converged = true;
      return result;
    }

    growth_streak = (result.endpoint_error > previous_error) ? growth_streak + 1 : 0;
    if (growth_streak >= 3) break;  // diverging
    previous_error = result.endpoint_error;

    virtual_goal.set_position(virtual_goal.position() - options.damping * error_vec);
  }

  result.converged = false;
  return result;
}

CostReport cost_air_relative(const AirRelativePath& path, const VehicleModel& model,
                             Objective objective) {
  CostReport report;
  report.length = path.air_path.length();

  if (!path.converged) {
    report.feasible = false;
    report.objective_value = std::numeric_limits<double>::infinity();
    return report;
  }

  if (objective == Objective::Distance) {
    report.objective_value = report.length;
    report.flight_time = std::numeric_limits<double>::quiet_NaN();
    report.energy = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  for (const PathSegment& segment : path.air_path.segments()) {
    const double segment_time = segment.length3d() / model.airspeed;
    report.flight_time += segment_time;
    report.energy += power(segment.gamma, model) * segment_time;
  }
  report.objective_value = (objective == Objective::Time) ? report.flight_time : report.energy;
  return report;
}

}  // namespace windplan
