/*!
 * \file air_relative.hpp
 *
 * \brief Baseline air-relative Dubins airplane paths in non-uniform wind: the
 * iterative virtual-goal connection scheme and the constant-variable per-path
 * cost. The ground track is the air path advected by the wind encountered
 * along it.
 */

#ifndef WINDPLAN_AIR_RELATIVE_HPP_
#define WINDPLAN_AIR_RELATIVE_HPP_

#include "windplan/energy.hpp"

namespace windplan {

struct AirRelativeOptions {
  double goal_tolerance = 1.0;  ///< accepted ground-frame endpoint position error [m]
  int max_iterations = 50;
  double damping = 1.0;  ///< fraction of the endpoint error applied to the virtual goal
  double step = 10.0;    ///< drift integration step along the air path [m]
};

/** \brief Air-frame Dubins path whose wind-advected ground track ends at the goal.
 *
 * `air_path` is expressed in the moving air frame (headings and flight path
 * angles are air-relative); `ground_track` holds the advected world positions
 * at the integration step, ending at the simulated ground endpoint.
 */
struct AirRelativePath {
  DubinsAirplanePath air_path;
  State virtual_goal;  ///< air-frame goal the final iteration planned to
  std::vector<Eigen::Vector3d> ground_track;
  bool converged = false;
  int iterations = 0;
  double endpoint_error = 0.0;  ///< ground-frame endpoint position error [m]
};

/** Advect an air path by the wind field; returns world positions at `step` spacing. */
std::vector<Eigen::Vector3d> advect_ground_track(const DubinsAirplanePath& air_path,
                                                 const Eigen::Vector3d& start_position,
                                                 const WindField& field, const VehicleModel& model,
                                                 double step);

/** \brief Iteratively connect two states with an air-relative Dubins airplane path.
 *
 * Plans in the air frame to a virtual goal, simulates the wind drift, and
 * shifts the virtual goal by the endpoint error until the ground endpoint
 * lands within the tolerance. A growing error over three consecutive
 * iterations aborts as non-converged.
 */
AirRelativePath connect_air_relative(const State& start, const State& goal, const WindField& field,
                                     const VehicleModel& model,
                                     const AirRelativeOptions& options = {});

/** \brief Cost of a converged air-relative path.
 *
 * Air-relative variables are constant per segment, so the cost is the sum of
 * segment power times segment time (air length over airspeed) with no
 * incremental wind integration. Non-converged paths cost +inf.
 */
CostReport cost_air_relative(const AirRelativePath& path, const VehicleModel& model,
                             Objective objective);

}  // namespace windplan

#endif  // WINDPLAN_AIR_RELATIVE_HPP_
