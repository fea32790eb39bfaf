/*!
 * \file kinematics.hpp
 *
 * \brief Wind-triangle resolution along a ground-relative path direction:
 * ground speed, tangential airspeed, air-relative flight path angle, and the
 * wind-feasibility verdict.
 */

#ifndef WINDPLAN_KINEMATICS_HPP_
#define WINDPLAN_KINEMATICS_HPP_

#include "windplan/vehicle.hpp"
#include "windplan/wind_field.hpp"

namespace windplan {

enum class WindInfeasibility {
  None = 0,
  PerpendicularWindExceedsAirspeed,  ///< no real root for the tangential airspeed
  NoForwardProgress,                 ///< ground speed would be <= 0
  ClimbAngleExceeded,                ///< |gamma_air| beyond the vehicle limit
};

struct WindTriangleSolution {
  bool feasible = false;
  WindInfeasibility reason = WindInfeasibility::None;
  double ground_speed = 0.0;         ///< V_G along the path tangent [m/s]
  double tangential_airspeed = 0.0;  ///< airspeed component along the tangent [m/s]
  double wind_parallel = 0.0;        ///< signed wind component along the tangent [m/s]
  double wind_perpendicular = 0.0;   ///< wind magnitude normal to the tangent [m/s]
  double gamma_air = 0.0;            ///< air-relative flight path angle [rad]
};

/** \brief Resolve the wind triangle for a unit path tangent.
 *
 * The larger ground-speed root is taken. Infeasible when the perpendicular
 * wind reaches the airspeed, when no forward progress is possible, or when the
 * air-relative flight path angle leaves the vehicle limit (strict tests on the
 * first two).
 */
WindTriangleSolution solve_wind_triangle(const Eigen::Vector3d& tangent, const WindVector& wind,
                                         const VehicleModel& model);

/** Wind feasibility of a directed state; tangent built from heading and gamma. */
bool feasible_state(const State& state, double gamma, const WindField& field,
                    const VehicleModel& model);

inline bool feasible_state(const State& state, const WindField& field, const VehicleModel& model) {
  return feasible_state(state, 0.0, field, model);
}

}  // namespace windplan

#endif  // WINDPLAN_KINEMATICS_HPP_
