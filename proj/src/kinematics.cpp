/*!
 * \file kinematics.cpp
 */

#include "windplan/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace windplan {

WindTriangleSolution solve_wind_triangle(const Eigen::Vector3d& tangent, const WindVector& wind,
                                         const VehicleModel& model) {
  if (std::fabs(tangent.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("solve_wind_triangle: tangent must be a unit vector");
  }

  WindTriangleSolution sol;
  sol.wind_parallel = wind.dot(tangent);
  sol.wind_perpendicular = (wind - sol.wind_parallel * tangent).norm();

  const double airspeed = model.airspeed;
  if (sol.wind_perpendicular >= airspeed) {
    sol.reason = WindInfeasibility::PerpendicularWindExceedsAirspeed;
    return sol;
  }

  // larger of the two roots, to maximize progress along the path
  sol.tangential_airspeed =
      std::sqrt(std::max(airspeed * airspeed - sol.wind_perpendicular * sol.wind_perpendicular, 0.0));
  sol.ground_speed = sol.tangential_airspeed + sol.wind_parallel;
  if (sol.ground_speed <= 0.0) {
    sol.reason = WindInfeasibility::NoForwardProgress;
    return sol;
  }

  const double va_z = sol.ground_speed * tangent.z() - wind.z();
  const double arg = std::clamp(va_z / airspeed, -1.0, 1.0);
  sol.gamma_air = std::asin(arg);
  if (std::fabs(sol.gamma_air) > model.gamma_air_max) {
    sol.reason = WindInfeasibility::ClimbAngleExceeded;
    return sol;
  }

  sol.feasible = true;
  return sol;
}

bool feasible_state(const State& state, double gamma, const WindField& field,
                    const VehicleModel& model) {
  const double cg = std::cos(gamma);
  const Eigen::Vector3d tangent(cg * std::cos(state.heading), cg * std::sin(state.heading),
                                std::sin(gamma));
  return solve_wind_triangle(tangent, field.sample(state.position()), model).feasible;
}

}  // namespace windplan
