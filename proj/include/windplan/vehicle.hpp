/*!
 * \file vehicle.hpp
 *
 * \brief Kinematic and energetic parameters of the fixed-wing vehicle model.
 */

#ifndef WINDPLAN_VEHICLE_HPP_
#define WINDPLAN_VEHICLE_HPP_

#include "windplan/core.hpp"

namespace windplan {

/** \brief Fixed-wing vehicle model.
 *
 * Defaults correspond to a small fixed-wing UAV cruising at a constant
 * airspeed. The ground-relative climb limit is sized at half the air-relative
 * one so that a tailwind equal to the airspeed remains flyable.
 */
struct VehicleModel {
  double mass_kg = 5.0;
  double curvature_max = 0.02;            ///< max path curvature [1/m]
  double thrust_power_coeff = 0.3;        ///< propulsive power coefficient c_T [-]
  double airspeed = 15.0;                 ///< constant airspeed magnitude [m/s]
  double gamma_ground_max = deg2rad(10.0);  ///< ground-relative climb limit [rad]
  double gamma_air_max = deg2rad(20.0);     ///< air-relative climb limit [rad]
  double drag_n = 5.0;                    ///< constant drag [N]
  double avionics_power_w = 60.0;         ///< constant avionics draw [W]
  double gravity = 9.80665;               ///< [m/s^2]

  double turn_radius() const { return 1.0 / curvature_max; }

  bool valid() const {
    const bool positive = mass_kg > 0.0 && curvature_max > 0.0 && thrust_power_coeff > 0.0 &&
                          airspeed > 0.0 && gamma_ground_max > 0.0 && gamma_air_max > 0.0 &&
                          drag_n > 0.0 && avionics_power_w > 0.0 && gravity > 0.0;
    // climb-limit sizing rule: twice the ground limit must fit in the air limit
    return positive && 2.0 * gamma_ground_max <= gamma_air_max + 1e-12;
  }
};

}  // namespace windplan

#endif  // WINDPLAN_VEHICLE_HPP_
