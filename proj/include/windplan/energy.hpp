/*!
 * \file energy.hpp
 *
 * \brief Thrust/power model and the three cost objectives (distance, time,
 * energy), evaluated by Euler forward integration along fixed-length path
 * segments. Wind-infeasible motions get infinite cost.
 */

#ifndef WINDPLAN_ENERGY_HPP_
#define WINDPLAN_ENERGY_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "windplan/dubins_airplane.hpp"
#include "windplan/kinematics.hpp"

namespace windplan {

enum class Objective { Distance = 0, Time, Energy };

std::string to_string(Objective objective);

/** One row of the optional integration trace. */
struct TraceSample {
  double s = 0.0;
  State state;
  WindVector wind = WindVector::Zero();
  double ground_speed = 0.0;
  double gamma_air = 0.0;
  double power = 0.0;
  double cum_time = 0.0;
  double cum_energy = 0.0;
};

struct CostReport {
  double objective_value = 0.0;  ///< J, s or m depending on the objective; +inf when infeasible
  double flight_time = 0.0;      ///< [s]
  double energy = 0.0;           ///< [J]
  double length = 0.0;           ///< [m]
  bool feasible = true;
  std::vector<TraceSample> trace;  ///< filled only when requested
};

/** Required thrust in static longitudinal equilibrium, clamped at zero for steep descent. */
double thrust(double gamma_air, const VehicleModel& model);

/** Electrical power draw: avionics plus propulsive power for the required thrust. */
double power(double gamma_air, const VehicleModel& model);

/** \brief Integrate the cost of a path through a wind field.
 *
 * Wind is sampled once per fixed-length segment at the segment start (Euler
 * forward); segment time is step / ground speed. Time and energy objectives
 * return +inf as soon as any sample is wind-infeasible. The distance objective
 * ignores wind entirely and reports pure geometric length (its flight time and
 * energy fields are NaN).
 */
CostReport integrate_cost(const DubinsAirplanePath& path, const WindField& field,
                          const VehicleModel& model, Objective objective, double step,
                          bool keep_trace = false);

/** Write a trace as delimited text, one row per sample. */
void write_trace(std::ostream& out, const CostReport& report);

}  // namespace windplan

#endif  // WINDPLAN_ENERGY_HPP_
