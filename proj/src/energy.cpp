/*!
 * \file energy.cpp
 */

#include "windplan/energy.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace windplan {

std::string to_string(Objective objective) {
  switch (objective) {
    case Objective::Distance:
      return "distance";
    case Objective::Time:
      return "time";
    default:
      return "energy";
  }
}

double thrust(double gamma_air, const VehicleModel& model) {
  return std::max(model.drag_n + model.mass_kg * model.gravity * std::sin(gamma_air), 0.0);
}

double power(double gamma_air, const VehicleModel& model) {
  return model.avionics_power_w + thrust(gamma_air, model) * model.airspeed / model.thrust_power_coeff;
}

CostReport integrate_cost(const DubinsAirplanePath& path, const WindField& field,
                          const VehicleModel& model, Objective objective, double step,
                          bool keep_trace) {
  if (step <= 0.0) throw std::invalid_argument("integrate_cost: step must be > 0");

  CostReport report;
  report.length = path.length();

  if (objective == Objective::Distance) {
    // pure geometric cost; wind is never sampled
    report.objective_value = report.length;
    report.flight_time = std::numeric_limits<double>::quiet_NaN();
    report.energy = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  const double total = path.length();
  const auto steps = (total > 0.0) ? static_cast<size_t>(std::ceil(total / step - 1e-9)) : 0;

  for (size_t i = 0; i < steps; ++i) {
    const double s = static_cast<double>(i) * step;
    const double ds = std::min(step, total - s);
    const PathSample sample = path.sample_at(s);
    const WindVector wind = field.sample(sample.state.position());
    const WindTriangleSolution tri = solve_wind_triangle(sample.tangent, wind, model);
    if (!tri.feasible) {
      report.feasible = false;
      report.objective_value = std::numeric_limits<double>::infinity();
      return report;
    }
    const double dt = ds / tri.ground_speed;
    const double p = power(tri.gamma_air, model);
    report.flight_time += dt;
    report.energy += p * dt;
    if (keep_trace) {
      report.trace.push_back({sample.s, sample.state, wind, tri.ground_speed, tri.gamma_air, p,
                              report.flight_time, report.energy});
    }
  }

  report.objective_value = (objective == Objective::Time) ? report.flight_time : report.energy;
  return report;
}

void write_trace(std::ostream& out, const CostReport& report) {
  out << "s,x,y,z,heading,wx,wy,wz,V_ground,gamma_air_deg,power_W,cum_time_s,cum_energy_J\n";
  for (const TraceSample& row : report.trace) {
    out << row.s << ',' << row.state.x << ',' << row.state.y << ',' << row.state.z << ','
        << row.state.heading << ',' << row.wind.x() << ',' << row.wind.y() << ',' << row.wind.z()
        << ',' << row.ground_speed << ',' << rad2deg(row.gamma_air) << ',' << row.power << ','
        << row.cum_time << ',' << row.cum_energy << '\n';
  }
}

}  // namespace windplan
