/*!
 * \file dubins_airplane.hpp
 *
 * \brief 3D Dubins airplane paths: planar Dubins words extended with a common
 * ground-relative flight path angle and, where the altitude difference demands
 * it, additional turning on the start circle (including full helix loops).
 */

#ifndef WINDPLAN_DUBINS_AIRPLANE_HPP_
#define WINDPLAN_DUBINS_AIRPLANE_HPP_

#include <functional>
#include <vector>

#include "windplan/dubins.hpp"
#include "windplan/vehicle.hpp"

namespace windplan {

/** One arc or straight piece of a Dubins airplane path. */
struct PathSegment {
  SegmentKind kind = SegmentKind::Straight;
  double horizontal_length = 0.0;  ///< length of the planar projection [m]
  double curvature = 0.0;          ///< signed planar curvature: +k left, -k right, 0 straight [1/m]
  double gamma = 0.0;              ///< ground-relative flight path angle [rad]
  State start;                     ///< state at the segment start

  double length3d() const { return horizontal_length / std::cos(gamma); }
  State end() const;
  /** State after a horizontal advance h in [0, horizontal_length]. */
  State state_at_horizontal(double h) const;
};

/** Sample on a path at a given 3D arc length. */
struct PathSample {
  double s = 0.0;
  State state;
  Eigen::Vector3d tangent = Eigen::Vector3d::UnitX();
  double curvature = 0.0;
};

/** \brief Piecewise arc/straight path with a common flight path angle.
 *
 * Segments chain continuously in position and heading; all segments share one
 * gamma and arcs have |curvature| equal to the vehicle curvature limit the
 * path was built with. Arc length accessors are 3D lengths.
 */
class DubinsAirplanePath {
 public:
  DubinsAirplanePath() = default;
  DubinsAirplanePath(std::vector<PathSegment> segments, DubinsWord word);

  const std::vector<PathSegment>& segments() const { return segments_; }
  DubinsWord word() const { return word_; }
  double gamma() const { return segments_.empty() ? 0.0 : segments_.front().gamma; }
  double length() const { return length3d_; }
  double length_2d() const { return length2d_; }

  State start() const { return segments_.empty() ? State{} : segments_.front().start; }
  State end() const { return end_; }

  /** State at 3D arc length s, clamped to [0, length()]. */
  State state_at(double s) const;
  PathSample sample_at(double s) const;

 private:
  std::vector<PathSegment> segments_;
  DubinsWord word_ = DubinsWord::LSL;
  double length3d_ = 0.0;
  double length2d_ = 0.0;
  State end_;
};

/** \brief Connect two states with a Dubins airplane path.
 *
 * Low altitude differences reuse the planar solution with gamma set from the
 * height difference. Larger differences extend the first turn by an extra arc
 * angle (plus full loops when needed), solved by bisection so that the final
 * altitude is met exactly while |gamma| stays within the climb limit.
 */
DubinsAirplanePath dubins_airplane_connect(const State& start, const State& goal,
                                           double curvature_max, double gamma_max);

inline DubinsAirplanePath dubins_airplane_connect(const State& start, const State& goal,
                                                  const VehicleModel& model) {
  return dubins_airplane_connect(start, goal, model.curvature_max, model.gamma_ground_max);
}

/** Visit samples at spacing ds: s = 0, ds, 2 ds, ..., plus the final s = length(). */
void for_each_sample(const DubinsAirplanePath& path, double ds,
                     const std::function<void(const PathSample&)>& fn);

std::vector<PathSample> sample_path(const DubinsAirplanePath& path, double ds);

}  // namespace windplan

#endif  // WINDPLAN_DUBINS_AIRPLANE_HPP_
