/*!
 * \file core.hpp
 *
 * \brief Basic state and angle types shared by all planning modules.
 */

#ifndef WINDPLAN_CORE_HPP_
#define WINDPLAN_CORE_HPP_

#include <Eigen/Dense>
#include <cmath>

namespace windplan {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/** Wrap an angle to [0, 2*pi). */
inline double mod_2pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

/** Wrap an angle to [-pi, pi). */
inline double wrap_pi(double angle) {
  double a = mod_2pi(angle + kPi) - kPi;
  return a;
}

/** Smallest absolute angular difference between two headings, in [0, pi]. */
inline double heading_distance(double a, double b) {
  double d = std::fabs(wrap_pi(a - b));
  return d;
}

/** \brief Vehicle configuration: world-frame position plus ground-relative bearing.
 *
 * The heading is normalized to [0, 2*pi) on construction and assignment through
 * set_heading(); positions are plain world coordinates in meters.
 */
struct State {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double heading = 0.0;

  State() = default;
  State(double x_, double y_, double z_, double heading_)
      : x(x_), y(y_), z(z_), heading(mod_2pi(heading_)) {}

  Eigen::Vector3d position() const { return {x, y, z}; }

  void set_position(const Eigen::Vector3d& p) {
    x = p.x();
    y = p.y();
    z = p.z();
  }

  void set_heading(double h) { heading = mod_2pi(h); }

  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z) && std::isfinite(heading);
  }
};

/** Axis-aligned sampling volume. */
struct Box {
  Eigen::Vector3d min = Eigen::Vector3d::Zero();
  Eigen::Vector3d max = Eigen::Vector3d::Zero();

  bool contains(const Eigen::Vector3d& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }

  Eigen::Vector3d extent() const { return max - min; }
  double diagonal() const { return extent().norm(); }
  double volume() const { return extent().prod(); }
  bool degenerate() const { return (extent().array() <= 0.0).any(); }
};

}  // namespace windplan

#endif  // WINDPLAN_CORE_HPP_
