/*!
 * \file dubins.hpp
 *
 * \brief Exact 2D Dubins car paths via set classification over the six word
 * classes (LSL, RSR, LSR, RSL, RLR, LRL).
 */

#ifndef WINDPLAN_DUBINS_HPP_
#define WINDPLAN_DUBINS_HPP_

#include <array>
#include <string>

#include "windplan/core.hpp"

namespace windplan {

enum class DubinsWord { LSL = 0, RSR, LSR, RSL, RLR, LRL };

enum class SegmentKind { TurnLeft, TurnRight, Straight };

/** Segment kinds making up a word, first to last. */
std::array<SegmentKind, 3> word_segments(DubinsWord word);

std::string to_string(DubinsWord word);

/** \brief Planar Dubins path: word class plus the three segment parameters.
 *
 * Segment parameters are stored normalized by the turn radius (arc parameters
 * are angles in radians, the straight parameter is length/radius).
 */
struct Dubins2dPath {
  DubinsWord word = DubinsWord::LSL;
  std::array<double, 3> params{0.0, 0.0, 0.0};
  double radius = 1.0;

  double normalized_length() const { return params[0] + params[1] + params[2]; }
  double length() const { return normalized_length() * radius; }
  /** Segment lengths in meters, first to last. */
  std::array<double, 3> segment_lengths() const {
    return {params[0] * radius, params[1] * radius, params[2] * radius};
  }
};

/** \brief Shortest planar Dubins path between two poses (z ignored).
 *
 * Uses the set-classification dispatch in the long-distance regime and an
 * exhaustive word sweep otherwise. The classified candidate is always checked
 * against the exhaustive minimum and replaced if it is longer by more than
 * 1e-6 m, so the returned path is the true minimum over all six words.
 */
Dubins2dPath dubins_2d_shortest(const State& start, const State& goal, double turn_radius);

}  // namespace windplan

#endif  // WINDPLAN_DUBINS_HPP_
