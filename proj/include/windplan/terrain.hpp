/*!
 * \file terrain.hpp
 *
 * \brief 2.5D elevation map with bilinear queries and motion collision
 * checking against the terrain surface.
 */

#ifndef WINDPLAN_TERRAIN_HPP_
#define WINDPLAN_TERRAIN_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "windplan/dubins_airplane.hpp"

namespace windplan {

class ElevationFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** \brief Regular grid of terrain heights.
 *
 * Node (i, j) sits at origin + cellsize * (i, j); the on-disk layout is
 * row-major north-up (first row is the northernmost). Queries interpolate
 * bilinearly; nodata cells are forbidden (treated as infinitely high terrain).
 * Outside the map the terrain is clear unless strict bounds are enabled, in
 * which case leaving the map counts as a collision.
 */
class ElevationMap {
 public:
  ElevationMap(int ncols, int nrows, const Eigen::Vector2d& origin, double cellsize,
               std::vector<double> values, std::optional<double> nodata = std::nullopt);

  /** Interpolated terrain height; -inf outside (or +inf with strict bounds), +inf over nodata. */
  double elevation_at(double x, double y) const;

  void set_strict_bounds(bool strict) { strict_bounds_ = strict; }
  bool strict_bounds() const { return strict_bounds_; }

  int ncols() const { return ncols_; }
  int nrows() const { return nrows_; }
  const Eigen::Vector2d& origin() const { return origin_; }
  double cellsize() const { return cellsize_; }
  std::optional<double> nodata() const { return nodata_; }
  /** Node values, row-major with row 0 the southernmost; nodata stored as NaN. */
  const std::vector<double>& values() const { return values_; }

 private:
  double node(int i, int j) const { return values_[static_cast<size_t>(j) * ncols_ + i]; }

  int ncols_, nrows_;
  Eigen::Vector2d origin_;
  double cellsize_;
  std::vector<double> values_;
  std::optional<double> nodata_;
  bool strict_bounds_ = false;
};

ElevationMap load_elevation(std::istream& in);
ElevationMap load_elevation(const std::filesystem::path& file);
void save_elevation(const ElevationMap& map, std::ostream& out);
void save_elevation(const ElevationMap& map, const std::filesystem::path& file);

/** True when the state clears the terrain by at least `clearance`. */
bool state_clear(const State& state, const ElevationMap* map, double clearance);

/** \brief True when every sample at spacing ds clears the terrain.
 *
 * A null map means an empty world and always passes.
 */
bool motion_clear(const DubinsAirplanePath& path, const ElevationMap* map, double clearance,
                  double ds);

}  // namespace windplan

#endif  // WINDPLAN_TERRAIN_HPP_
