/*!
 * \file wind_field.hpp
 *
 * \brief Wind fields W: position -> R^3. Analytic synthetic fields (uniform,
 * horizontal shear, updraft cylinder) and gridded fields with trilinear
 * interpolation, plus text-file IO for the gridded form.
 */

#ifndef WINDPLAN_WIND_FIELD_HPP_
#define WINDPLAN_WIND_FIELD_HPP_

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <vector>

#include "windplan/core.hpp"

namespace windplan {

using WindVector = Eigen::Vector3d;

class WindField {
 public:
  virtual ~WindField() = default;
  virtual WindVector sample(const Eigen::Vector3d& position) const = 0;
};

inline WindVector sample_wind(const WindField& field, const Eigen::Vector3d& position) {
  return field.sample(position);
}

class UniformWind final : public WindField {
 public:
  explicit UniformWind(const WindVector& wind = WindVector::Zero()) : wind_(wind) {}
  WindVector sample(const Eigen::Vector3d&) const override { return wind_; }

 private:
  WindVector wind_;
};

/** \brief Two half-spaces with opposite horizontal winds.
 *
 * Space is split on `split_axis` at `boundary`; the wind blows along the other
 * horizontal axis, +magnitude below the boundary and -magnitude at or above it.
 */
class HorizontalShearWind final : public WindField {
 public:
  enum class Axis { X = 0, Y = 1 };

  HorizontalShearWind(Axis split_axis, double boundary, double magnitude);
  WindVector sample(const Eigen::Vector3d& position) const override;

  double magnitude() const { return magnitude_; }

 private:
  Axis split_axis_;
  double boundary_;
  double magnitude_;
};

/** Vertical wind of fixed strength inside an infinite vertical cylinder, zero outside. */
class UpdraftWind final : public WindField {
 public:
  UpdraftWind(const Eigen::Vector2d& center, double radius, double strength);
  WindVector sample(const Eigen::Vector3d& position) const override;

 private:
  Eigen::Vector2d center_;
  double radius_;
  double strength_;
};

/** \brief Regular 3D grid of wind vectors, trilinearly interpolated.
 *
 * Value arrays are x-fastest: index = i + nx * (j + ny * k). Positions outside
 * the grid are clamped to the boundary faces.
 */
class GriddedWindField final : public WindField {
 public:
  GriddedWindField(int nx, int ny, int nz, const Eigen::Vector3d& origin,
                   const Eigen::Vector3d& spacing, std::vector<double> wx, std::vector<double> wy,
                   std::vector<double> wz);

  WindVector sample(const Eigen::Vector3d& position) const override;

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nz() const { return nz_; }
  const Eigen::Vector3d& origin() const { return origin_; }
  const Eigen::Vector3d& spacing() const { return spacing_; }
  const std::vector<double>& wx() const { return wx_; }
  const std::vector<double>& wy() const { return wy_; }
  const std::vector<double>& wz() const { return wz_; }

  size_t index(int i, int j, int k) const {
    return static_cast<size_t>(i) + static_cast<size_t>(nx_) * (static_cast<size_t>(j) + static_cast<size_t>(ny_) * k);
  }

 private:
  int nx_, ny_, nz_;
  Eigen::Vector3d origin_;
  Eigen::Vector3d spacing_;
  std::vector<double> wx_, wy_, wz_;
};

/** Parse error with the line it was found on. */
class WindGridFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GriddedWindField load_wind_grid(std::istream& in);
GriddedWindField load_wind_grid(const std::filesystem::path& file);
void save_wind_grid(const GriddedWindField& field, std::ostream& out);
void save_wind_grid(const GriddedWindField& field, const std::filesystem::path& file);

}  // namespace windplan

#endif  // WINDPLAN_WIND_FIELD_HPP_
