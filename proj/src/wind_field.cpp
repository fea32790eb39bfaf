/*!
 * \file wind_field.cpp
 */

#include "windplan/wind_field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace windplan {

HorizontalShearWind::HorizontalShearWind(Axis split_axis, double boundary, double magnitude)
    : split_axis_(split_axis), boundary_(boundary), magnitude_(magnitude) {
  if (magnitude < 0.0) throw std::invalid_argument("shear magnitude must be >= 0");
  if (!std::isfinite(boundary)) throw std::invalid_argument("shear boundary must be finite");
}

WindVector HorizontalShearWind::sample(const Eigen::Vector3d& position) const {
  const double coord = (split_axis_ == Axis::X) ? position.x() : position.y();
  const double sign = (coord < boundary_) ? 1.0 : -1.0;
  WindVector w = WindVector::Zero();
  if (split_axis_ == Axis::X) {
    w.y() = sign * magnitude_;
  } else {
    w.x() = sign * magnitude_;
  }
  return w;
}

UpdraftWind::UpdraftWind(const Eigen::Vector2d& center, double radius, double strength)
    : center_(center), radius_(radius), strength_(strength) {
  if (radius <= 0.0) throw std::invalid_argument("updraft radius must be > 0");
}

WindVector UpdraftWind::sample(const Eigen::Vector3d& position) const {
  const double dist = (position.head<2>() - center_).norm();
  return {0.0, 0.0, dist <= radius_ ? strength_ : 0.0};
}

GriddedWindField::GriddedWindField(int nx, int ny, int nz, const Eigen::Vector3d& origin,
                                   const Eigen::Vector3d& spacing, std::vector<double> wx,
                                   std::vector<double> wy, std::vector<double> wz)
    : nx_(nx),
      ny_(ny),
      nz_(nz),
      origin_(origin),
      spacing_(spacing),
      wx_(std::move(wx)),
      wy_(std::move(wy)),
      wz_(std::move(wz)) {
  if (nx_ < 2 || ny_ < 2 || nz_ < 2) {
    throw std::invalid_argument("grid counts must be >= 2 in every dimension");
  }
  if ((spacing_.array() <= 0.0).any()) {
    throw std::invalid_argument("grid spacing must be strictly positive");
  }
  const auto expected = static_cast<size_t>(nx_) * ny_ * nz_;
  if (wx_.size() != expected || wy_.size() != expected || wz_.size() != expected) {
    throw std::invalid_argument("grid value arrays must have nx*ny*nz entries");
  }
}

WindVector GriddedWindField::sample(const Eigen::Vector3d& position) const {
  Eigen::Vector3d local = (position - origin_).cwiseQuotient(spacing_);
  local = local.cwiseMax(0.0).cwiseMin(Eigen::Vector3d(nx_ - 1.0, ny_ - 1.0, nz_ - 1.0));

  const int i0 = std::min(static_cast<int>(local.x()), nx_ - 2);
  const int j0 = std::min(static_cast<int>(local.y()), ny_ - 2);
  const int k0 = std::min(static_cast<int>(local.z()), nz_ - 2);
  const double fx = local.x() - i0;
  const double fy = local.y() - j0;
  const double fz = local.z() - k0;

  const auto lerp_grid = [&](const std::vector<double>& v) {
    const double c000 = v[index(i0, j0, k0)];
    const double c100 = v[index(i0 + 1, j0, k0)];
    const double c010 = v[index(i0, j0 + 1, k0)];
    const double c110 = v[index(i0 + 1, j0 + 1, k0)];
    const double c001 = v[index(i0, j0, k0 + 1)];
    const double c101 = v[index(i0 + 1, j0, k0 + 1)];
    const double c011 = v[index(i0, j0 + 1, k0 + 1)];
    const double c111 = v[index(i0 + 1, j0 + 1, k0 + 1)];
    const double c00 = c000 * (1.0 - fx) + c100 * fx;
    const double c10 = c010 * (1.0 - fx) + c110 * fx;
    const double c01 = c001 * (1.0 - fx) + c101 * fx;
    const double c11 = c011 * (1.0 - fx) + c111 * fx;
    const double c0 = c00 * (1.0 - fy) + c10 * fy;
    const double c1 = c01 * (1.0 - fy) + c11 * fy;
    return c0 * (1.0 - fz) + c1 * fz;
  };

  return {lerp_grid(wx_), lerp_grid(wy_), lerp_grid(wz_)};
}

namespace {

// line-tracking token reader for the grid format
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(std::string& token) {
    while (true) {
      if (pos_ >= line_.size()) {
        if (!std::getline(in_, line_)) return false;
        ++line_number_;
        pos_ = 0;
        continue;
      }
      while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      if (pos_ >= line_.size()) continue;
      if (line_[pos_] == '#') {  // comment to end of line
        pos_ = line_.size();
        continue;
      }
      size_t end = pos_;
      while (end < line_.size() && !std::isspace(static_cast<unsigned char>(line_[end]))) ++end;
      token = line_.substr(pos_, end - pos_);
      pos_ = end;
      return true;
    }
  }

  int line_number() const { return line_number_; }

 private:
  std::istream& in_;
  std::string line_;
  size_t pos_ = 0;
  int line_number_ = 0;
};

[[noreturn]] void fail(const TokenReader& reader, const std::string& message) {
  std::ostringstream oss;
  oss << "wind grid, line " << reader.line_number() << ": " << message;
  throw WindGridFormatError(oss.str());
}

double parse_real(TokenReader& reader, const std::string& what) {
  std::string token;
  if (!reader.next(token)) fail(reader, "unexpected end of file while reading " + what);
  try {
    size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    fail(reader, "expected a number for " + what + ", got '" + token + "'");
  }
}

int parse_int(TokenReader& reader, const std::string& what) {
  const double v = parse_real(reader, what);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    fail(reader, what + " must be an integer");
  }
  return i;
}

}  // namespace

GriddedWindField load_wind_grid(std::istream& in) {
  TokenReader reader(in);
  int nx = -1, ny = -1, nz = -1;
  Eigen::Vector3d origin = Eigen::Vector3d::Zero();
  Eigen::Vector3d spacing = Eigen::Vector3d::Zero();
  bool have_origin = false, have_spacing = false;
  std::map<std::string, std::vector<double>> arrays;

  std::string key;
  while (reader.next(key)) {
    if (key == "nx") {
      nx = parse_int(reader, "nx");
    } else if (key == "ny") {
      ny = parse_int(reader, "ny");
    } else if (key == "nz") {
      nz = parse_int(reader, "nz");
    } else if (key == "origin") {
      for (int i = 0; i < 3; ++i) origin[i] = parse_real(reader, "origin");
      have_origin = true;
    } else if (key == "spacing") {
      for (int i = 0; i < 3; ++i) spacing[i] = parse_real(reader, "spacing");
      have_spacing = true;
    } else if (key == "wx" || key == "wy" || key == "wz") {
      if (nx < 0 || ny < 0 || nz < 0) fail(reader, "counts nx, ny, nz must precede array '" + key + "'");
      const size_t expected = static_cast<size_t>(nx) * ny * nz;
      std::vector<double> values;
      values.reserve(expected);
      for (size_t i = 0; i < expected; ++i) {
        const double v = parse_real(reader, key + "[" + std::to_string(i) + "]");
        if (!std::isfinite(v)) fail(reader, "array '" + key + "' contains a non-finite value");
        values.push_back(v);
      }
      arrays[key] = std::move(values);
    } else {
      fail(reader, "unknown field '" + key + "'");
    }
  }

  if (nx < 0 || ny < 0 || nz < 0) throw WindGridFormatError("wind grid: missing counts nx, ny, nz");
  if (nx < 2 || ny < 2 || nz < 2) throw WindGridFormatError("wind grid: counts must be >= 2");
  if (!have_origin) throw WindGridFormatError("wind grid: missing origin");
  if (!have_spacing) throw WindGridFormatError("wind grid: missing spacing");
  if ((spacing.array() <= 0.0).any()) throw WindGridFormatError("wind grid: spacing must be > 0");
  for (const char* name : {"wx", "wy", "wz"}) {
    if (arrays.find(name) == arrays.end()) {
      throw WindGridFormatError(std::string("wind grid: missing array '") + name + "'");
    }
  }

  return GriddedWindField(nx, ny, nz, origin, spacing, std::move(arrays["wx"]),
                          std::move(arrays["wy"]), std::move(arrays["wz"]));
}

GriddedWindField load_wind_grid(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw WindGridFormatError("cannot open wind grid file: " + file.string());
  return load_wind_grid(in);
}

namespace {

void write_real(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

void write_array(std::ostream& out, const std::string& name, const std::vector<double>& values,
                 int per_line) {
  out << name << "\n";
  for (size_t i = 0; i < values.size(); ++i) {
    write_real(out, values[i]);
    out << (((i + 1) % per_line == 0 || i + 1 == values.size()) ? '\n' : ' ');
  }
}

}  // namespace

void save_wind_grid(const GriddedWindField& field, std::ostream& out) {
  out << "nx " << field.nx() << "\n";
  out << "ny " << field.ny() << "\n";
  out << "nz " << field.nz() << "\n";
  out << "origin";
  for (int i = 0; i < 3; ++i) {
    out << ' ';
    write_real(out, field.origin()[i]);
  }
  out << "\nspacing";
  for (int i = 0; i < 3; ++i) {
    out << ' ';
    write_real(out, field.spacing()[i]);
  }
  out << "\n";
  write_array(out, "wx", field.wx(), field.nx());
  write_array(out, "wy", field.wy(), field.nx());
  write_array(out, "wz", field.wz(), field.nx());
}

void save_wind_grid(const GriddedWindField& field, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw WindGridFormatError("cannot open wind grid file for writing: " + file.string());
  save_wind_grid(field, out);
}

}  // namespace windplan
