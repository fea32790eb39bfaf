/*!
 * \file terrain.cpp
 */

#include "windplan/terrain.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace windplan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ElevationMap::ElevationMap(int ncols, int nrows, const Eigen::Vector2d& origin, double cellsize,
                           std::vector<double> values, std::optional<double> nodata)
    : ncols_(ncols),
      nrows_(nrows),
      origin_(origin),
      cellsize_(cellsize),
      values_(std::move(values)),
      nodata_(nodata) {
  if (ncols_ < 1 || nrows_ < 1) throw std::invalid_argument("elevation map dimensions must be >= 1");
  if (cellsize_ <= 0.0) throw std::invalid_argument("elevation cellsize must be > 0");
  if (values_.size() != static_cast<size_t>(ncols_) * nrows_) {
    throw std::invalid_argument("elevation value array must have ncols*nrows entries");
  }
  if (nodata_) {
    for (double& v : values_) {
      if (v == *nodata_) v = std::numeric_limits<double>::quiet_NaN();
    }
  }
  for (double v : values_) {
    if (!std::isnan(v) && !std::isfinite(v)) {
      throw std::invalid_argument("elevation values must be finite or nodata");
    }
  }
}

double ElevationMap::elevation_at(double x, double y) const {
  const double fx = (x - origin_.x()) / cellsize_;
  const double fy = (y - origin_.y()) / cellsize_;
  if (fx < 0.0 || fy < 0.0 || fx > ncols_ - 1.0 || fy > nrows_ - 1.0) {
    return strict_bounds_ ? kInf : -kInf;
  }
  const int i0 = std::min(static_cast<int>(fx), std::max(ncols_ - 2, 0));
  const int j0 = std::min(static_cast<int>(fy), std::max(nrows_ - 2, 0));
  const int i1 = std::min(i0 + 1, ncols_ - 1);
  const int j1 = std::min(j0 + 1, nrows_ - 1);
  const double tx = fx - i0;
  const double ty = fy - j0;

  const double c00 = node(i0, j0);
  const double c10 = node(i1, j0);
  const double c01 = node(i0, j1);
  const double c11 = node(i1, j1);
  if (std::isnan(c00) || std::isnan(c10) || std::isnan(c01) || std::isnan(c11)) {
    return kInf;  // nodata columns are forbidden
  }
  const double c0 = c00 * (1.0 - tx) + c10 * tx;
  const double c1 = c01 * (1.0 - tx) + c11 * tx;
  return c0 * (1.0 - ty) + c1 * ty;
}

bool state_clear(const State& state, const ElevationMap* map, double clearance) {
  if (map == nullptr) return true;
  return state.z >= map->elevation_at(state.x, state.y) + clearance;
}

bool motion_clear(const DubinsAirplanePath& path, const ElevationMap* map, double clearance,
                  double ds) {
  if (map == nullptr) return true;
  if (ds <= 0.0) throw std::invalid_argument("motion_clear: ds must be > 0");
  bool clear = true;
  for_each_sample(path, ds, [&](const PathSample& sample) {
    if (clear && !state_clear(sample.state, map, clearance)) clear = false;
  });
  return clear;
}

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  std::ostringstream oss;
  oss << "elevation map, line " << line << ": " << message;
  throw ElevationFormatError(oss.str());
}

struct Token {
  std::string text;
  int line = 0;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      tokens.push_back({tok, line_number});
    }
  }
  return tokens;
}

}  // namespace

ElevationMap load_elevation(std::istream& in) {
  const std::vector<Token> tokens = tokenize(in);
  size_t pos = 0;
  const auto next = [&](const std::string& what) -> const Token& {
    if (pos >= tokens.size()) {
      throw ElevationFormatError("elevation map: unexpected end of file while reading " + what);
    }
    return tokens[pos++];
  };
  const auto real = [&](const std::string& what) {
    const Token& tok = next(what);
    try {
      size_t used = 0;
      const double v = std::stod(tok.text, &used);
      if (used != tok.text.size()) throw std::invalid_argument(tok.text);
      return v;
    } catch (const std::exception&) {
      fail(tok.line, "expected a number for " + what + ", got '" + tok.text + "'");
    }
  };

  int ncols = -1, nrows = -1;
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();
  double cellsize = 0.0;
  std::optional<double> nodata;
  std::vector<double> values;
  bool have_origin = false, have_values = false;

  while (pos < tokens.size()) {
    const Token key = next("field name");
    if (key.text == "ncols") {
      ncols = static_cast<int>(real("ncols"));
    } else if (key.text == "nrows") {
      nrows = static_cast<int>(real("nrows"));
    } else if (key.text == "origin") {
      origin.x() = real("origin");
      origin.y() = real("origin");
      have_origin = true;
    } else if (key.text == "cellsize") {
      cellsize = real("cellsize");
    } else if (key.text == "nodata") {
      nodata = real("nodata");
    } else if (key.text == "values") {
      if (ncols < 1 || nrows < 1) fail(key.line, "ncols and nrows must precede values");
      values.resize(static_cast<size_t>(ncols) * nrows);
      // file rows run north to south; storage rows run south to north
      for (int j = 0; j < nrows; ++j) {
        for (int i = 0; i < ncols; ++i) {
          values[static_cast<size_t>(nrows - 1 - j) * ncols + i] = real("values");
        }
      }
      have_values = true;
    } else {
      fail(key.line, "unknown field '" + key.text + "'");
    }
  }

  if (ncols < 1 || nrows < 1) throw ElevationFormatError("elevation map: missing ncols/nrows");
  if (!have_origin) throw ElevationFormatError("elevation map: missing origin");
  if (cellsize <= 0.0) throw ElevationFormatError("elevation map: missing or non-positive cellsize");
  if (!have_values) throw ElevationFormatError("elevation map: missing values");

  return ElevationMap(ncols, nrows, origin, cellsize, std::move(values), nodata);
}

ElevationMap load_elevation(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ElevationFormatError("cannot open elevation file: " + file.string());
  return load_elevation(in);
}

void save_elevation(const ElevationMap& map, std::ostream& out) {
  char buf[32];
  const auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  };
  out << "ncols " << map.ncols() << "\n";
  out << "nrows " << map.nrows() << "\n";
  out << "origin ";
  put(map.origin().x());
  out << ' ';
  put(map.origin().y());
  out << "\ncellsize ";
  put(map.cellsize());
  out << '\n';
  const double nodata = map.nodata().value_or(-9999.0);
  if (map.nodata()) {
    out << "nodata ";
    put(nodata);
    out << '\n';
  }
  out << "values\n";
  for (int j = map.nrows() - 1; j >= 0; --j) {
    for (int i = 0; i < map.ncols(); ++i) {
      const double v = map.values()[static_cast<size_t>(j) * map.ncols() + i];
      put(std::isnan(v) ? nodata : v);
      out << (i + 1 == map.ncols() ? '\n' : ' ');
    }
  }
}

void save_elevation(const ElevationMap& map, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw ElevationFormatError("cannot open elevation file for writing: " + file.string());
  save_elevation(map, out);
}

}  // namespace windplan
