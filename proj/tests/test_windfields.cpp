#include <doctest.h>

#include <random>
#include <sstream>

#include "windplan/wind_field.hpp"

using namespace windplan;

namespace {

GriddedWindField random_grid(uint64_t seed, int nx = 5, int ny = 4, int nz = 3) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> value(-20.0, 20.0);
  const size_t total = static_cast<size_t>(nx) * ny * nz;
  std::vector<double> wx(total), wy(total), wz(total);
  for (size_t i = 0; i < total; ++i) {
    wx[i] = value(gen);
    wy[i] = value(gen);
    wz[i] = value(gen);
  }
  return GriddedWindField(nx, ny, nz, {-10.0, 5.0, 0.0}, {25.0, 40.0, 15.0}, std::move(wx),
                          std::move(wy), std::move(wz));
}

}  // namespace

TEST_SUITE("windfields") {
  TEST_CASE("zero uniform wind is zero everywhere") {
    const UniformWind field;
    CHECK(field.sample({123.0, -45.0, 678.0}).norm() == 0.0);
  }

  TEST_CASE("shear flips sign across the boundary") {
    const HorizontalShearWind field(HorizontalShearWind::Axis::Y, 1000.0, 5.0);
    CHECK(field.sample({0.0, 0.0, 100.0}).x() == doctest::Approx(5.0));
    CHECK(field.sample({0.0, 2000.0, 100.0}).x() == doctest::Approx(-5.0));
    CHECK(field.sample({0.0, 0.0, 100.0}).y() == 0.0);
    CHECK(field.sample({0.0, 0.0, 100.0}).z() == 0.0);
  }

  TEST_CASE("shear magnitude is exact everywhere") {
    for (double magnitude : {2.0, 5.0, 10.0, 15.0}) {
      const HorizontalShearWind field(HorizontalShearWind::Axis::Y, 0.0, magnitude);
      std::mt19937_64 gen(1);
      std::uniform_real_distribution<double> coord(-5000.0, 5000.0);
      for (int i = 0; i < 100; ++i) {
        const Eigen::Vector3d p(coord(gen), coord(gen), coord(gen));
        CHECK(field.sample(p).norm() == doctest::Approx(magnitude));
      }
    }
  }

  TEST_CASE("zero-magnitude shear equals calm air") {
    const HorizontalShearWind field(HorizontalShearWind::Axis::X, 3.0, 0.0);
    CHECK(field.sample({-10.0, 4.0, 2.0}).norm() == 0.0);
    CHECK(field.sample({10.0, -4.0, -2.0}).norm() == 0.0);
  }

  TEST_CASE("updraft is strength inside the cylinder and zero outside") {
    const UpdraftWind field({900.0, 0.0}, 300.0, 5.0);
    CHECK(field.sample({900.0, 0.0, 123.0}).z() == doctest::Approx(5.0));
    CHECK(field.sample({700.0, 100.0, 0.0}).z() == doctest::Approx(5.0));
    CHECK(field.sample({900.0, 301.0, 0.0}).z() == 0.0);
    CHECK(field.sample({0.0, 0.0, 0.0}).z() == 0.0);
    CHECK(field.sample({900.0, 0.0, -500.0}).x() == 0.0);
  }

  TEST_CASE("constant grid interpolates to the constant") {
    std::vector<double> wx(8, 1.0), wy(8, 2.0), wz(8, 3.0);
    const GriddedWindField field(2, 2, 2, {0, 0, 0}, {100, 100, 100}, wx, wy, wz);
    const WindVector w = field.sample({37.0, 84.0, 12.0});
    CHECK(w.x() == doctest::Approx(1.0));
    CHECK(w.y() == doctest::Approx(2.0));
    CHECK(w.z() == doctest::Approx(3.0));
  }

  TEST_CASE("linear-in-x grid midpoint is the mean of the corners") {
    std::vector<double> wx, wy, wz;
    for (int k = 0; k < 2; ++k) {
      for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 3; ++i) {
          wx.push_back(4.0 * i);
          wy.push_back(0.0);
          wz.push_back(0.0);
        }
      }
    }
    const GriddedWindField field(3, 2, 2, {0, 0, 0}, {50, 50, 50}, wx, wy, wz);
    CHECK(field.sample({25.0, 10.0, 10.0}).x() == doctest::Approx(2.0));
    CHECK(field.sample({75.0, 40.0, 40.0}).x() == doctest::Approx(6.0));
  }

  TEST_CASE("grid reproduces node values exactly") {
    const GriddedWindField field = random_grid(42);
    for (int k = 0; k < field.nz(); ++k) {
      for (int j = 0; j < field.ny(); ++j) {
        for (int i = 0; i < field.nx(); ++i) {
          const Eigen::Vector3d p =
              field.origin() + field.spacing().cwiseProduct(Eigen::Vector3d(i, j, k));
          CHECK(field.sample(p).x() == doctest::Approx(field.wx()[field.index(i, j, k)]));
          CHECK(field.sample(p).z() == doctest::Approx(field.wz()[field.index(i, j, k)]));
        }
      }
    }
  }

  TEST_CASE("grid interpolation is continuous") {
    const GriddedWindField field = random_grid(7);
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      const Eigen::Vector3d p =
          field.origin() + Eigen::Vector3d(unit(gen) * 100.0, unit(gen) * 120.0, unit(gen) * 30.0);
      const Eigen::Vector3d q = p + Eigen::Vector3d(1e-9, -1e-9, 1e-9);
      CHECK((field.sample(p) - field.sample(q)).norm() < 1e-6);
    }
  }

  TEST_CASE("outside samples clamp to the boundary face") {
    const GriddedWindField field = random_grid(9);
    const Eigen::Vector3d low = field.origin();
    const Eigen::Vector3d inside(low.x() + 30.0, low.y() + 50.0, low.z() + 10.0);
    const Eigen::Vector3d below(inside.x(), inside.y(), low.z() - 500.0);
    const Eigen::Vector3d at_face(inside.x(), inside.y(), low.z());
    CHECK((field.sample(below) - field.sample(at_face)).norm() == doctest::Approx(0.0));
    const Eigen::Vector3d far_out = low + Eigen::Vector3d(1e6, 1e6, 1e6);
    const Eigen::Vector3d corner =
        field.origin() + field.spacing().cwiseProduct(
                             Eigen::Vector3d(field.nx() - 1, field.ny() - 1, field.nz() - 1));
    CHECK((field.sample(far_out) - field.sample(corner)).norm() == doctest::Approx(0.0));
  }

  TEST_CASE("save and load round-trip bit-exactly") {
    const GriddedWindField field = random_grid(2024);
    std::stringstream buffer;
    save_wind_grid(field, buffer);
    const GriddedWindField loaded = load_wind_grid(buffer);
    CHECK(loaded.nx() == field.nx());
    CHECK(loaded.ny() == field.ny());
    CHECK(loaded.nz() == field.nz());
    CHECK(loaded.origin() == field.origin());
    CHECK(loaded.spacing() == field.spacing());
    CHECK(loaded.wx() == field.wx());
    CHECK(loaded.wy() == field.wy());
    CHECK(loaded.wz() == field.wz());
  }

  TEST_CASE("minimal grid document loads") {
    std::stringstream doc(
        "nx 2\nny 2\nnz 2\norigin 0 0 0\nspacing 1 1 1\n"
        "wx 1 1 1 1 1 1 1 1\nwy 0 0 0 0 0 0 0 0\nwz 2 2 2 2 2 2 2 2\n");
    const GriddedWindField field = load_wind_grid(doc);
    CHECK(field.wx().size() == 8);
    CHECK(field.sample({0.5, 0.5, 0.5}).z() == doctest::Approx(2.0));
  }

  TEST_CASE("array length mismatch names the offending array") {
    std::stringstream doc(
        "nx 2\nny 2\nnz 2\norigin 0 0 0\nspacing 1 1 1\n"
        "wx 1 1 1 1 1 1 1\nwy 0 0 0 0 0 0 0 0\nwz 0 0 0 0 0 0 0 0\n");
    CHECK_THROWS_WITH_AS(load_wind_grid(doc), doctest::Contains("wx"), WindGridFormatError);
  }

  TEST_CASE("non-finite values are rejected with a located message") {
    std::stringstream doc(
        "nx 2\nny 2\nnz 2\norigin 0 0 0\nspacing 1 1 1\n"
        "wx 1 1 1 nan 1 1 1 1\nwy 0 0 0 0 0 0 0 0\nwz 0 0 0 0 0 0 0 0\n");
    CHECK_THROWS_WITH_AS(load_wind_grid(doc), doctest::Contains("line 6"), WindGridFormatError);
  }

  TEST_CASE("unknown keys and bad headers are rejected") {
    std::stringstream doc("nx 2\nny 2\nnz 2\nbogus 1\n");
    CHECK_THROWS_AS(load_wind_grid(doc), WindGridFormatError);
    std::stringstream missing("nx 2\nny 2\n");
    CHECK_THROWS_AS(load_wind_grid(missing), WindGridFormatError);
  }
}
