#include <doctest.h>

#include <random>

#include "windplan/kinematics.hpp"

using namespace windplan;

namespace {

const VehicleModel kModel;  // 15 m/s airspeed, 20 deg air-relative climb limit

Eigen::Vector3d level_tangent(double heading) {
  return {std::cos(heading), std::sin(heading), 0.0};
}

}  // namespace

TEST_SUITE("kinematics") {
  TEST_CASE("zero wind on a level path flies at airspeed") {
    const auto sol = solve_wind_triangle(level_tangent(0.7), WindVector::Zero(), kModel);
    REQUIRE(sol.feasible);
    CHECK(sol.ground_speed == doctest::Approx(15.0));
    CHECK(sol.tangential_airspeed == doctest::Approx(15.0));
    CHECK(sol.gamma_air == doctest::Approx(0.0));
  }

  TEST_CASE("pure crosswind of 9 m/s leaves 12 m/s of progress") {
    const auto sol = solve_wind_triangle(level_tangent(0.0), {0.0, 9.0, 0.0}, kModel);
    REQUIRE(sol.feasible);
    CHECK(sol.tangential_airspeed == doctest::Approx(12.0));
    CHECK(sol.ground_speed == doctest::Approx(12.0));
    CHECK(sol.wind_perpendicular == doctest::Approx(9.0));
    CHECK(sol.wind_parallel == doctest::Approx(0.0));
  }

  TEST_CASE("tailwind adds to the ground speed") {
    const auto sol = solve_wind_triangle(level_tangent(0.0), {5.0, 0.0, 0.0}, kModel);
    REQUIRE(sol.feasible);
    CHECK(sol.ground_speed == doctest::Approx(20.0));
  }

  TEST_CASE("headwind equal to the airspeed stalls the path") {
    const auto sol = solve_wind_triangle(level_tangent(0.0), {-15.0, 0.0, 0.0}, kModel);
    CHECK_FALSE(sol.feasible);
    CHECK(sol.reason == WindInfeasibility::NoForwardProgress);
  }

  TEST_CASE("crosswind beyond the airspeed has no real root") {
    const auto sol = solve_wind_triangle(level_tangent(0.0), {0.0, 16.0, 0.0}, kModel);
    CHECK_FALSE(sol.feasible);
    CHECK(sol.reason == WindInfeasibility::PerpendicularWindExceedsAirspeed);
  }

  TEST_CASE("strong downdraft forces the climb angle past the limit") {
    const auto sol = solve_wind_triangle(level_tangent(1.0), {0.0, 0.0, -15.0}, kModel);
    CHECK_FALSE(sol.feasible);
    CHECK(sol.reason == WindInfeasibility::PerpendicularWindExceedsAirspeed);
    // a weaker downdraft still violates the climb limit before the root vanishes
    const auto weaker = solve_wind_triangle(level_tangent(1.0), {0.0, 0.0, -7.0}, kModel);
    CHECK_FALSE(weaker.feasible);
    CHECK(weaker.reason == WindInfeasibility::ClimbAngleExceeded);
  }

  TEST_CASE("moderate updraft on a level path is feasible") {
    const auto sol = solve_wind_triangle(level_tangent(2.0), {0.0, 0.0, 5.0}, kModel);
    REQUIRE(sol.feasible);
    CHECK(rad2deg(sol.gamma_air) == doctest::Approx(-19.47).epsilon(1e-3));
  }

  TEST_CASE("non-unit tangents are a contract violation") {
    CHECK_THROWS_AS(solve_wind_triangle({2.0, 0.0, 0.0}, WindVector::Zero(), kModel),
                    std::invalid_argument);
  }

  TEST_CASE("feasible solutions reconstruct the airspeed") {
    std::mt19937_64 gen(1234);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> elevation(-0.17, 0.17);
    std::uniform_real_distribution<double> windc(-18.0, 18.0);
    int feasible_count = 0;
    for (int i = 0; i < 100000; ++i) {
      const double th = angle(gen);
      const double ga = elevation(gen);
      const Eigen::Vector3d u(std::cos(ga) * std::cos(th), std::cos(ga) * std::sin(th),
                              std::sin(ga));
      const WindVector wind(windc(gen), windc(gen), windc(gen) / 3.0);
      const auto sol = solve_wind_triangle(u, wind, kModel);
      if (!sol.feasible) {
        // the declared reason must hold when recomputed from first principles
        const double wpar = wind.dot(u);
        const double wperp = (wind - wpar * u).norm();
        switch (sol.reason) {
          case WindInfeasibility::PerpendicularWindExceedsAirspeed:
            CHECK(wperp >= kModel.airspeed);
            break;
          case WindInfeasibility::NoForwardProgress:
            CHECK(std::sqrt(kModel.airspeed * kModel.airspeed - wperp * wperp) + wpar <= 0.0);
            break;
          default: {
            const double vg = std::sqrt(kModel.airspeed * kModel.airspeed - wperp * wperp) + wpar;
            const double gamma_air = std::asin((vg * u.z() - wind.z()) / kModel.airspeed);
            CHECK(std::fabs(gamma_air) > kModel.gamma_air_max);
          }
        }
        continue;
      }
      ++feasible_count;
      // exact identities of the wind triangle
      CHECK(sol.ground_speed == sol.tangential_airspeed + sol.wind_parallel);
      const Eigen::Vector3d air_velocity = sol.ground_speed * u - wind;
      CHECK(std::fabs(air_velocity.norm() - kModel.airspeed) < 1e-9);
      const double pythagoras = sol.tangential_airspeed * sol.tangential_airspeed +
                                sol.wind_perpendicular * sol.wind_perpendicular;
      CHECK(std::fabs(pythagoras - kModel.airspeed * kModel.airspeed) < 1e-9);
      CHECK(sol.ground_speed > 0.0);
    }
    CHECK(feasible_count > 10000);
  }

  TEST_CASE("ground speed is monotone in the parallel wind at fixed crosswind") {
    const double wperp = 6.0;
    double previous = -1.0;
    for (double wpar = -9.0; wpar <= 9.0; wpar += 0.5) {
      const auto sol = solve_wind_triangle(level_tangent(0.0), {wpar, wperp, 0.0}, kModel);
      REQUIRE(sol.feasible);
      CHECK(sol.ground_speed > previous);
      previous = sol.ground_speed;
    }
  }

  TEST_CASE("negating the perpendicular wind leaves the ground speed unchanged") {
    const auto a = solve_wind_triangle(level_tangent(0.0), {3.0, 8.0, 0.0}, kModel);
    const auto b = solve_wind_triangle(level_tangent(0.0), {3.0, -8.0, 0.0}, kModel);
    REQUIRE(a.feasible);
    REQUIRE(b.feasible);
    CHECK(a.ground_speed == doctest::Approx(b.ground_speed).epsilon(1e-15));
  }

  TEST_CASE("the returned root dominates the discarded one") {
    std::mt19937_64 gen(55);
    std::uniform_real_distribution<double> windc(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
      const WindVector wind(windc(gen), windc(gen), 0.0);
      const auto sol = solve_wind_triangle(level_tangent(0.3), wind, kModel);
      if (!sol.feasible) continue;
      const double discarded = -sol.tangential_airspeed + sol.wind_parallel;
      CHECK(sol.ground_speed >= discarded);
    }
  }

  TEST_CASE("state-level feasibility wraps the wind triangle") {
    const UniformWind calm;
    CHECK(feasible_state(State(0, 0, 100, 1.0), calm, kModel));
    const UniformWind downdraft({0.0, 0.0, -15.0});
    CHECK_FALSE(feasible_state(State(0, 0, 100, 1.0), downdraft, kModel));
    const UniformWind updraft({0.0, 0.0, 5.0});
    CHECK(feasible_state(State(0, 0, 100, 1.0), updraft, kModel));
  }
}
