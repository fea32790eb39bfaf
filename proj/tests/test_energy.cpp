#include <doctest.h>

#include <sstream>

#include "windplan/energy.hpp"

using namespace windplan;

namespace {

const VehicleModel kModel;

DubinsAirplanePath straight_path(double length, double heading = 0.0, double gamma = 0.0,
                                 double z0 = 100.0) {
  PathSegment seg;
  seg.kind = SegmentKind::Straight;
  seg.horizontal_length = length * std::cos(gamma);
  seg.curvature = 0.0;
  seg.gamma = gamma;
  seg.start = State(0.0, 0.0, z0, heading);
  return DubinsAirplanePath({seg}, DubinsWord::LSL);
}

// wind field that records whether it was ever sampled
class CountingWind final : public WindField {
 public:
  WindVector sample(const Eigen::Vector3d&) const override {
    ++samples;
    return WindVector::Zero();
  }
  mutable int samples = 0;
};

}  // namespace

TEST_SUITE("energy") {
  TEST_CASE("level thrust equals drag") {
    CHECK(thrust(0.0, kModel) == doctest::Approx(5.0));
  }

  TEST_CASE("climbing thrust adds the weight component") {
    CHECK(thrust(deg2rad(20.0), kModel) ==
          doctest::Approx(5.0 + 5.0 * 9.80665 * std::sin(deg2rad(20.0))).epsilon(1e-12));
    CHECK(thrust(deg2rad(20.0), kModel) == doctest::Approx(21.77).epsilon(1e-3));
  }

  TEST_CASE("steep descent clamps thrust at zero") {
    CHECK(thrust(deg2rad(-10.0), kModel) == 0.0);
  }

  TEST_CASE("level power is 310 W with the default model") {
    CHECK(power(0.0, kModel) == doctest::Approx(310.0));
  }

  TEST_CASE("zero-thrust descent still draws avionics power") {
    CHECK(power(deg2rad(-10.0), kModel) == doctest::Approx(60.0));
  }

  TEST_CASE("max-climb power") {
    CHECK(power(deg2rad(20.0), kModel) == doctest::Approx(1148.5).epsilon(1e-3));
  }

  TEST_CASE("straight level path in calm air") {
    const UniformWind calm;
    const CostReport r = integrate_cost(straight_path(1500.0), calm, kModel, Objective::Energy, 10.0);
    REQUIRE(r.feasible);
    CHECK(r.flight_time == doctest::Approx(100.0).epsilon(1e-9));
    CHECK(r.energy == doctest::Approx(31000.0).epsilon(1e-9));
    CHECK(r.length == doctest::Approx(1500.0));
    CHECK(r.objective_value == doctest::Approx(31000.0));
  }

  TEST_CASE("head-on wind equal to the airspeed is infinitely expensive") {
    const UniformWind headwind({-15.0, 0.0, 0.0});
    const CostReport r = integrate_cost(straight_path(1500.0), headwind, kModel, Objective::Energy, 10.0);
    CHECK_FALSE(r.feasible);
    CHECK(std::isinf(r.objective_value));
    const CostReport t = integrate_cost(straight_path(1500.0), headwind, kModel, Objective::Time, 10.0);
    CHECK(std::isinf(t.objective_value));
  }

  TEST_CASE("distance objective ignores wind entirely") {
    const CountingWind wind;
    const CostReport r = integrate_cost(straight_path(800.0), wind, kModel, Objective::Distance, 10.0);
    CHECK(r.objective_value == doctest::Approx(800.0));
    CHECK(r.feasible);
    CHECK(wind.samples == 0);
    CHECK(std::isnan(r.flight_time));
  }

  TEST_CASE("tailwind shortens time but not power") {
    const UniformWind tail({5.0, 0.0, 0.0});
    const double length = 1400.0;
    const CostReport r = integrate_cost(straight_path(length), tail, kModel, Objective::Energy, 10.0);
    REQUIRE(r.feasible);
    CHECK(r.flight_time == doctest::Approx(length / 20.0).epsilon(1e-9));
    CHECK(r.energy == doctest::Approx(310.0 * length / 20.0).epsilon(1e-9));
  }

  TEST_CASE("step refinement changes smooth-field costs by less than a percent") {
    // smooth analytic fields: calm air and a gentle uniform crosswind
    for (const WindVector& w : {WindVector(0, 0, 0), WindVector(3, 4, 0.5)}) {
      const UniformWind field(w);
      const DubinsAirplanePath path = dubins_airplane_connect(
          State(0, 0, 100, 0.3), State(900, 300, 140, 2.0), kModel);
      const double coarse = integrate_cost(path, field, kModel, Objective::Energy, 10.0).objective_value;
      const double fine = integrate_cost(path, field, kModel, Objective::Energy, 1.0).objective_value;
      CHECK(std::fabs(coarse - fine) / fine < 0.01);
    }
  }

  TEST_CASE("costs add over concatenated paths") {
    const UniformWind field({2.0, -1.0, 0.2});
    const State a(0, 0, 100, 0.0);
    const State m(600, 150, 120, 0.7);
    const State b(1200, -200, 90, 5.5);
    const DubinsAirplanePath whole_am = dubins_airplane_connect(a, m, kModel);
    const DubinsAirplanePath whole_mb = dubins_airplane_connect(m, b, kModel);
    const double parts = integrate_cost(whole_am, field, kModel, Objective::Energy, 1.0).objective_value +
                         integrate_cost(whole_mb, field, kModel, Objective::Energy, 1.0).objective_value;
    const double am = integrate_cost(whole_am, field, kModel, Objective::Energy, 10.0).objective_value;
    const double mb = integrate_cost(whole_mb, field, kModel, Objective::Energy, 10.0).objective_value;
    CHECK(std::fabs((am + mb) - parts) / parts < 0.01);
  }

  TEST_CASE("zero-wind level costs are proportional, so objectives rank alike") {
    const UniformWind calm;
    std::vector<DubinsAirplanePath> candidates;
    candidates.push_back(straight_path(1000.0));
    candidates.push_back(straight_path(1700.0, 0.4));
    candidates.push_back(dubins_airplane_connect(State(0, 0, 100, 0), State(500, 300, 100, 3.0), kModel));

    size_t best_time = 0, best_energy = 0, best_length = 0;
    for (size_t i = 0; i < candidates.size(); ++i) {
      const CostReport r = integrate_cost(candidates[i], calm, kModel, Objective::Energy, 10.0);
      REQUIRE(r.feasible);
      CHECK(r.flight_time == doctest::Approx(r.length / 15.0).epsilon(1e-12));
      CHECK(r.energy == doctest::Approx(310.0 * r.flight_time).epsilon(1e-12));
      if (r.flight_time < integrate_cost(candidates[best_time], calm, kModel, Objective::Energy, 10.0).flight_time) best_time = i;
      if (r.energy < integrate_cost(candidates[best_energy], calm, kModel, Objective::Energy, 10.0).energy) best_energy = i;
      if (r.length < integrate_cost(candidates[best_length], calm, kModel, Objective::Energy, 10.0).length) best_length = i;
    }
    CHECK(best_time == best_energy);
    CHECK(best_time == best_length);
  }

  TEST_CASE("climbing inside a strong updraft costs only avionics power") {
    const UniformWind updraft({0.0, 0.0, 5.0});
    const double gamma = deg2rad(10.0);
    const CostReport r =
        integrate_cost(straight_path(500.0, 0.0, gamma), updraft, kModel, Objective::Energy, 10.0);
    REQUIRE(r.feasible);
    // climb rate stays below the updraft, so gamma_air < 0 and thrust clamps to zero
    CHECK(r.energy == doctest::Approx(kModel.avionics_power_w * r.flight_time).epsilon(1e-12));
  }

  TEST_CASE("energy never undercuts avionics power times flight time") {
    const UniformWind field({4.0, 2.0, -1.0});
    const CostReport r = integrate_cost(straight_path(1200.0, 1.0), field, kModel, Objective::Energy, 10.0);
    REQUIRE(r.feasible);
    CHECK(r.energy >= kModel.avionics_power_w * r.flight_time - 1e-9);
  }

  TEST_CASE("trace export has one row per integration segment") {
    const UniformWind calm;
    const CostReport r = integrate_cost(straight_path(100.0), calm, kModel, Objective::Energy, 10.0, true);
    CHECK(r.trace.size() == 10);
    std::ostringstream out;
    write_trace(out, r);
    const std::string text = out.str();
    CHECK(text.find("s,x,y,z,heading,wx,wy,wz,V_ground,gamma_air_deg,power_W,cum_time_s,cum_energy_J") == 0);
    // header plus one line per row
    CHECK(std::count(text.begin(), text.end(), '\n') == 11);
  }
}
