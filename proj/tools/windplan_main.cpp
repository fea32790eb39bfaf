/*!
 * \file windplan_main.cpp
 *
 * \brief Command line front end: single planning runs with trace export,
 * repeated-run benchmarks, and synthetic wind-grid generation.
 *
 * Exit codes: 0 success, 1 no solution found, 2 invalid input.
 */

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "windplan/bench.hpp"

namespace {

using namespace windplan;

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitInvalidInput = 2;

// trace rows for one solution edge, appended with running offsets
void append_edge_trace(const SolutionEdge& edge, const WindField& field, const VehicleModel& model,
                       double step, double& s0, CostReport& merged) {
  if (!edge.air) {
    const CostReport cost = integrate_cost(edge.geometry, field, model, Objective::Energy, step, true);
    const double t0 = merged.flight_time;
    const double e0 = merged.energy;
    for (TraceSample row : cost.trace) {
      row.s += s0;
      row.cum_time += t0;
      row.cum_energy += e0;
      merged.trace.push_back(row);
    }
    merged.flight_time += cost.flight_time;
    merged.energy += cost.energy;
    s0 += cost.length;
    return;
  }

  // air-relative edge: rows follow the advected ground track; air-relative
  // variables are constant per segment
  const AirRelativePath& arp = *edge.air;
  const double total = arp.air_path.length();
  const auto steps = (total > 0.0) ? static_cast<size_t>(std::ceil(total / step - 1e-9)) : 0;
  for (size_t i = 0; i < steps; ++i) {
    const double s = static_cast<double>(i) * step;
    const double ds = std::min(step, total - s);
    const State air_state = arp.air_path.state_at(s);
    const Eigen::Vector3d ground = arp.ground_track[std::min(i, arp.ground_track.size() - 1)];
    TraceSample row;
    row.s = s0 + s;
    row.state = State(ground.x(), ground.y(), ground.z(), air_state.heading);
    row.wind = field.sample(ground);
    const double dt = ds / model.airspeed;
    const Eigen::Vector3d next = arp.ground_track[std::min(i + 1, arp.ground_track.size() - 1)];
    row.ground_speed = (next - ground).norm() / dt;
    row.gamma_air = arp.air_path.sample_at(s).tangent.z() > 1.0 ? 0.0 : std::asin(arp.air_path.sample_at(s).tangent.z());
    row.power = power(row.gamma_air, model);
    merged.flight_time += dt;
    merged.energy += row.power * dt;
    row.cum_time = merged.flight_time;
    row.cum_energy = merged.energy;
    merged.trace.push_back(row);
  }
  s0 += total;
}

int run_plan(const std::string& scenario_file, const std::string& objective_name,
             const std::string& frame_name, double budget, uint64_t iterations, uint32_t seed,
             const std::string& trace_file) {
  Scenario scenario = load_scenario(scenario_file);
  if (budget > 0.0) scenario.budget_s = budget;
  if (iterations > 0) scenario.max_iterations = iterations;

  const Objective objective =
      objective_name.empty() ? scenario.objectives.front() : objective_from_string(objective_name);
  const PathFrame frame = frame_name.empty() ? scenario.frames.front() : frame_from_string(frame_name);

  const auto field = build_wind(scenario);
  const auto terrain = build_terrain(scenario);
  Planner planner(*field, terrain ? &*terrain : nullptr, scenario.vehicle,
                  planner_config(scenario, objective, frame, seed));
  const PlanResult result = planner.plan(scenario.start, scenario.goal);
  const PlanMetrics& m = result.metrics;

  std::cout << "scenario: " << scenario.name << "\n"
            << "objective: " << to_string(objective) << "\n"
            << "frame: " << to_string(frame) << "\n"
            << "seed: " << seed << "\n"
            << "success: " << (m.success ? "true" : "false") << "\n"
            << "graph_states: " << m.graph_states << "\n"
            << "iterations: " << m.iterations << "\n"
            << "t_first_solution_s: " << m.t_first_solution_s << "\n"
            << "planning_time_s: " << m.planning_time_s << "\n"
            << "objective_value: " << m.objective_value << "\n"
            << "flight_time_s: " << m.flight_time_s << "\n"
            << "energy_J: " << m.energy_j << "\n"
            << "length_m: " << m.length_m << "\n";

  if (!result.success) return kExitNoSolution;

  if (!trace_file.empty()) {
    CostReport merged;
    double s0 = 0.0;
    for (const SolutionEdge& edge : result.edges) {
      append_edge_trace(edge, *field, scenario.vehicle, scenario.step, s0, merged);
    }
    std::ofstream out(trace_file);
    if (!out) {
      std::cerr << "error: cannot open trace file " << trace_file << "\n";
      return kExitInvalidInput;
    }
    write_trace(out, merged);
  }
  return kExitOk;
}

int run_bench(const std::string& scenario_file, int runs, uint32_t seed_base,
              const std::string& out_file, int jobs) {
  const Scenario scenario = load_scenario(scenario_file);
  std::vector<uint32_t> seeds;
  seeds.reserve(runs);
  for (int i = 0; i < runs; ++i) seeds.push_back(seed_base + static_cast<uint32_t>(i));

  const BenchmarkReport report = run_benchmark(scenario, runs, seeds, jobs, &std::cerr);
  emit_report_table(report, std::cout);
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) {
      std::cerr << "error: cannot open output file " << out_file << "\n";
      return kExitInvalidInput;
    }
    emit_report_delimited(report, out);
  }
  return kExitOk;
}

struct WindgenOptions {
  std::string kind;
  std::vector<double> wind{0.0, 0.0, 0.0};
  std::string axis = "y";
  double boundary = 0.0;
  double magnitude = 0.0;
  std::vector<double> center{0.0, 0.0};
  double radius = 100.0;
  double strength = 0.0;
  std::vector<int> counts{2, 2, 2};
  std::vector<double> origin{0.0, 0.0, 0.0};
  std::vector<double> spacing{100.0, 100.0, 100.0};
  std::string out_file;
};

int run_windgen(const WindgenOptions& opt) {
  WindSpec spec;
  if (opt.kind == "uniform") {
    spec.kind = WindSpec::Kind::Uniform;
    spec.uniform_wind = Eigen::Vector3d(opt.wind[0], opt.wind[1], opt.wind[2]);
  } else if (opt.kind == "shear") {
    spec.kind = WindSpec::Kind::Shear;
    spec.shear_axis = opt.axis == "x" ? HorizontalShearWind::Axis::X : HorizontalShearWind::Axis::Y;
    spec.shear_boundary = opt.boundary;
    spec.shear_magnitude = opt.magnitude;
  } else {
    spec.kind = WindSpec::Kind::Updraft;
    spec.updraft_center = Eigen::Vector2d(opt.center[0], opt.center[1]);
    spec.updraft_radius = opt.radius;
    spec.updraft_strength = opt.strength;
  }
  const auto field = make_synthetic(spec);

  const int nx = opt.counts[0], ny = opt.counts[1], nz = opt.counts[2];
  if (nx < 2 || ny < 2 || nz < 2) {
    std::cerr << "error: grid counts must be >= 2\n";
    return kExitInvalidInput;
  }
  const Eigen::Vector3d origin(opt.origin[0], opt.origin[1], opt.origin[2]);
  const Eigen::Vector3d spacing(opt.spacing[0], opt.spacing[1], opt.spacing[2]);
  const size_t total = static_cast<size_t>(nx) * ny * nz;
  std::vector<double> wx(total), wy(total), wz(total);
  size_t at = 0;
  for (int k = 0; k < nz; ++k) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i, ++at) {
        const Eigen::Vector3d p = origin + spacing.cwiseProduct(Eigen::Vector3d(i, j, k));
        const WindVector w = field->sample(p);
        wx[at] = w.x();
        wy[at] = w.y();
        wz[at] = w.z();
      }
    }
  }
  const GriddedWindField grid(nx, ny, nz, origin, spacing, std::move(wx), std::move(wy), std::move(wz));
  save_wind_grid(grid, std::filesystem::path(opt.out_file));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"windplan: wind-aware fixed-wing path planning and benchmarking"};
  app.require_subcommand(1);

  // plan
  auto* plan = app.add_subcommand("plan", "plan a single scenario run");
  std::string scenario_file, objective_name, frame_name, trace_file;
  double budget = 0.0;
  uint64_t iterations = 0;
  uint32_t seed = 0;
  plan->add_option("--scenario", scenario_file, "scenario file")->required();
  plan->add_option("--objective", objective_name, "distance|time|energy");
  plan->add_option("--frame", frame_name, "ground|air");
  plan->add_option("--budget", budget, "planning budget [s], overrides the scenario");
  plan->add_option("--iterations", iterations, "iteration cap, overrides the scenario");
  plan->add_option("--seed", seed, "RNG seed");
  plan->add_option("--trace", trace_file, "write the solution trace to this file");

  // bench
  auto* bench = app.add_subcommand("bench", "repeated-run benchmark over a scenario");
  std::string bench_scenario, bench_out;
  int runs = 10;
  uint32_t seed_base = 1;
  int jobs = 1;
  bench->add_option("--scenario", bench_scenario, "scenario file")->required();
  bench->add_option("--runs", runs, "runs per configuration");
  bench->add_option("--seed-base", seed_base, "first seed; run i uses seed-base + i");
  bench->add_option("--out", bench_out, "write per-run rows (delimited) to this file");
  bench->add_option("--jobs", jobs, "concurrent runs");

  // windgen
  auto* windgen = app.add_subcommand("windgen", "sample a synthetic field onto a wind-grid file");
  WindgenOptions wopt;
  windgen->add_option("--kind", wopt.kind, "uniform|shear|updraft")->required();
  windgen->add_option("--wind", wopt.wind, "uniform wind vector [m/s]")->expected(3);
  windgen->add_option("--axis", wopt.axis, "shear split axis (x|y)");
  windgen->add_option("--boundary", wopt.boundary, "shear boundary coordinate [m]");
  windgen->add_option("--magnitude", wopt.magnitude, "shear magnitude [m/s]");
  windgen->add_option("--center", wopt.center, "updraft center [m]")->expected(2);
  windgen->add_option("--radius", wopt.radius, "updraft radius [m]");
  windgen->add_option("--strength", wopt.strength, "updraft strength [m/s]");
  windgen->add_option("--counts", wopt.counts, "grid node counts nx ny nz")->expected(3);
  windgen->add_option("--origin", wopt.origin, "grid origin [m]")->expected(3);
  windgen->add_option("--spacing", wopt.spacing, "grid spacing [m]")->expected(3);
  windgen->add_option("--out", wopt.out_file, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (plan->parsed()) {
      return run_plan(scenario_file, objective_name, frame_name, budget, iterations, seed, trace_file);
    }
    if (bench->parsed()) {
      return run_bench(bench_scenario, runs, seed_base, bench_out, jobs);
    }
    if (windgen->parsed()) {
      if (wopt.kind != "uniform" && wopt.kind != "shear" && wopt.kind != "updraft") {
        std::cerr << "error: unknown wind kind '" << wopt.kind << "'\n";
        return kExitInvalidInput;
      }
      return run_windgen(wopt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
