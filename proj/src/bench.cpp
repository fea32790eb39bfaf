/*!
 * \file bench.cpp
 */

#include "windplan/bench.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace windplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// flight time / energy of a returned path under the energy integrator,
// regardless of the objective it was planned with (Table-style reporting)
std::pair<double, double> reevaluate_time_energy(const PlanResult& result, const WindField& field,
                                                 const VehicleModel& model, PathFrame frame,
                                                 double step, const AirRelativeOptions& air) {
  double time = 0.0, energy = 0.0;
  for (const SolutionEdge& edge : result.edges) {
    CostReport cost;
    if (frame == PathFrame::Ground) {
      cost = integrate_cost(edge.geometry, field, model, Objective::Energy, step);
    } else {
      AirRelativePath arp = edge.air ? *edge.air : connect_air_relative(edge.from, edge.to, field, model, air);
      cost = cost_air_relative(arp, model, Objective::Energy);
    }
    if (!cost.feasible) return {kInf, kInf};
    time += cost.flight_time;
    energy += cost.energy;
  }
  return {time, energy};
}

RunRecord execute_run(const Scenario& scenario, const WindField& field, const ElevationMap* terrain,
                      Objective objective, PathFrame frame, uint32_t seed) {
  RunRecord row;
  row.scenario = scenario.name;
  row.objective = objective;
  row.frame = frame;
  row.seed = seed;

  Planner planner(field, terrain, scenario.vehicle, planner_config(scenario, objective, frame, seed));
  const PlanResult result = planner.plan(scenario.start, scenario.goal);

  row.graph_states = static_cast<double>(result.metrics.graph_states);
  row.t_first_solution_s = result.metrics.t_first_solution_s;
  row.planning_time_s = result.metrics.planning_time_s;
  row.length_m = result.metrics.length_m;
  row.success = result.metrics.success;

  if (result.success) {
    if (objective == Objective::Distance) {
      const auto [time, energy] = reevaluate_time_energy(result, field, scenario.vehicle, frame,
                                                         scenario.step, AirRelativeOptions{});
      row.flight_time_s = time;
      row.energy_j = energy;
    } else {
      row.flight_time_s = result.metrics.flight_time_s;
      row.energy_j = result.metrics.energy_j;
    }
  }
  return row;
}

}  // namespace

Stat compute_stat(const std::vector<double>& values) {
  Stat stat;
  if (values.empty()) return stat;
  for (double v : values) {
    if (!std::isfinite(v)) return stat;  // any failed/infinite run poisons the aggregate
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  stat.mean = mean;
  stat.stddev = values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1)) : 0.0;
  stat.finite = true;
  return stat;
}

bool operator==(const RunRecord& a, const RunRecord& b) {
  const auto same = [](double x, double y) {
    if (std::isnan(x) && std::isnan(y)) return true;
    return x == y;
  };
  return a.scenario == b.scenario && a.objective == b.objective && a.frame == b.frame &&
         a.seed == b.seed && same(a.graph_states, b.graph_states) &&
         same(a.t_first_solution_s, b.t_first_solution_s) &&
         same(a.planning_time_s, b.planning_time_s) && same(a.flight_time_s, b.flight_time_s) &&
         same(a.energy_j, b.energy_j) && same(a.length_m, b.length_m) && a.success == b.success;
}

BenchmarkReport run_benchmark(const Scenario& scenario, int runs,
                              const std::vector<uint32_t>& seeds, int jobs,
                              std::ostream* progress) {
  if (runs < 1) throw ScenarioError("run_benchmark: runs must be >= 1");
  if (static_cast<size_t>(runs) > seeds.size()) {
    throw ScenarioError("run_benchmark: not enough seeds for the requested runs");
  }

  // scenario load failures surface before any run
  const std::unique_ptr<WindField> field = build_wind(scenario);
  const std::optional<ElevationMap> terrain = build_terrain(scenario);
  const ElevationMap* terrain_ptr = terrain ? &*terrain : nullptr;

  struct Task {
    Objective objective;
    PathFrame frame;
    uint32_t seed;
  };
  std::vector<Task> tasks;
  for (PathFrame frame : scenario.frames) {
    for (Objective objective : scenario.objectives) {
      for (int i = 0; i < runs; ++i) tasks.push_back({objective, frame, seeds[i]});
    }
  }

  BenchmarkReport report;
  report.scenario = scenario.name;
  report.rows.resize(tasks.size());

  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) {
      const Task& t = tasks[i];
      report.rows[i] = execute_run(scenario, *field, terrain_ptr, t.objective, t.frame, t.seed);
      if (progress) {
        *progress << "run " << (i + 1) << "/" << tasks.size() << " " << to_string(t.objective)
                  << "/" << to_string(t.frame) << " seed " << t.seed
                  << (report.rows[i].success ? " ok" : " no-solution") << "\n";
      }
    }
  } else {
    std::vector<std::future<RunRecord>> futures(tasks.size());
    size_t next = 0;
    while (next < tasks.size()) {
      const size_t batch = std::min<size_t>(jobs, tasks.size() - next);
      for (size_t b = 0; b < batch; ++b) {
        const Task& t = tasks[next + b];
        futures[next + b] = std::async(std::launch::async, [&, t] {
          return execute_run(scenario, *field, terrain_ptr, t.objective, t.frame, t.seed);
        });
      }
      for (size_t b = 0; b < batch; ++b) report.rows[next + b] = futures[next + b].get();
      next += batch;
      if (progress) *progress << "completed " << next << "/" << tasks.size() << " runs\n";
    }
  }
  return report;
}

std::vector<ConfigAggregate> aggregate_report(const BenchmarkReport& report) {
  std::vector<ConfigAggregate> aggregates;
  const auto find = [&](Objective o, PathFrame f) -> ConfigAggregate& {
    for (ConfigAggregate& a : aggregates) {
      if (a.objective == o && a.frame == f) return a;
    }
    aggregates.push_back({o, f, 0, 0.0, {}, {}, {}, {}, {}});
    return aggregates.back();
  };

  struct Samples {
    std::vector<double> graph, tfirst, time, energy, length;
    size_t successes = 0, runs = 0;
  };
  std::vector<std::pair<std::pair<Objective, PathFrame>, Samples>> buckets;
  for (const RunRecord& row : report.rows) {
    Samples* samples = nullptr;
    for (auto& [key, s] : buckets) {
      if (key.first == row.objective && key.second == row.frame) samples = &s;
    }
    if (!samples) {
      buckets.push_back({{row.objective, row.frame}, {}});
      samples = &buckets.back().second;
    }
    ++samples->runs;
    if (row.success) ++samples->successes;
    samples->graph.push_back(row.graph_states);
    samples->tfirst.push_back(row.t_first_solution_s);
    samples->time.push_back(row.flight_time_s);
    samples->energy.push_back(row.energy_j);
    samples->length.push_back(row.length_m);
  }

  for (const auto& [key, s] : buckets) {
    ConfigAggregate& agg = find(key.first, key.second);
    agg.runs = s.runs;
    agg.success_percent = 100.0 * static_cast<double>(s.successes) / static_cast<double>(s.runs);
    agg.graph_states = compute_stat(s.graph);
    agg.t_first_solution_s = compute_stat(s.tfirst);
    agg.flight_time_s = compute_stat(s.time);
    agg.energy_j = compute_stat(s.energy);
    agg.length_m = compute_stat(s.length);
  }
  return aggregates;
}

namespace {

void put_real(std::ostream& out, double v) {
  if (std::isnan(v)) {
    out << "nan";
  } else if (std::isinf(v)) {
    out << (v > 0 ? "inf" : "-inf");
  } else {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  }
}

double parse_real_cell(const std::string& cell) {
  if (cell == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (cell == "inf") return kInf;
  if (cell == "-inf") return -kInf;
  return std::stod(cell);
}

std::string stat_cell(const Stat& stat, const char* fmt = "%.4g") {
  if (!stat.finite) return "inf +- inf";
  char buf[96], b2[32], b3[32];
  std::snprintf(b2, sizeof(b2), fmt, stat.mean);
  std::snprintf(b3, sizeof(b3), fmt, stat.stddev);
  std::snprintf(buf, sizeof(buf), "%s +- %s", b2, b3);
  return buf;
}

}  // namespace

void emit_report_delimited(const BenchmarkReport& report, std::ostream& out) {
  out << "scenario,objective,frame,seed,graph_states,t_first_solution_s,planning_time_s,"
         "flight_time_s,energy_J,length_m,success\n";
  for (const RunRecord& row : report.rows) {
    out << row.scenario << ',' << to_string(row.objective) << ',' << to_string(row.frame) << ','
        << row.seed << ',';
    put_real(out, row.graph_states);
    out << ',';
    put_real(out, row.t_first_solution_s);
    out << ',';
    put_real(out, row.planning_time_s);
    out << ',';
    put_real(out, row.flight_time_s);
    out << ',';
    put_real(out, row.energy_j);
    out << ',';
    put_real(out, row.length_m);
    out << ',' << (row.success ? 1 : 0) << '\n';
  }
}

BenchmarkReport parse_report_delimited(std::istream& in) {
  BenchmarkReport report;
  std::string line;
  if (!std::getline(in, line)) throw ScenarioError("report: missing header line");
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 11) {
      throw ScenarioError("report: line " + std::to_string(line_no) + ": expected 11 cells");
    }
    RunRecord row;
    row.scenario = cells[0];
    row.objective = objective_from_string(cells[1]);
    row.frame = frame_from_string(cells[2]);
    row.seed = static_cast<uint32_t>(std::stoul(cells[3]));
    row.graph_states = parse_real_cell(cells[4]);
    row.t_first_solution_s = parse_real_cell(cells[5]);
    row.planning_time_s = parse_real_cell(cells[6]);
    row.flight_time_s = parse_real_cell(cells[7]);
    row.energy_j = parse_real_cell(cells[8]);
    row.length_m = parse_real_cell(cells[9]);
    row.success = cells[10] == "1";
    if (report.scenario.empty()) report.scenario = row.scenario;
    report.rows.push_back(std::move(row));
  }
  return report;
}

void emit_report_table(const BenchmarkReport& report, std::ostream& out) {
  out << "scenario: " << report.scenario << "\n";
  out << std::left << std::setw(10) << "objective" << std::setw(8) << "frame" << std::setw(6)
      << "runs" << std::setw(10) << "success%" << std::setw(20) << "graph_states" << std::setw(20)
      << "t_first_s" << std::setw(22) << "flight_time_s" << std::setw(24) << "energy_J"
      << std::setw(20) << "length_m" << "\n";
  for (const ConfigAggregate& agg : aggregate_report(report)) {
    char success[16];
    std::snprintf(success, sizeof(success), "%.0f", agg.success_percent);
    out << std::left << std::setw(10) << to_string(agg.objective) << std::setw(8)
        << to_string(agg.frame) << std::setw(6) << agg.runs << std::setw(10) << success
        << std::setw(20) << stat_cell(agg.graph_states) << std::setw(20)
        << stat_cell(agg.t_first_solution_s) << std::setw(22) << stat_cell(agg.flight_time_s)
        << std::setw(24) << stat_cell(agg.energy_j, "%.6g") << std::setw(20)
        << stat_cell(agg.length_m) << "\n";
  }
}

}  // namespace windplan
