/*!
 * \file bench.hpp
 *
 * \brief Repeated-run benchmark execution over a scenario's objective/frame
 * grid, per-run metric rows, aggregate statistics, and report emission.
 */

#ifndef WINDPLAN_BENCH_HPP_
#define WINDPLAN_BENCH_HPP_

#include <iosfwd>

#include "windplan/scenario.hpp"

namespace windplan {

/** Metrics of a single planner run. */
struct RunRecord {
  std::string scenario;
  Objective objective = Objective::Energy;
  PathFrame frame = PathFrame::Ground;
  uint32_t seed = 0;
  double graph_states = 0.0;
  double t_first_solution_s = std::numeric_limits<double>::quiet_NaN();
  double planning_time_s = 0.0;
  double flight_time_s = std::numeric_limits<double>::quiet_NaN();
  double energy_j = std::numeric_limits<double>::quiet_NaN();
  double length_m = std::numeric_limits<double>::quiet_NaN();
  bool success = false;
};

/** mean +- std of one metric; non-finite when any contributing run lacked a finite value */
struct Stat {
  double mean = std::numeric_limits<double>::infinity();
  double stddev = std::numeric_limits<double>::infinity();
  bool finite = false;
};

Stat compute_stat(const std::vector<double>& values);

struct ConfigAggregate {
  Objective objective = Objective::Energy;
  PathFrame frame = PathFrame::Ground;
  size_t runs = 0;
  double success_percent = 0.0;
  Stat graph_states;
  Stat t_first_solution_s;
  Stat flight_time_s;
  Stat energy_j;
  Stat length_m;
};

struct BenchmarkReport {
  std::string scenario;
  std::vector<RunRecord> rows;
};

bool operator==(const RunRecord& a, const RunRecord& b);
inline bool operator==(const BenchmarkReport& a, const BenchmarkReport& b) {
  return a.scenario == b.scenario && a.rows == b.rows;
}

/** \brief Execute runs x objectives x frames planner invocations.
 *
 * Seeds come from the given list (run i uses seeds[i]); every configuration
 * shares the seed list so runs pair up across configurations. Distance-objective
 * results are re-evaluated with the energy integrator so their reported flight
 * time and energy reflect the wind (possibly inf). `jobs` > 1 fans independent
 * runs out over threads; rows keep a fixed order regardless.
 */
BenchmarkReport run_benchmark(const Scenario& scenario, int runs,
                              const std::vector<uint32_t>& seeds, int jobs = 1,
                              std::ostream* progress = nullptr);

/** Aggregate per-run rows per (objective, frame) configuration. */
std::vector<ConfigAggregate> aggregate_report(const BenchmarkReport& report);

/** Delimited per-run rows; "inf"/"nan" literals for non-finite values. */
void emit_report_delimited(const BenchmarkReport& report, std::ostream& out);
BenchmarkReport parse_report_delimited(std::istream& in);

/** Aggregate table, one row per configuration. */
void emit_report_table(const BenchmarkReport& report, std::ostream& out);

}  // namespace windplan

#endif  // WINDPLAN_BENCH_HPP_
