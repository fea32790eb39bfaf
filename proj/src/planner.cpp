/*!
 * \file planner.cpp
 */

#include "windplan/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace windplan {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// deterministic uniform doubles, independent of the standard library's
// distribution implementations
class Rng {
 public:
  explicit Rng(uint32_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

struct MotionEval {
  double objective_cost = 0.0;
  double flight_time = 0.0;
  double energy = 0.0;
  double length = 0.0;
};

struct Node {
  State state;
  int32_t parent = -1;
  double cost_to_come = 0.0;
  MotionEval edge;  // from parent to this node
  std::vector<int32_t> children;
};

struct GoalEdge {
  int32_t node = -1;
  MotionEval edge;
};

// Fused single-traversal motion check: terrain plus wind cost along one sample walk.
class MotionEvaluator {
 public:
  MotionEvaluator(const WindField& field, const ElevationMap* terrain, const VehicleModel& model,
                  const PlannerConfig& config)
      : field_(field), terrain_(terrain), model_(model), config_(config) {}

  std::optional<MotionEval> operator()(const State& from, const State& to) const {
    if (config_.frame == PathFrame::Ground) return evaluate_ground(from, to);
    return evaluate_air(from, to);
  }

 private:
  std::optional<MotionEval> evaluate_ground(const State& from, const State& to) const {
    const DubinsAirplanePath path = dubins_airplane_connect(from, to, model_);
    const double total = path.length();
    const double step = config_.step;
    const auto steps = (total > 0.0) ? static_cast<size_t>(std::ceil(total / step - 1e-9)) : 0;

    MotionEval eval;
    eval.length = total;
    const bool wind_aware = config_.objective != Objective::Distance;

    for (size_t i = 0; i < steps; ++i) {
      const double s = static_cast<double>(i) * step;
      const PathSample sample = path.sample_at(s);
      if (!state_clear(sample.state, terrain_, config_.terrain_clearance)) return std::nullopt;
      if (!wind_aware) continue;
      const WindTriangleSolution tri =
          solve_wind_triangle(sample.tangent, field_.sample(sample.state.position()), model_);
      if (!tri.feasible) return std::nullopt;
      const double dt = std::min(step, total - s) / tri.ground_speed;
      eval.flight_time += dt;
      eval.energy += power(tri.gamma_air, model_) * dt;
    }
    if (!state_clear(path.end(), terrain_, config_.terrain_clearance)) return std::nullopt;

    switch (config_.objective) {
      case Objective::Distance:
        eval.objective_cost = eval.length;
        eval.flight_time = std::numeric_limits<double>::quiet_NaN();
        eval.energy = std::numeric_limits<double>::quiet_NaN();
        break;
      case Objective::Time:
        eval.objective_cost = eval.flight_time;
        break;
      case Objective::Energy:
        eval.objective_cost = eval.energy;
        break;
    }
    return eval;
  }

  std::optional<MotionEval> evaluate_air(const State& from, const State& to) const {
    const AirRelativePath arp = connect_air_relative(from, to, field_, model_, config_.air);
    if (!arp.converged) return std::nullopt;
    for (const Eigen::Vector3d& p : arp.ground_track) {
      if (terrain_ != nullptr &&
          p.z() < terrain_->elevation_at(p.x(), p.y()) + config_.terrain_clearance) {
        return std::nullopt;
      }
    }
    const CostReport cost = cost_air_relative(arp, model_, config_.objective);
    if (!cost.feasible) return std::nullopt;
    MotionEval eval;
    eval.objective_cost = cost.objective_value;
    eval.flight_time = cost.flight_time;
    eval.energy = cost.energy;
    eval.length = cost.length;
    return eval;
  }

  const WindField& field_;
  const ElevationMap* terrain_;
  const VehicleModel& model_;
  const PlannerConfig& config_;
};

// Ball volume of the proxy metric ||dp|| + r_turn * |dtheta| inside a box with
// heading wrap: used to calibrate the shrinking rewiring radius.
double proxy_ball_volume(double r, double r_turn) {
  const double qm = std::min(kPi, r / r_turn);
  const double inner = r - r_turn * qm;
  return (2.0 / r_turn) * (4.0 * kPi / 3.0) * 0.25 * (std::pow(r, 4) - std::pow(inner, 4));
}

double calibrate_rewire_gamma(const Box& bounds, double r_turn) {
  // choose the radius so the ball holds ~10 expected neighbors at n = 500
  const double space = std::max(bounds.volume(), 1e-9) * kTwoPi;
  const double target_volume = 10.0 * space / 500.0;
  double lo = 1e-6, hi = 1e7;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (proxy_ball_volume(mid, r_turn) < target_volume ? lo : hi) = mid;
  }
  const double r500 = 0.5 * (lo + hi);
  return r500 / std::pow(std::log(500.0) / 500.0, 0.25);
}

}  // namespace

std::string to_string(PathFrame frame) {
  return frame == PathFrame::Ground ? "ground" : "air";
}

Planner::Planner(const WindField& field, const ElevationMap* terrain, const VehicleModel& model,
                 PlannerConfig config)
    : field_(field), terrain_(terrain), model_(model), config_(std::move(config)) {
  if (!model_.valid()) throw std::invalid_argument("planner: invalid vehicle model");
  if (config_.budget_s <= 0.0 && config_.max_iterations == 0) {
    throw std::invalid_argument("planner: needs a positive budget or an iteration cap");
  }
  if (config_.bounds.degenerate()) throw std::invalid_argument("planner: degenerate sampling bounds");
  if (config_.goal_bias < 0.0 || config_.goal_bias >= 1.0) {
    throw std::invalid_argument("planner: goal bias must be in [0, 1)");
  }
  if (config_.step <= 0.0) throw std::invalid_argument("planner: step must be > 0");
  rewire_gamma_ = config_.rewire_factor * calibrate_rewire_gamma(config_.bounds, model_.turn_radius());
}

double Planner::proxy_distance(const State& a, const State& b) const {
  const double dp = (a.position() - b.position()).norm();
  return dp + model_.turn_radius() * heading_distance(a.heading, b.heading);
}

PlanResult Planner::plan(const State& start, const State& goal) {
  const auto t0 = Clock::now();
  PlanResult result;

  MotionEvaluator evaluate(field_, terrain_, model_, config_);
  Rng rng(config_.seed);

  const double r_turn = model_.turn_radius();
  const double goal_connect_max = (config_.goal_connect_max > 0.0)
                                      ? config_.goal_connect_max
                                      : 2.0 * config_.bounds.diagonal() + kPi * r_turn;

  std::vector<Node> nodes;
  nodes.push_back(Node{start, -1, 0.0, {}, {}});

  std::vector<GoalEdge> goal_edges;
  double best_cost = std::numeric_limits<double>::infinity();
  int32_t best_goal_edge = -1;
  auto& metrics = result.metrics;

  // start must itself be usable; wind feasibility of the bare state uses a level tangent
  const bool start_ok = start.finite() && goal.finite() &&
                        state_clear(start, terrain_, config_.terrain_clearance) &&
                        (config_.objective == Objective::Distance ||
                         config_.frame == PathFrame::Air ||
                         feasible_state(start, field_, model_));

  const auto record_best = [&](double cost) {
    const double now = elapsed_seconds(t0);
    if (!metrics.success) {
      metrics.success = true;
      metrics.t_first_solution_s = now;
    }
    best_cost = cost;
    metrics.best_cost_trace.push_back({now, cost});
  };

  const auto try_goal_connection = [&](int32_t node_idx) {
    if (proxy_distance(nodes[node_idx].state, goal) > goal_connect_max) return;
    if (auto eval = evaluate(nodes[node_idx].state, goal)) {
      goal_edges.push_back({node_idx, *eval});
      const double cost = nodes[node_idx].cost_to_come + eval->objective_cost;
      if (cost < best_cost) {
        best_goal_edge = static_cast<int32_t>(goal_edges.size()) - 1;
        record_best(cost);
      }
    }
  };

  std::vector<double> dist;   // proxy distances scratch
  std::vector<int32_t> near;  // near-set scratch
  std::vector<int32_t> stack;

  if (start_ok) {
    try_goal_connection(0);

    while (true) {
      if (config_.budget_s > 0.0 && elapsed_seconds(t0) >= config_.budget_s) break;
      if (config_.max_iterations > 0 && metrics.iterations >= config_.max_iterations) break;
      if (config_.stop_on_first_solution && metrics.success) break;
      ++metrics.iterations;

      State x_rand;
      if (rng.uniform() < config_.goal_bias) {
        x_rand = goal;
      } else {
        x_rand = State(rng.uniform(config_.bounds.min.x(), config_.bounds.max.x()),
                       rng.uniform(config_.bounds.min.y(), config_.bounds.max.y()),
                       rng.uniform(config_.bounds.min.z(), config_.bounds.max.z()),
                       rng.uniform(0.0, kTwoPi));
      }

      const auto n = nodes.size();
      dist.resize(n);
      size_t nearest = 0;
      for (size_t i = 0; i < n; ++i) {
        dist[i] = proxy_distance(nodes[i].state, x_rand);
        if (dist[i] < dist[nearest]) nearest = i;
      }
      if (dist[nearest] < 1e-6) continue;  // sample coincides with an existing node

      const double radius =
          rewire_gamma_ * std::pow(std::log(static_cast<double>(n) + 1.0) / (static_cast<double>(n) + 1.0), 0.25);
      near.clear();
      for (size_t i = 0; i < n; ++i) {
        if (dist[i] <= radius) near.push_back(static_cast<int32_t>(i));
      }

      // best valid parent among the near set (nearest included as fallback)
      int32_t parent = -1;
      MotionEval parent_edge;
      double parent_cost = std::numeric_limits<double>::infinity();
      const auto consider_parent = [&](int32_t idx) {
        if (auto eval = evaluate(nodes[idx].state, x_rand)) {
          const double cost = nodes[idx].cost_to_come + eval->objective_cost;
          if (cost < parent_cost) {
            parent = idx;
            parent_edge = *eval;
            parent_cost = cost;
          }
        }
      };
      bool nearest_in_near = false;
      for (int32_t idx : near) {
        if (static_cast<size_t>(idx) == nearest) nearest_in_near = true;
        consider_parent(idx);
      }
      if (!nearest_in_near) consider_parent(static_cast<int32_t>(nearest));
      if (parent < 0) continue;

      const auto new_idx = static_cast<int32_t>(nodes.size());
      nodes.push_back(Node{x_rand, parent, parent_cost, parent_edge, {}});
      nodes[parent].children.push_back(new_idx);

      // rewire the near set through the new node
      bool improved = false;
      for (int32_t idx : near) {
        if (idx == parent || idx == 0) continue;
        if (auto eval = evaluate(x_rand, nodes[idx].state)) {
          const double cost = parent_cost + eval->objective_cost;
          if (cost + 1e-12 < nodes[idx].cost_to_come) {
            Node& rewired = nodes[idx];
            auto& siblings = nodes[rewired.parent].children;
            siblings.erase(std::find(siblings.begin(), siblings.end(), idx));
            rewired.parent = new_idx;
            rewired.edge = *eval;
            nodes[new_idx].children.push_back(idx);
            // refresh cost-to-come through the whole rewired subtree
            stack.assign(1, idx);
            while (!stack.empty()) {
              const int32_t at = stack.back();
              stack.pop_back();
              nodes[at].cost_to_come =
                  nodes[nodes[at].parent].cost_to_come + nodes[at].edge.objective_cost;
              stack.insert(stack.end(), nodes[at].children.begin(), nodes[at].children.end());
            }
            improved = true;
          }
        }
      }

      try_goal_connection(new_idx);

      if (improved && !goal_edges.empty()) {
        double cost = best_cost;
        int32_t arg = best_goal_edge;
        for (int32_t g = 0; g < static_cast<int32_t>(goal_edges.size()); ++g) {
          const double c = nodes[goal_edges[g].node].cost_to_come + goal_edges[g].edge.objective_cost;
          if (c < cost) {
            cost = c;
            arg = g;
          }
        }
        if (arg != best_goal_edge || cost < best_cost) {
          best_goal_edge = arg;
          if (cost < best_cost) record_best(cost);
        }
      }
    }
  }

  metrics.planning_time_s = elapsed_seconds(t0);
  metrics.graph_states = nodes.size();
  metrics.objective_value = best_cost;

  if (!metrics.success) return result;
  result.success = true;

  // chain of states root -> best node -> goal
  std::vector<int32_t> chain;
  for (int32_t at = goal_edges[best_goal_edge].node; at >= 0; at = nodes[at].parent) {
    chain.push_back(at);
  }
  std::reverse(chain.begin(), chain.end());
  for (int32_t idx : chain) result.states.push_back(nodes[idx].state);
  result.states.push_back(goal);

  // re-derive the solution geometry and costs edge by edge
  double flight_time = 0.0, energy = 0.0, length = 0.0;
  for (size_t i = 0; i + 1 < result.states.size(); ++i) {
    SolutionEdge edge;
    edge.from = result.states[i];
    edge.to = result.states[i + 1];
    if (config_.frame == PathFrame::Ground) {
      edge.geometry = dubins_airplane_connect(edge.from, edge.to, model_);
      edge.cost = integrate_cost(edge.geometry, field_, model_, config_.objective, config_.step);
    } else {
      edge.air = connect_air_relative(edge.from, edge.to, field_, model_, config_.air);
      edge.geometry = edge.air->air_path;
      edge.cost = cost_air_relative(*edge.air, model_, config_.objective);
    }
    flight_time += edge.cost.flight_time;
    energy += edge.cost.energy;
    length += edge.cost.length;
    result.edges.push_back(std::move(edge));
  }
  metrics.flight_time_s = flight_time;
  metrics.energy_j = energy;
  metrics.length_m = length;
  return result;
}

ValidationReport validate_plan(const PlanResult& result, const WindField& field,
                               const ElevationMap* terrain, const VehicleModel& model,
                               const PlannerConfig& config) {
  ValidationReport report;
  if (!result.success || result.states.size() < 2) return report;

  double objective = 0.0;
  for (size_t i = 0; i + 1 < result.states.size(); ++i) {
    const State& from = result.states[i];
    const State& to = result.states[i + 1];
    if (config.frame == PathFrame::Ground) {
      const DubinsAirplanePath path = dubins_airplane_connect(from, to, model);
      if (!motion_clear(path, terrain, config.terrain_clearance, config.step)) return report;
      const CostReport cost = integrate_cost(path, field, model, config.objective, config.step);
      if (config.objective != Objective::Distance && !cost.feasible) return report;
      objective += cost.objective_value;
    } else {
      const AirRelativePath arp = connect_air_relative(from, to, field, model, config.air);
      if (!arp.converged) return report;
      for (const Eigen::Vector3d& p : arp.ground_track) {
        if (terrain != nullptr &&
            p.z() < terrain->elevation_at(p.x(), p.y()) + config.terrain_clearance) {
          return report;
        }
      }
      const CostReport cost = cost_air_relative(arp, model, config.objective);
      if (!cost.feasible) return report;
      objective += cost.objective_value;
    }
  }
  report.feasible = true;
  report.objective_value = objective;
  return report;
}

}  // namespace windplan
