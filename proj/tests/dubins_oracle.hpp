/*!
 * \file dubins_oracle.hpp
 *
 * \brief Test-only brute-force Dubins oracle. Parameterizes every word class
 * by its first arc angle, dense-scans that parameter, refines candidate roots
 * by bisection, and validates each candidate by rolling the segments out and
 * checking the endpoint. Shares no code with the closed-form solver it checks.
 */

#ifndef WINDPLAN_TESTS_DUBINS_ORACLE_HPP_
#define WINDPLAN_TESTS_DUBINS_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "windplan/core.hpp"

namespace windplan::oracle {

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double th = 0.0;
};

inline Pose arc_roll(const Pose& p, double angle, int dir, double radius) {
  const double nx = dir > 0 ? -std::sin(p.th) : std::sin(p.th);
  const double ny = dir > 0 ? std::cos(p.th) : -std::cos(p.th);
  const double cx = p.x + radius * nx;
  const double cy = p.y + radius * ny;
  const double a0 = std::atan2(p.y - cy, p.x - cx);
  const double a1 = a0 + dir * angle;
  return {cx + radius * std::cos(a1), cy + radius * std::sin(a1), p.th + dir * angle};
}

inline Pose straight_roll(const Pose& p, double length) {
  return {p.x + length * std::cos(p.th), p.y + length * std::sin(p.th), p.th};
}

inline bool pose_matches(const Pose& p, const Pose& goal, double tol) {
  return std::hypot(p.x - goal.x, p.y - goal.y) < tol &&
         heading_distance(mod_2pi(p.th), mod_2pi(goal.th)) < tol;
}

namespace detail {

struct Word {
  int d1;
  int dmid;  // 0 for CSC words
  int d2;
};

inline const std::vector<Word>& words() {
  static const std::vector<Word> w = {
      {+1, 0, +1},   // LSL
      {-1, 0, -1},   // RSR
      {+1, 0, -1},   // LSR
      {-1, 0, +1},   // RSL
      {-1, +1, -1},  // RLR
      {+1, -1, +1},  // LRL
  };
  return w;
}

// final-arc start point and swept angle implied by the headings
struct FinalArc {
  Pose entry;
  double q;
};

inline FinalArc final_arc(const Pose& goal, double theta_before, int d2, double radius) {
  FinalArc fa;
  fa.q = mod_2pi(d2 > 0 ? goal.th - theta_before : theta_before - goal.th);
  const double nx = d2 > 0 ? -std::sin(goal.th) : std::sin(goal.th);
  const double ny = d2 > 0 ? std::cos(goal.th) : -std::cos(goal.th);
  const double cx = goal.x + radius * nx;
  const double cy = goal.y + radius * ny;
  const double a_goal = std::atan2(goal.y - cy, goal.x - cx);
  const double a_entry = a_goal - d2 * fa.q;
  fa.entry = {cx + radius * std::cos(a_entry), cy + radius * std::sin(a_entry), theta_before};
  return fa;
}

inline std::optional<double> csc_candidate(const Pose& start, const Pose& goal, const Word& word,
                                           double t, double radius, double tol) {
  const Pose p1 = arc_roll(start, t, word.d1, radius);
  for (double q_shift : {0.0, -kTwoPi}) {
    FinalArc fa = final_arc(goal, p1.th, word.d2, radius);
    double q = fa.q + q_shift;
    if (q < -1e-9) continue;
    q = std::max(q, 0.0);
    const double vx = fa.entry.x - p1.x;
    const double vy = fa.entry.y - p1.y;
    const double p = std::hypot(vx, vy);
    if (p > tol && vx * std::cos(p1.th) + vy * std::sin(p1.th) < 0.0) continue;  // backward straight
    Pose end = arc_roll(straight_roll(p1, p), q, word.d2, radius);
    if (!pose_matches(end, goal, 1e-6)) continue;
    return radius * (t + q) + p;
  }
  return std::nullopt;
}

// straight-connector misalignment; roots are CSC solutions
inline double csc_residual(const Pose& start, const Pose& goal, const Word& word, double t,
                           double radius) {
  const Pose p1 = arc_roll(start, t, word.d1, radius);
  const FinalArc fa = final_arc(goal, p1.th, word.d2, radius);
  const double vx = fa.entry.x - p1.x;
  const double vy = fa.entry.y - p1.y;
  if (std::hypot(vx, vy) < 1e-12) return 0.0;
  return wrap_pi(std::atan2(vy, vx) - p1.th);
}

inline std::optional<double> ccc_candidate(const Pose& start, const Pose& goal, const Word& word,
                                           double t, double radius) {
  const Pose p1 = arc_roll(start, t, word.d1, radius);
  const int dm = word.dmid;
  // middle circle center (opposite side of the first turn)
  const double nx = dm > 0 ? -std::sin(p1.th) : std::sin(p1.th);
  const double ny = dm > 0 ? std::cos(p1.th) : -std::cos(p1.th);
  const double c2x = p1.x + radius * nx;
  const double c2y = p1.y + radius * ny;
  // final circle center
  const double gx = goal.x + (word.d2 > 0 ? -std::sin(goal.th) : std::sin(goal.th)) * radius;
  const double gy = goal.y + (word.d2 > 0 ? std::cos(goal.th) : -std::cos(goal.th)) * radius;
  // tangency point of middle and final circles
  const double tx = 0.5 * (c2x + gx);
  const double ty = 0.5 * (c2y + gy);
  const double a_in = std::atan2(p1.y - c2y, p1.x - c2x);
  const double a_out = std::atan2(ty - c2y, tx - c2x);
  const double p = mod_2pi(dm > 0 ? a_out - a_in : a_in - a_out);
  const double theta2 = p1.th + dm * p;
  const double q = mod_2pi(word.d2 > 0 ? goal.th - theta2 : theta2 - goal.th);

  Pose end = arc_roll(arc_roll(p1, p, dm, radius), q, word.d2, radius);
  if (!pose_matches(end, goal, 1e-6)) return std::nullopt;
  return radius * (t + p + q);
}

inline double ccc_residual(const Pose& start, const Pose& goal, const Word& word, double t,
                           double radius) {
  const Pose p1 = arc_roll(start, t, word.d1, radius);
  const int dm = word.dmid;
  const double nx = dm > 0 ? -std::sin(p1.th) : std::sin(p1.th);
  const double ny = dm > 0 ? std::cos(p1.th) : -std::cos(p1.th);
  const double c2x = p1.x + radius * nx;
  const double c2y = p1.y + radius * ny;
  const double gx = goal.x + (word.d2 > 0 ? -std::sin(goal.th) : std::sin(goal.th)) * radius;
  const double gy = goal.y + (word.d2 > 0 ? std::cos(goal.th) : -std::cos(goal.th)) * radius;
  return std::hypot(c2x - gx, c2y - gy) - 2.0 * radius;
}

template <typename ResidualFn, typename CandidateFn>
inline void scan_word(ResidualFn residual, CandidateFn candidate, double& best, int grid) {
  std::vector<double> res(grid + 1);
  const double dt = kTwoPi / grid;
  for (int i = 0; i <= grid; ++i) res[i] = residual(i * dt);

  const auto refine = [&](double lo, double hi) {
    double rlo = residual(lo);
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double rm = residual(mid);
      if ((rm < 0.0) == (rlo < 0.0)) {
        lo = mid;
        rlo = rm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  for (int i = 0; i < grid; ++i) {
    const double a = res[i];
    const double b = res[i + 1];
    const bool wrap_jump = std::fabs(a - b) > kPi;  // atan2 branch crossing, not a root
    if (!wrap_jump && ((a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0))) {
      const double t = refine(i * dt, (i + 1) * dt);
      for (double tc : {t, i * dt, (i + 1) * dt}) {
        if (auto len = candidate(tc)) best = std::min(best, *len);
      }
    }
    // grazing roots: local minimum of |r| near zero without a sign change
    if (!wrap_jump && std::fabs(a) < 0.05) {
      double lo = std::max(0.0, (i - 1) * dt);
      double hi = std::min(kTwoPi, (i + 1) * dt);
      for (int it = 0; it < 60; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (std::fabs(residual(m1)) < std::fabs(residual(m2))) {
          hi = m2;
        } else {
          lo = m1;
        }
      }
      if (auto len = candidate(0.5 * (lo + hi))) best = std::min(best, *len);
    }
  }
}

}  // namespace detail

/** Minimum Dubins length over all six words by dense parameter search. */
inline double shortest_length(const State& start_state, const State& goal_state, double radius,
                              int grid = 4096) {
  const Pose start{start_state.x, start_state.y, start_state.heading};
  const Pose goal{goal_state.x, goal_state.y, goal_state.heading};
  double best = std::numeric_limits<double>::infinity();

  // degenerate identity
  if (pose_matches(start, goal, 1e-9)) return 0.0;

  for (const detail::Word& word : detail::words()) {
    if (word.dmid == 0) {
      detail::scan_word(
          [&](double t) { return detail::csc_residual(start, goal, word, t, radius); },
          [&](double t) { return detail::csc_candidate(start, goal, word, t, radius, 1e-9); },
          best, grid);
      // zero-length first arc is a valid candidate the scan may miss
      if (auto len = detail::csc_candidate(start, goal, word, 0.0, radius, 1e-9)) {
        best = std::min(best, *len);
      }
    } else {
      detail::scan_word(
          [&](double t) { return detail::ccc_residual(start, goal, word, t, radius); },
          [&](double t) { return detail::ccc_candidate(start, goal, word, t, radius); }, best,
          grid);
    }
  }
  return best;
}

}  // namespace windplan::oracle

#endif  // WINDPLAN_TESTS_DUBINS_ORACLE_HPP_
