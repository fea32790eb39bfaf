/*!
 * \file dubins.cpp
 */

#include "windplan/dubins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace windplan {

namespace {

constexpr double kDubinsEps = 1e-12;
// fallback threshold for the classified candidate, normalized by the radius below
constexpr double kClassificationSlackM = 1e-6;

struct WordParams {
  double t = 0.0;
  double p = 0.0;
  double q = 0.0;
  double length() const { return t + p + q; }
};

using MaybeWord = std::optional<WordParams>;

MaybeWord word_lsl(double d, double alpha, double beta, double sa, double sb, double ca, double cb) {
  const double tmp = 2.0 + d * d - 2.0 * (ca * cb + sa * sb - d * (sa - sb));
  if (tmp < 0.0) return std::nullopt;
  const double theta = std::atan2(cb - ca, d + sa - sb);
  return WordParams{mod_2pi(-alpha + theta), std::sqrt(std::max(tmp, 0.0)), mod_2pi(beta - theta)};
}

MaybeWord word_rsr(double d, double alpha, double beta, double sa, double sb, double ca, double cb) {
  const double tmp = 2.0 + d * d - 2.0 * (ca * cb + sa * sb - d * (sb - sa));
  if (tmp < 0.0) return std::nullopt;
  const double theta = std::atan2(ca - cb, d - sa + sb);
  return WordParams{mod_2pi(alpha - theta), std::sqrt(std::max(tmp, 0.0)), mod_2pi(-beta + theta)};
}

MaybeWord word_rsl(double d, double alpha, double beta, double sa, double sb, double ca, double cb) {
  const double tmp = d * d - 2.0 + 2.0 * (ca * cb + sa * sb - d * (sa + sb));
  if (tmp < 0.0) return std::nullopt;
  const double p = std::sqrt(std::max(tmp, 0.0));
  const double theta = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
  return WordParams{mod_2pi(alpha - theta), p, mod_2pi(beta - theta)};
}

MaybeWord word_lsr(double d, double alpha, double beta, double sa, double sb, double ca, double cb) {
  const double tmp = -2.0 + d * d + 2.0 * (ca * cb + sa * sb + d * (sa + sb));
  if (tmp < 0.0) return std::nullopt;
  const double p = std::sqrt(std::max(tmp, 0.0));
  const double theta = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
  return WordParams{mod_2pi(-alpha + theta), p, mod_2pi(-beta + theta)};
}

MaybeWord word_rlr(double d, double alpha, double beta, double sa, double sb, double ca, double cb) {
  const double tmp = 0.125 * (6.0 - d * d + 2.0 * (ca * cb + sa * sb + d * (sa - sb)));
  if (std::fabs(tmp) >= 1.0) return std::nullopt;
  const double p = kTwoPi - std::acos(tmp);
  const double theta = std::atan2(ca - cb, d - sa + sb);
  const double t = mod_2pi(alpha - theta + 0.5 * p);
  return WordParams{t, p, mod_2pi(alpha - beta - t + p)};
}

MaybeWord word_lrl(double d, double alpha, double beta, double sa, double sb, double ca, double cb) {
  const double tmp = 0.125 * (6.0 - d * d + 2.0 * (ca * cb + sa * sb - d * (sa - sb)));
  if (std::fabs(tmp) >= 1.0) return std::nullopt;
  const double p = kTwoPi - std::acos(tmp);
  const double theta = std::atan2(-ca + cb, d + sa - sb);
  const double t = mod_2pi(-alpha + theta + 0.5 * p);
  return WordParams{t, p, mod_2pi(beta - alpha - t + p)};
}

using WordFn = MaybeWord (*)(double, double, double, double, double, double, double);

constexpr std::array<WordFn, 6> kWordFns = {word_lsl, word_rsr, word_lsr,
                                            word_rsl, word_rlr, word_lrl};

struct Candidate {
  DubinsWord word = DubinsWord::LSL;
  WordParams params;
  double length = std::numeric_limits<double>::infinity();
};

Candidate solve_word(DubinsWord word, double d, double alpha, double beta, double sa, double sb,
                     double ca, double cb) {
  Candidate c;
  c.word = word;
  if (auto w = kWordFns[static_cast<int>(word)](d, alpha, beta, sa, sb, ca, cb)) {
    c.params = *w;
    c.length = w->length();
  }
  return c;
}

Candidate best_of_all_words(double d, double alpha, double beta, double sa, double sb, double ca,
                            double cb) {
  Candidate best;
  for (int i = 0; i < 6; ++i) {
    Candidate c = solve_word(static_cast<DubinsWord>(i), d, alpha, beta, sa, sb, ca, cb);
    if (c.length < best.length) best = c;
  }
  return best;
}

// Quadrant pair of (alpha, beta): the a_{row,column} cell of the classification table.
int classify(double alpha, double beta) {
  auto quadrant = [](double a) {
    if (a <= kHalfPi) return 1;
    if (a <= kPi) return 2;
    if (a <= 3.0 * kHalfPi) return 3;
    return 4;
  };
  return (quadrant(beta) - 1) + 4 * (quadrant(alpha) - 1);
}

// Set-classification dispatch, valid in the long-distance regime where a CSC
// word is optimal. The S_{ij} switch functions compare word parameters.
Candidate classified_candidate(double d, double alpha, double beta, double sa, double sb, double ca,
                               double cb) {
  auto lsl = [&] { return solve_word(DubinsWord::LSL, d, alpha, beta, sa, sb, ca, cb); };
  auto rsr = [&] { return solve_word(DubinsWord::RSR, d, alpha, beta, sa, sb, ca, cb); };
  auto lsr = [&] { return solve_word(DubinsWord::LSR, d, alpha, beta, sa, sb, ca, cb); };
  auto rsl = [&] { return solve_word(DubinsWord::RSL, d, alpha, beta, sa, sb, ca, cb); };

  switch (classify(alpha, beta)) {
    case 0:  // a_11: RSL
      return rsl();
    case 1: {  // a_12: RSR or RSL
      if (d * cb - 3.0 * sb * cb + sb * ca - cb * sa + ca * sb > 0.0) return rsl();
      const Candidate crsr = rsr();
      const Candidate crsl = rsl();
      if (crsr.params.p - crsl.params.p - 2.0 * (crsl.params.q - kPi) > 0.0) return crsl;
      return crsr;
    }
    case 2: {  // a_13: RSR or LSR
      const Candidate crsr = rsr();
      return (crsr.params.t - kPi > 0.0) ? lsr() : crsr;
    }
    case 3: {  // a_14: LSR, RSL or RSR
      const Candidate crsr = rsr();
      if (crsr.params.t - kPi > 0.0) return lsr();
      if (crsr.params.q - kPi > 0.0) return rsl();
      return crsr;
    }
    case 4: {  // a_21: LSL or RSL
      const Candidate clsl = lsl();
      const Candidate crsl = rsl();
      if (clsl.params.p - crsl.params.p - 2.0 * (crsl.params.t - kPi) < 0.0) return clsl;
      return crsl;
    }
    case 5: {  // a_22: LSL, RSR or RSL
      const Candidate crsl = rsl();
      if (alpha >= beta) {
        const Candidate clsl = lsl();
        if (clsl.params.p - crsl.params.p - 2.0 * (crsl.params.t - kPi) < 0.0) return clsl;
        return crsl;
      }
      const Candidate crsr = rsr();
      if (crsr.params.p - crsl.params.p - 2.0 * (crsl.params.q - kPi) < 0.0) return crsr;
      return crsl;
    }
    case 6:  // a_23: RSR
      return rsr();
    case 7: {  // a_24: RSR or RSL
      const Candidate crsr = rsr();
      return (crsr.params.q - kPi < 0.0) ? crsr : rsl();
    }
    case 8: {  // a_31: LSL or LSR
      const Candidate clsl = lsl();
      return (clsl.params.q - kPi < 0.0) ? clsl : lsr();
    }
    case 9:  // a_32: LSL
      return lsl();
    case 10: {  // a_33: RSR, LSL or LSR
      const Candidate clsr = lsr();
      if (alpha <= beta) {
        const Candidate crsr = rsr();
        if (crsr.params.p - clsr.params.p - 2.0 * (clsr.params.t - kPi) < 0.0) return crsr;
        return clsr;
      }
      const Candidate clsl = lsl();
      if (clsl.params.p - clsr.params.p - 2.0 * (clsr.params.q - kPi) < 0.0) return clsl;
      return clsr;
    }
    case 11: {  // a_34: RSR or LSR
      const Candidate crsr = rsr();
      const Candidate clsr = lsr();
      if (crsr.params.p - clsr.params.p - 2.0 * (clsr.params.t - kPi) < 0.0) return crsr;
      return clsr;
    }
    case 12: {  // a_41: RSL, LSR or LSL
      const Candidate clsl = lsl();
      if (clsl.params.t - kPi > 0.0) return rsl();
      if (clsl.params.q - kPi > 0.0) return lsr();
      return clsl;
    }
    case 13: {  // a_42: LSL or RSL
      const Candidate clsl = lsl();
      return (clsl.params.t - kPi < 0.0) ? clsl : rsl();
    }
    case 14: {  // a_43: LSL or LSR
      const Candidate clsl = lsl();
      const Candidate clsr = lsr();
      if (clsl.params.p - clsr.params.p - 2.0 * (clsr.params.q - kPi) < 0.0) return clsl;
      return clsr;
    }
    default:  // a_44: LSR
      return lsr();
  }
}

}  // namespace

std::array<SegmentKind, 3> word_segments(DubinsWord word) {
  switch (word) {
    case DubinsWord::LSL:
      return {SegmentKind::TurnLeft, SegmentKind::Straight, SegmentKind::TurnLeft};
    case DubinsWord::RSR:
      return {SegmentKind::TurnRight, SegmentKind::Straight, SegmentKind::TurnRight};
    case DubinsWord::LSR:
      return {SegmentKind::TurnLeft, SegmentKind::Straight, SegmentKind::TurnRight};
    case DubinsWord::RSL:
      return {SegmentKind::TurnRight, SegmentKind::Straight, SegmentKind::TurnLeft};
    case DubinsWord::RLR:
      return {SegmentKind::TurnRight, SegmentKind::TurnLeft, SegmentKind::TurnRight};
    default:
      return {SegmentKind::TurnLeft, SegmentKind::TurnRight, SegmentKind::TurnLeft};
  }
}

std::string to_string(DubinsWord word) {
  switch (word) {
    case DubinsWord::LSL:
      return "LSL";
    case DubinsWord::RSR:
      return "RSR";
    case DubinsWord::LSR:
      return "LSR";
    case DubinsWord::RSL:
      return "RSL";
    case DubinsWord::RLR:
      return "RLR";
    default:
      return "LRL";
  }
}

Dubins2dPath dubins_2d_shortest(const State& start, const State& goal, double turn_radius) {
  Dubins2dPath path;
  path.radius = turn_radius;

  const double dx = (goal.x - start.x) / turn_radius;
  const double dy = (goal.y - start.y) / turn_radius;
  const double d = std::sqrt(dx * dx + dy * dy);

  if (d < kDubinsEps && heading_distance(start.heading, goal.heading) < kDubinsEps) {
    path.word = DubinsWord::LSL;
    path.params = {0.0, d, 0.0};
    return path;
  }

  const double th = (d < kDubinsEps) ? start.heading : std::atan2(dy, dx);
  const double alpha = mod_2pi(start.heading - th);
  const double beta = mod_2pi(goal.heading - th);
  const double sa = std::sin(alpha);
  const double sb = std::sin(beta);
  const double ca = std::cos(alpha);
  const double cb = std::cos(beta);

  const Candidate exhaustive = best_of_all_words(d, alpha, beta, sa, sb, ca, cb);
  Candidate chosen = exhaustive;

  // sufficient condition for optimality of a CSC word
  const double long_path_threshold =
      std::sqrt(std::max(4.0 - (std::fabs(ca) + std::fabs(cb)) * (std::fabs(ca) + std::fabs(cb)), 0.0)) +
      std::fabs(sa) + std::fabs(sb);
  if (d > long_path_threshold) {
    const Candidate classified = classified_candidate(d, alpha, beta, sa, sb, ca, cb);
    if (classified.length <= exhaustive.length + kClassificationSlackM / turn_radius) {
      chosen = classified;
    }
  }

  path.word = chosen.word;
  path.params = {chosen.params.t, chosen.params.p, chosen.params.q};
  return path;
}

}  // namespace windplan
