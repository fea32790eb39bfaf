/*!
 * \file dubins_airplane.cpp
 */

#include "windplan/dubins_airplane.hpp"

#include <algorithm>
#include <cmath>

namespace windplan {

namespace {

constexpr double kZeroSegment = 1e-12;  // segments shorter than this are dropped [m]
constexpr double kBisectTol = 1e-12;    // bisection width on the extra turn angle [rad]

State advance(const State& from, SegmentKind kind, double horizontal_length, double gamma,
              double curvature_max) {
  State out = from;
  const double dz = horizontal_length * std::tan(gamma);
  switch (kind) {
    case SegmentKind::Straight: {
      out.x += horizontal_length * std::cos(from.heading);
      out.y += horizontal_length * std::sin(from.heading);
      break;
    }
    case SegmentKind::TurnLeft: {
      const double r = 1.0 / curvature_max;
      const double dphi = horizontal_length / r;
      // chord form keeps full turns numerically exact
      const double chord = 2.0 * r * std::sin(0.5 * dphi);
      out.x += chord * std::cos(from.heading + 0.5 * dphi);
      out.y += chord * std::sin(from.heading + 0.5 * dphi);
      out.set_heading(from.heading + dphi);
      break;
    }
    case SegmentKind::TurnRight: {
      const double r = 1.0 / curvature_max;
      const double dphi = horizontal_length / r;
      const double chord = 2.0 * r * std::sin(0.5 * dphi);
      out.x += chord * std::cos(from.heading - 0.5 * dphi);
      out.y += chord * std::sin(from.heading - 0.5 * dphi);
      out.set_heading(from.heading - dphi);
      break;
    }
  }
  out.z += dz;
  return out;
}

double segment_curvature(SegmentKind kind, double curvature_max) {
  switch (kind) {
    case SegmentKind::TurnLeft:
      return curvature_max;
    case SegmentKind::TurnRight:
      return -curvature_max;
    default:
      return 0.0;
  }
}

std::vector<PathSegment> assemble(const State& start, double gamma, double curvature_max,
                                  const std::vector<std::pair<SegmentKind, double>>& pieces) {
  std::vector<PathSegment> segments;
  segments.reserve(pieces.size());
  State cursor = start;
  for (const auto& [kind, horizontal] : pieces) {
    if (horizontal < kZeroSegment) continue;
    PathSegment seg;
    seg.kind = kind;
    seg.horizontal_length = horizontal;
    seg.curvature = segment_curvature(kind, curvature_max);
    seg.gamma = gamma;
    seg.start = cursor;
    cursor = advance(cursor, kind, horizontal, gamma, curvature_max);
    segments.push_back(seg);
  }
  return segments;
}

std::vector<std::pair<SegmentKind, double>> planar_pieces(const Dubins2dPath& planar) {
  const auto kinds = word_segments(planar.word);
  const auto lengths = planar.segment_lengths();
  return {{kinds[0], lengths[0]}, {kinds[1], lengths[1]}, {kinds[2], lengths[2]}};
}

}  // namespace

State PathSegment::end() const { return state_at_horizontal(horizontal_length); }

State PathSegment::state_at_horizontal(double h) const {
  h = std::clamp(h, 0.0, horizontal_length);
  const double curvature_max = std::fabs(curvature);
  switch (kind) {
    case SegmentKind::Straight:
      return advance(start, kind, h, gamma, 0.0);
    default:
      return advance(start, kind, h, gamma, curvature_max);
  }
}

DubinsAirplanePath::DubinsAirplanePath(std::vector<PathSegment> segments, DubinsWord word)
    : segments_(std::move(segments)), word_(word) {
  length2d_ = 0.0;
  length3d_ = 0.0;
  for (const PathSegment& s : segments_) {
    length2d_ += s.horizontal_length;
    length3d_ += s.length3d();
  }
  end_ = segments_.empty() ? State{} : segments_.back().end();
}

State DubinsAirplanePath::state_at(double s) const {
  if (segments_.empty()) return end_;
  s = std::clamp(s, 0.0, length3d_);
  for (const PathSegment& seg : segments_) {
    const double seg3d = seg.length3d();
    if (s <= seg3d) {
      return seg.state_at_horizontal(s * std::cos(seg.gamma));
    }
    s -= seg3d;
  }
  return segments_.back().end();
}

PathSample DubinsAirplanePath::sample_at(double s) const {
  PathSample out;
  out.s = std::clamp(s, 0.0, length3d_);
  if (segments_.empty()) {
    out.state = end_;
    out.tangent = Eigen::Vector3d(std::cos(end_.heading), std::sin(end_.heading), 0.0);
    return out;
  }
  double rem = out.s;
  const PathSegment* seg = &segments_.back();
  double local = seg->horizontal_length;
  for (const PathSegment& candidate : segments_) {
    const double seg3d = candidate.length3d();
    if (rem <= seg3d) {
      seg = &candidate;
      local = rem * std::cos(candidate.gamma);
      break;
    }
    rem -= seg3d;
  }
  out.state = seg->state_at_horizontal(local);
  const double cg = std::cos(seg->gamma);
  out.tangent = Eigen::Vector3d(cg * std::cos(out.state.heading), cg * std::sin(out.state.heading),
                                std::sin(seg->gamma));
  out.curvature = seg->curvature;
  return out;
}

DubinsAirplanePath dubins_airplane_connect(const State& start, const State& goal,
                                           double curvature_max, double gamma_max) {
  const double radius = 1.0 / curvature_max;
  const Dubins2dPath base = dubins_2d_shortest(start, goal, radius);
  const double base_length = base.length();
  const double dz = goal.z - start.z;
  const double tan_gamma_max = std::tan(gamma_max);

  if (std::fabs(dz) <= base_length * tan_gamma_max) {
    const double gamma = (base_length > 0.0) ? std::atan2(dz, base_length) : 0.0;
    return DubinsAirplanePath(assemble(start, gamma, curvature_max, planar_pieces(base)),
                              base.word);
  }

  // climb case: extend the first turn (direction of the first word letter) by an
  // extra arc angle phi plus k full loops until the planar length matches
  // |dz| / tan(gamma_max)
  const SegmentKind turn = word_segments(base.word)[0] == SegmentKind::TurnRight
                               ? SegmentKind::TurnRight
                               : SegmentKind::TurnLeft;
  const double required = std::fabs(dz) / tan_gamma_max;
  const double loop = kTwoPi * radius;

  int full_loops = 0;
  if (required > base_length + loop) {
    full_loops = static_cast<int>(std::ceil((required - base_length - loop) / loop));
  }
  const double target = required - full_loops * loop;  // in (base_length, base_length + loop]

  const auto remainder = [&](double phi) {
    State rotated = advance(start, turn, phi * radius, 0.0, curvature_max);
    return dubins_2d_shortest(rotated, goal, radius);
  };
  const auto total_2d = [&](double phi, const Dubins2dPath& rest) {
    return phi * radius + rest.length();
  };

  double lo = 0.0;
  double hi = kTwoPi;
  Dubins2dPath rest_hi = remainder(hi);
  for (int iter = 0; iter < 80 && (hi - lo) > kBisectTol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const Dubins2dPath rest_mid = remainder(mid);
    if (total_2d(mid, rest_mid) >= target) {
      hi = mid;
      rest_hi = rest_mid;
    } else {
      lo = mid;
    }
  }

  // upper bracket guarantees total >= target, so gamma stays within the limit;
  // deriving gamma from the realized length makes the final altitude exact
  const double helix_horizontal = (hi + full_loops * kTwoPi) * radius;
  const double total = helix_horizontal + rest_hi.length();
  double gamma = std::atan2(dz, total);
  gamma = std::clamp(gamma, -gamma_max, gamma_max);

  std::vector<std::pair<SegmentKind, double>> pieces;
  pieces.emplace_back(turn, helix_horizontal);
  State rotated = advance(start, turn, hi * radius, 0.0, curvature_max);
  const auto rest_kinds = word_segments(rest_hi.word);
  const auto rest_lengths = rest_hi.segment_lengths();
  for (int i = 0; i < 3; ++i) pieces.emplace_back(rest_kinds[i], rest_lengths[i]);

  // assemble from the true start; the helix piece ends at `rotated` by construction
  (void)rotated;
  return DubinsAirplanePath(assemble(start, gamma, curvature_max, pieces), rest_hi.word);
}

void for_each_sample(const DubinsAirplanePath& path, double ds,
                     const std::function<void(const PathSample&)>& fn) {
  const double total = path.length();
  if (total <= 0.0) {
    fn(path.sample_at(0.0));
    return;
  }
  const auto count = static_cast<size_t>(std::ceil(total / ds - 1e-9));
  for (size_t i = 0; i < count; ++i) {
    fn(path.sample_at(static_cast<double>(i) * ds));
  }
  fn(path.sample_at(total));
}

std::vector<PathSample> sample_path(const DubinsAirplanePath& path, double ds) {
  std::vector<PathSample> samples;
  samples.reserve(static_cast<size_t>(path.length() / ds) + 2);
  for_each_sample(path, ds, [&](const PathSample& s) { samples.push_back(s); });
  return samples;
}

}  // namespace windplan
