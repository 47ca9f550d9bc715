#include "needleboard/radon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace needleboard {

namespace {

constexpr double kAxisSnap = 1e-14;
constexpr double kBreakpointMerge = 1e-12;

// Offsets at which a chord is evaluated: every breakpoint, plus interval
// midpoints for axis-aligned directions where pi is a step function.
std::vector<double> probe_offsets(int n, const Direction& dir) {
  std::vector<double> offsets = breakpoint_offsets(n, dir);
  if (!dir.axis_aligned()) return offsets;
  std::vector<double> probes;
  probes.reserve(2 * offsets.size());
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    probes.push_back(offsets[k]);
    if (k + 1 < offsets.size()) probes.push_back(0.5 * (offsets[k] + offsets[k + 1]));
  }
  return probes;
}

}  // namespace

Direction::Direction(double theta) {
  constexpr double pi = std::numbers::pi;
  theta = std::fmod(theta, pi);
  if (theta < 0.0) theta += pi;
  if (theta >= pi) theta -= pi;
  if (theta < kAxisSnap || pi - theta < kAxisSnap) {
    theta_ = 0.0;
    u_ = {1.0, 0.0};
  } else if (std::abs(theta - pi / 2) < kAxisSnap) {
    theta_ = pi / 2;
    u_ = {0.0, 1.0};
  } else {
    theta_ = theta;
    u_ = {std::cos(theta), std::sin(theta)};
  }
}

Segment chord_segment(int n, const Direction& dir, double offset) {
  const Point u = dir.u();
  const double side = static_cast<double>(n);
  // x(s) = t*ux - s*uy, y(s) = t*uy + s*ux
  const double x0 = offset * u.x;
  const double y0 = offset * u.y;
  double lo = -HUGE_VAL, hi = HUGE_VAL;
  bool hit = true;
  if (u.y == 0.0) {
    hit = hit && x0 >= 0.0 && x0 <= side;
  } else {
    double s0 = (x0 - side) / u.y, s1 = x0 / u.y;
    if (s0 > s1) std::swap(s0, s1);
    lo = std::max(lo, s0);
    hi = std::min(hi, s1);
  }
  if (u.x == 0.0) {
    hit = hit && y0 >= 0.0 && y0 <= side;
  } else {
    double s0 = -y0 / u.x, s1 = (side - y0) / u.x;
    if (s0 > s1) std::swap(s0, s1);
    lo = std::max(lo, s0);
    hi = std::min(hi, s1);
  }
  if (!hit || lo > hi) return {{x0, y0}, {x0, y0}};
  return {{x0 - lo * u.y, y0 + lo * u.x}, {x0 - hi * u.y, y0 + hi * u.x}};
}

double Projection::integral() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < intervals(); ++k)
    sum += (breakpoints[k + 1] - breakpoints[k]) * 0.5 * (left_limits[k] + right_limits[k]);
  return sum;
}

std::vector<double> breakpoint_offsets(int n, const Direction& dir) {
  const Point u = dir.u();
  std::vector<double> offsets;
  offsets.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int py = 0; py <= n; ++py)
    for (int px = 0; px <= n; ++px) offsets.push_back(px * u.x + py * u.y);
  std::sort(offsets.begin(), offsets.end());
  std::vector<double> merged;
  merged.reserve(offsets.size());
  for (double t : offsets)
    if (merged.empty() || t - merged.back() > kBreakpointMerge) merged.push_back(t);
  return merged;
}

Projection project(const Coloring& c, const Direction& dir) {
  const int n = c.n();
  Projection p;
  p.theta = dir.theta();
  p.breakpoints = breakpoint_offsets(n, dir);
  const std::size_t m = p.breakpoints.size();
  p.values.resize(m);
  for (std::size_t k = 0; k < m; ++k) p.values[k] = integrate(c, chord_segment(n, dir, p.breakpoints[k]));
  p.left_limits.resize(m - 1);
  p.right_limits.resize(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (dir.axis_aligned()) {
      const double mid = 0.5 * (p.breakpoints[k] + p.breakpoints[k + 1]);
      p.left_limits[k] = p.right_limits[k] = integrate(c, chord_segment(n, dir, mid));
    } else {
      p.left_limits[k] = p.values[k];
      p.right_limits[k] = p.values[k + 1];
    }
  }
  return p;
}

ChordMax max_chord_in_direction(const Coloring& c, const Direction& dir) {
  ChordMax best;
  bool first = true;
  for (double t : probe_offsets(c.n(), dir)) {
    const double v = integrate(c, chord_segment(c.n(), dir, t));
    if (first || std::abs(v) > best.value) {
      best = {t, std::abs(v), v};
      first = false;
    }
  }
  return best;
}

SegmentMax best_subsegment(const Coloring& c, const Segment& chord) {
  thread_local CrossingList pieces;
  cell_crossings(chord, c.n(), pieces);
  SegmentMax best;
  best.segment = {chord.a, chord.a};
  if (pieces.empty()) return best;

  double prefix = 0.0, hi = 0.0, lo = 0.0;
  std::size_t hi_idx = 0, lo_idx = 0;
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    prefix += c.at(pieces[r].i, pieces[r].j) * pieces[r].length;
    if (prefix > hi) {
      hi = prefix;
      hi_idx = r + 1;
    }
    if (prefix < lo) {
      lo = prefix;
      lo_idx = r + 1;
    }
  }
  // Prefix index r sits at the start of piece r (r = 0) or the end of piece r-1.
  auto position = [&](std::size_t r) { return r == 0 ? pieces.front().t_in : pieces[r - 1].t_out; };
  const std::size_t from = std::min(hi_idx, lo_idx);
  const std::size_t to = std::max(hi_idx, lo_idx);
  best.value = hi - lo;
  best.segment = {chord.at_arclength(position(from)), chord.at_arclength(position(to))};
  return best;
}

SegmentMax max_segment_in_direction(const Coloring& c, const Direction& dir) {
  SegmentMax best;
  bool first = true;
  for (double t : probe_offsets(c.n(), dir)) {
    SegmentMax candidate = best_subsegment(c, chord_segment(c.n(), dir, t));
    if (first || candidate.value > best.value) {
      best = candidate;
      best.offset = t;
      first = false;
    }
  }
  return best;
}

}  // namespace needleboard
