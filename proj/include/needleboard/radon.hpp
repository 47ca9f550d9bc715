#pragma once

#include <vector>

#include "needleboard/board.hpp"
#include "needleboard/geom.hpp"

namespace needleboard {

/// Projection direction. u = (cos theta, sin theta); chords run along
/// u_perp = (-sin theta, cos theta). theta is normalized to [0, pi), and
/// angles within 1e-14 of an axis snap to it so axis chords are exact.
class Direction {
 public:
  explicit Direction(double theta);

  double theta() const noexcept { return theta_; }
  Point u() const noexcept { return u_; }
  Point u_perp() const noexcept { return {-u_.y, u_.x}; }
  // Chords lie on gridlines for these directions, so projections jump.
  bool axis_aligned() const noexcept { return u_.x == 0.0 || u_.y == 0.0; }

 private:
  double theta_;
  Point u_;
};

/// The full line {t*u + s*u_perp} restricted to the board.
struct Chord {
  double theta = 0.0;
  double offset = 0.0;
};

Segment chord_segment(int n, const Direction& dir, double offset);
inline Segment chord_segment(int n, const Chord& ch) { return chord_segment(n, Direction(ch.theta), ch.offset); }

/// pi(t) = integral of f along the chord at offset t, exactly piecewise linear
/// between consecutive breakpoints.
///
/// values[k] is the chord integral at breakpoints[k] (gridline chords use the
/// half-open ownership). left_limits[k] / right_limits[k] are the one-sided
/// limits on the open interval (breakpoints[k], breakpoints[k+1]); they differ
/// from the breakpoint values only for axis-aligned directions.
struct Projection {
  double theta = 0.0;
  std::vector<double> breakpoints;
  std::vector<double> values;
  std::vector<double> left_limits;
  std::vector<double> right_limits;

  std::size_t intervals() const noexcept { return left_limits.size(); }
  // Trapezoid integral of the piecewise-linear function; equals the sum of all cells.
  double integral() const;
};

// Sorted lattice-point offsets p.u, p in {0..n}^2, merged within 1e-12.
std::vector<double> breakpoint_offsets(int n, const Direction& dir);

Projection project(const Coloring& c, const Direction& dir);

struct ChordMax {
  double offset = 0.0;
  double value = 0.0;   // |pi(offset)|
  double signed_value = 0.0;
};

/// Exact max over t of |pi(t)| for one direction. Ties go to the smaller offset.
ChordMax max_chord_in_direction(const Coloring& c, const Direction& dir);

struct SegmentMax {
  Segment segment;
  double value = 0.0;  // |integral over segment|
  double offset = 0.0;
};

/// Exact max of |integral| over every sub-segment of every chord in this
/// direction (max prefix minus min prefix along each breakpoint chord).
SegmentMax max_segment_in_direction(const Coloring& c, const Direction& dir);

/// Best sub-segment of one chord. Returns value 0 and a degenerate segment for empty chords.
SegmentMax best_subsegment(const Coloring& c, const Segment& chord);

}  // namespace needleboard
