#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "needleboard/board.hpp"

namespace needleboard {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Straight segment from a to b. a == b is allowed and integrates to zero.
struct Segment {
  Point a;
  Point b;

  double length() const noexcept;
  // Point at arclength s from a.
  Point at_arclength(double s) const noexcept;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// One piece of a segment inside a single cell. t_in/t_out are arclengths from
/// the segment's start point.
struct Crossing {
  int i = 0;
  int j = 0;
  double length = 0.0;
  double t_in = 0.0;
  double t_out = 0.0;
};

using CrossingList = std::vector<Crossing>;

// Unit-parameter interval [lo, hi] of s that lies in the closed square [0, n]^2.
std::optional<std::pair<double, double>> clip_parameters(const Segment& s, int n);

// Length of s inside [0, n]^2.
double clipped_length(const Segment& s, int n);

/// Decomposes s into per-cell pieces ordered from a to b. Gridline crossings
/// are computed directly from the endpoints; a lattice point crossing advances
/// both cell indices at once. Pieces lying on x = n or y = n are dropped
/// (half-open cells).
CrossingList cell_crossings(const Segment& s, int n);
void cell_crossings(const Segment& s, int n, CrossingList& out);

double integrate(const Coloring& c, const Segment& s);
double integrate(const Coloring& c, const CrossingList& pieces);

// Midpoint rule with m equal sub-pieces; independent of cell_crossings.
double integrate_mc(const Coloring& c, const Segment& s, std::size_t m);

// sqrt(sum of squared piece lengths)
double crossing_sigma(const CrossingList& pieces);

// Value of the coloring at a point; zero off the board.
double value_at(const Coloring& c, Point p) noexcept;

}  // namespace needleboard
