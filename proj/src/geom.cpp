#include "needleboard/geom.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace needleboard {

namespace {

// Unit-parameter gaps below this are treated as one event (lattice point).
constexpr double kTieTolerance = 1e-14;

// Ascending parameters where a + t*(b-a) crosses an integer gridline strictly
// inside (lo, hi). `start`, `delta` are one coordinate of a and b-a.
void gridline_params(double start, double delta, double lo, double hi, std::vector<double>& out) {
  out.clear();
  if (delta == 0.0) return;
  const double c_lo = start + lo * delta;
  const double c_hi = start + hi * delta;
  if (delta > 0.0) {
    for (double k = std::floor(c_lo) + 1.0; k < c_hi; k += 1.0) out.push_back((k - start) / delta);
  } else {
    for (double k = std::ceil(c_lo) - 1.0; k > c_hi; k -= 1.0) out.push_back((k - start) / delta);
  }
}

}  // namespace

double Segment::length() const noexcept { return std::hypot(b.x - a.x, b.y - a.y); }

Point Segment::at_arclength(double s) const noexcept {
  const double len = length();
  if (len == 0.0) return a;
  const double t = s / len;
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

std::optional<std::pair<double, double>> clip_parameters(const Segment& s, int n) {
  // Liang-Barsky against the closed square.
  double lo = 0.0;
  double hi = 1.0;
  const double side = static_cast<double>(n);
  const double start[2] = {s.a.x, s.a.y};
  const double delta[2] = {s.b.x - s.a.x, s.b.y - s.a.y};
  for (int axis = 0; axis < 2; ++axis) {
    if (delta[axis] == 0.0) {
      if (start[axis] < 0.0 || start[axis] > side) return std::nullopt;
      continue;
    }
    double t0 = (0.0 - start[axis]) / delta[axis];
    double t1 = (side - start[axis]) / delta[axis];
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

double clipped_length(const Segment& s, int n) {
  const auto range = clip_parameters(s, n);
  if (!range) return 0.0;
  return (range->second - range->first) * s.length();
}

void cell_crossings(const Segment& s, int n, CrossingList& out) {
  out.clear();
  const double len = s.length();
  if (len == 0.0) return;
  const auto range = clip_parameters(s, n);
  if (!range || range->second <= range->first) return;
  const auto [lo, hi] = *range;

  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  thread_local std::vector<double> xs, ys;
  gridline_params(s.a.x, dx, lo, hi, xs);
  gridline_params(s.a.y, dy, lo, hi, ys);

  // Merge both event streams; events closer than the tie tolerance (a lattice
  // point, or the clip boundary) collapse into one.
  thread_local std::vector<double> events;
  events.clear();
  events.push_back(lo);
  std::merge(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(events));
  std::size_t kept = 1;
  for (std::size_t k = 1; k < events.size(); ++k)
    if (events[k] - events[kept - 1] > kTieTolerance && hi - events[k] > kTieTolerance) events[kept++] = events[k];
  events.resize(kept);
  events.push_back(hi);

  // Each piece's cell comes from its own midpoint, so rounding at one event
  // never shifts the cells after it. Gridline pieces (dx or dy zero) take the
  // cell above/right of the line.
  out.reserve(events.size());
  for (std::size_t k = 0; k + 1 < events.size(); ++k) {
    const double t0 = events[k], t1 = events[k + 1];
    if (!(t1 > t0)) continue;
    const double tm = 0.5 * (t0 + t1);
    const int i = static_cast<int>(std::floor(dx == 0.0 ? s.a.x : s.a.x + tm * dx));
    const int j = static_cast<int>(std::floor(dy == 0.0 ? s.a.y : s.a.y + tm * dy));
    if (i < 0 || i >= n || j < 0 || j >= n) continue;
    out.push_back({i, j, (t1 - t0) * len, t0 * len, t1 * len});
  }
}

CrossingList cell_crossings(const Segment& s, int n) {
  CrossingList out;
  cell_crossings(s, n, out);
  return out;
}

double integrate(const Coloring& c, const CrossingList& pieces) {
  double sum = 0.0;
  for (const Crossing& piece : pieces) sum += c.at(piece.i, piece.j) * piece.length;
  return sum;
}

double integrate(const Coloring& c, const Segment& s) {
  thread_local CrossingList pieces;
  cell_crossings(s, c.n(), pieces);
  return integrate(c, pieces);
}

double value_at(const Coloring& c, Point p) noexcept {
  const double side = static_cast<double>(c.n());
  if (!(p.x >= 0.0 && p.x < side && p.y >= 0.0 && p.y < side)) return 0.0;
  const int i = std::min(static_cast<int>(p.x), c.n() - 1);
  const int j = std::min(static_cast<int>(p.y), c.n() - 1);
  return c.at(i, j);
}

double integrate_mc(const Coloring& c, const Segment& s, std::size_t m) {
  if (m == 0) throw std::invalid_argument("integrate_mc: sample count must be >= 1");
  const double len = s.length();
  if (len == 0.0) return 0.0;
  double sum = 0.0;
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  for (std::size_t k = 0; k < m; ++k) {
    const double t = (static_cast<double>(k) + 0.5) / static_cast<double>(m);
    sum += value_at(c, {s.a.x + t * dx, s.a.y + t * dy});
  }
  return len * sum / static_cast<double>(m);
}

double crossing_sigma(const CrossingList& pieces) {
  double s2 = 0.0;
  for (const Crossing& piece : pieces) s2 += piece.length * piece.length;
  return std::sqrt(s2);
}

}  // namespace needleboard
