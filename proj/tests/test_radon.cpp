#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "needleboard/radon.hpp"
#include "test_util.hpp"

using namespace needleboard;
using namespace needleboard::testing;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Exhaustive sub-segment maximum over one chord: every pair of crossing boundaries.
double exhaustive_subsegment(const Coloring& c, const Segment& chord) {
  const CrossingList pieces = cell_crossings(chord, c.n());
  std::vector<double> prefix = {0.0};
  for (const Crossing& p : pieces) prefix.push_back(prefix.back() + c.at(p.i, p.j) * p.length);
  double best = 0.0;
  for (std::size_t a = 0; a < prefix.size(); ++a)
    for (std::size_t b = a; b < prefix.size(); ++b) best = std::max(best, std::abs(prefix[b] - prefix[a]));
  return best;
}

}  // namespace

TEST_CASE("direction normalization") {
  CHECK(Direction(kPi).theta() == 0.0);
  CHECK(Direction(-kPi / 2).theta() == doctest::Approx(kPi / 2));
  CHECK(Direction(kPi / 2).axis_aligned());
  CHECK(Direction(kPi / 2 + 1e-15).u().x == 0.0);
  CHECK(Direction(3 * kPi + 0.3).theta() == doctest::Approx(0.3));
  CHECK_FALSE(Direction(0.3).axis_aligned());
}

TEST_CASE("chord clipping") {
  const Segment h = chord_segment(2, Direction(kPi / 2), 0.5);
  CHECK(std::min(h.a.x, h.b.x) == doctest::Approx(0.0));
  CHECK(std::max(h.a.x, h.b.x) == doctest::Approx(2.0));
  CHECK(h.a.y == 0.5);
  CHECK(h.b.y == 0.5);

  CHECK(chord_segment(2, Direction(0.0), -1.0).length() == 0.0);

  // Line through the origin along u_perp = (-sin, cos) for theta = pi/4 only touches the corner.
  CHECK(chord_segment(2, Direction(kPi / 4), 0.0).length() == doctest::Approx(0.0).epsilon(1e-12));
  // theta = 3pi/4: u = (-1,1)/sqrt2, u_perp = (-1,-1)/sqrt2, the main diagonal.
  const Segment diag = chord_segment(2, Direction(3 * kPi / 4), 0.0);
  CHECK(diag.length() == doctest::Approx(2 * kSqrt2));

  // Against analytic clipping of the line {t u + s u_perp} by bisection on s.
  CounterRng rng(8);
  for (int k = 0; k < 200; ++k) {
    const int n = 5;
    const Direction dir(rng.uniform(0, kPi));
    const double t = rng.uniform(-2, 8);
    const Segment s = chord_segment(n, dir, t);
    double inside = 0.0;
    const int samples = 20000;
    for (int q = 0; q < samples; ++q) {
      const double sp = -10.0 + 20.0 * (q + 0.5) / samples;
      const double x = t * dir.u().x + sp * dir.u_perp().x, y = t * dir.u().y + sp * dir.u_perp().y;
      if (x >= 0 && x <= n && y >= 0 && y <= n) inside += 20.0 / samples;
    }
    CHECK(std::abs(s.length() - inside) <= 2.5e-3);
  }
}

TEST_CASE("projection of constant and parity boards") {
  const Projection p = project(make_constant(2, 1.0), Direction(0.0));
  REQUIRE(p.breakpoints.size() == 3);
  CHECK(p.breakpoints == std::vector<double>{0.0, 1.0, 2.0});
  // Half-open ownership: the chord x = 2 belongs to no column.
  CHECK(p.values == std::vector<double>{2.0, 2.0, 0.0});
  CHECK(p.left_limits == std::vector<double>{2.0, 2.0});
  CHECK(p.right_limits == std::vector<double>{2.0, 2.0});
  CHECK(p.integral() == doctest::Approx(4.0));

  const Projection q = project(make_parity(2), Direction(0.0));
  for (double v : q.values) CHECK(v == 0.0);

  const Coloring stripes = make_stripes(2, StripeAxis::horizontal);
  const Projection r = project(stripes, Direction(kPi / 2));
  CHECK(r.left_limits[0] == doctest::Approx(2.0));
  CHECK(r.left_limits[1] == doctest::Approx(-2.0));
  CHECK(integrate(stripes, chord_segment(2, Direction(kPi / 2), 0.5)) == doctest::Approx(2.0));
  CHECK(integrate(stripes, chord_segment(2, Direction(kPi / 2), 1.5)) == doctest::Approx(-2.0));
}

TEST_CASE("projection invariants on random directions") {
  CounterRng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 7);
    const Coloring c = random_real_board(n, rng.next_u64());
    const Direction dir(rng.uniform(0, kPi));
    const Projection p = project(c, dir);
    // Mass conservation.
    CHECK(std::abs(p.integral() - cell_sum(c)) <= 1e-9 * n * n);
    // Support edges.
    CHECK(std::abs(p.values.front()) <= 1e-9);
    CHECK(std::abs(p.values.back()) <= 1e-9);
    // Linear between breakpoints.
    for (std::size_t k = 0; k + 1 < p.breakpoints.size(); ++k) {
      const double mid = 0.5 * (p.breakpoints[k] + p.breakpoints[k + 1]);
      const double v = integrate(c, chord_segment(n, dir, mid));
      CHECK(std::abs(v - 0.5 * (p.values[k] + p.values[k + 1])) <= 1e-9);
    }
  }
}

TEST_CASE("axis projections conserve mass") {
  for (int n : {1, 2, 5}) {
    const Coloring c = random_real_board(n, 3);
    CHECK(project(c, Direction(0.0)).integral() == doctest::Approx(cell_sum(c)).epsilon(1e-12));
    CHECK(project(c, Direction(kPi / 2)).integral() == doctest::Approx(cell_sum(c)).epsilon(1e-12));
  }
}

// A quarter turn maps the even-side parity board to its negation.
TEST_CASE("parity projections are symmetric under a quarter turn") {
  for (int n : {2, 4, 6}) {
    const Coloring c = make_parity(n);
    for (double theta : {0.2, 0.7, 1.1}) {
      std::vector<double> a = project(c, Direction(theta)).values;
      std::vector<double> b = project(c, Direction(theta + kPi / 2)).values;
      REQUIRE(a.size() == b.size());
      for (double& v : a) v = std::round(v * 1e9) / 1e9;
      for (double& v : b) v = -std::round(v * 1e9) / 1e9;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("chord maximum per direction") {
  CHECK(max_chord_in_direction(make_constant(2, 1.0), Direction(kPi / 4)).value == doctest::Approx(2 * kSqrt2));
  CHECK(max_chord_in_direction(make_parity(2), Direction(0.0)).value == 0.0);
  CounterRng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Coloring c = make_random(4, rng.next_u64());
    const Direction dir(rng.uniform(0, kPi));
    const ChordMax m = max_chord_in_direction(c, dir);
    const Projection p = project(c, dir);
    double best = 0.0;
    for (double v : p.values) best = std::max(best, std::abs(v));
    CHECK(m.value >= 0.0);
    CHECK(m.value == best);
  }
  // Stripes along the chord direction: the max is a full row, which only midpoints see from below.
  const ChordMax rows = max_chord_in_direction(make_stripes(3, StripeAxis::horizontal), Direction(kPi / 2));
  CHECK(rows.value == doctest::Approx(3.0));
  CHECK(rows.offset == 0.0);
}

TEST_CASE("segment maximum per direction") {
  const SegmentMax one = best_subsegment(make_parity(2), chord_segment(2, Direction(kPi / 2), 0.5));
  CHECK(one.value == doctest::Approx(1.0));
  CHECK(one.segment.length() == doctest::Approx(1.0));
  CHECK(std::abs(integrate(make_parity(2), one.segment)) == doctest::Approx(1.0));

  for (double theta : {0.0, 0.3, kPi / 4, 1.2, kPi / 2, 2.5}) {
    const Direction dir(theta);
    const SegmentMax m = max_segment_in_direction(make_constant(3, 1.0), dir);
    double longest = 0.0;
    for (double t : breakpoint_offsets(3, dir)) longest = std::max(longest, chord_segment(3, dir, t).length());
    CHECK(m.value == doctest::Approx(longest));
  }

  CounterRng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Coloring c = make_random(4, rng.next_u64());
    const Direction dir(kPi / 2);
    double oracle = 0.0;
    for (double t : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0})
      oracle = std::max(oracle, exhaustive_subsegment(c, chord_segment(4, dir, t)));
    CHECK(max_segment_in_direction(c, dir).value == doctest::Approx(oracle).epsilon(1e-12));

    const Direction generic(rng.uniform(0, kPi));
    double generic_oracle = 0.0;
    for (double t : breakpoint_offsets(4, generic))
      generic_oracle = std::max(generic_oracle, exhaustive_subsegment(c, chord_segment(4, generic, t)));
    const SegmentMax m = max_segment_in_direction(c, generic);
    CHECK(m.value == doctest::Approx(generic_oracle).epsilon(1e-12));
    // The witness really has that integral.
    CHECK(std::abs(integrate(c, m.segment)) == doctest::Approx(m.value).epsilon(1e-9));
    CHECK(m.value >= max_chord_in_direction(c, generic).value - 1e-12);
  }
}

TEST_CASE("segment maximum is attained at breakpoints") {
  // Dense offsets never beat the breakpoint evaluation.
  CounterRng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Coloring c = make_random(5, rng.next_u64());
    const Direction dir(rng.uniform(0, kPi));
    const double best = max_segment_in_direction(c, dir).value;
    const std::vector<double> bp = breakpoint_offsets(5, dir);
    for (int q = 0; q <= 2000; ++q) {
      const double t = bp.front() + (bp.back() - bp.front()) * q / 2000.0;
      CHECK(exhaustive_subsegment(c, chord_segment(5, dir, t)) <= best + 1e-9);
    }
  }
}
