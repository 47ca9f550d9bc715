#include <doctest.h>

#include <cmath>
#include <numbers>
#include <tuple>

#include "needleboard/geom.hpp"
#include "test_util.hpp"

using namespace needleboard;
using namespace needleboard::testing;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void check_pieces(const CrossingList& got, const std::vector<std::tuple<int, int, double>>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(got[k].i == std::get<0>(want[k]));
    CHECK(got[k].j == std::get<1>(want[k]));
    CHECK(got[k].length == doctest::Approx(std::get<2>(want[k])).epsilon(1e-14));
  }
}

// Independent clipping: intersect with each half-plane by bisection-free sampling of the closed box.
double reference_clipped_length(const Segment& s, int n) {
  double lo = 0.0, hi = 1.0;
  const double a[2] = {s.a.x, s.a.y}, d[2] = {s.b.x - s.a.x, s.b.y - s.a.y};
  for (int k = 0; k < 2; ++k) {
    if (d[k] == 0.0) {
      if (a[k] < 0 || a[k] > n) return 0.0;
      continue;
    }
    const double t0 = -a[k] / d[k], t1 = (n - a[k]) / d[k];
    lo = std::max(lo, std::min(t0, t1));
    hi = std::min(hi, std::max(t0, t1));
  }
  return hi > lo ? (hi - lo) * s.length() : 0.0;
}

}  // namespace

TEST_CASE("axis-aligned and diagonal decompositions") {
  check_pieces(cell_crossings({{0, 0.5}, {2, 0.5}}, 2), {{0, 0, 1.0}, {1, 0, 1.0}});
  check_pieces(cell_crossings({{0, 0}, {2, 2}}, 2), {{0, 0, kSqrt2}, {1, 1, kSqrt2}});
  CHECK(cell_crossings({{-1, 0.5}, {0, 0.5}}, 2).empty());
  // Reverse direction walks the other way.
  check_pieces(cell_crossings({{2, 2}, {0, 0}}, 2), {{1, 1, kSqrt2}, {0, 0, kSqrt2}});
  // Anti-diagonal through the lattice point (1,1).
  check_pieces(cell_crossings({{0, 2}, {2, 0}}, 2), {{0, 1, kSqrt2}, {1, 0, kSqrt2}});
}

TEST_CASE("gridline ownership is half-open") {
  // y = 1 belongs to row 1.
  check_pieces(cell_crossings({{0, 1}, {2, 1}}, 2), {{0, 1, 1.0}, {1, 1, 1.0}});
  // y = 0 belongs to row 0; y = n belongs to nothing.
  check_pieces(cell_crossings({{0, 0}, {2, 0}}, 2), {{0, 0, 1.0}, {1, 0, 1.0}});
  CHECK(cell_crossings({{0, 2}, {2, 2}}, 2).empty());
  CHECK(cell_crossings({{2, 0}, {2, 2}}, 2).empty());
  // x = 1 belongs to column 1, walking downwards.
  check_pieces(cell_crossings({{1, 2}, {1, 0}}, 2), {{1, 1, 1.0}, {1, 0, 1.0}});
}

TEST_CASE("degenerate and partial segments") {
  CHECK(cell_crossings({{0.5, 0.5}, {0.5, 0.5}}, 2).empty());
  CHECK(integrate(make_constant(2, 1.0), Segment{{0.5, 0.5}, {0.5, 0.5}}) == 0.0);
  // Starts outside, ends inside.
  check_pieces(cell_crossings({{-3, 0.25}, {1.5, 0.25}}, 2), {{0, 0, 1.0}, {1, 0, 0.5}});
  const CrossingList l = cell_crossings({{-3, 0.25}, {1.5, 0.25}}, 2);
  CHECK(l.front().t_in == doctest::Approx(3.0));
  CHECK(l.back().t_out == doctest::Approx(4.5));
}

TEST_CASE("integrals on fixtures") {
  CHECK(integrate(make_constant(2, 1.0), Segment{{0, 0.5}, {2, 0.5}}) == doctest::Approx(2.0));
  CHECK(integrate(make_parity(2), Segment{{0, 0.5}, {2, 0.5}}) == doctest::Approx(0.0));
  CHECK(integrate(make_parity(2), Segment{{0, 0}, {2, 2}}) == doctest::Approx(2 * kSqrt2));
  const Coloring stripes = make_stripes(4, StripeAxis::horizontal);
  CHECK(integrate(stripes, Segment{{0.3, 2.5}, {3.7, 2.5}}) == doctest::Approx(3.4));
}

TEST_CASE("midpoint oracle") {
  CounterRng rng(11);
  const Coloring one = make_constant(5, 1.0);
  for (int k = 0; k < 20; ++k) {
    const Segment s = random_segment(rng, 0.0, 5.0);
    for (std::size_t m : {1u, 7u, 100u}) CHECK(integrate_mc(one, s, m) == doctest::Approx(s.length()).epsilon(1e-12));
  }
  CHECK(integrate_mc(make_parity(2), {{0, 0}, {2, 2}}, 10000) == doctest::Approx(2 * kSqrt2).epsilon(1e-2));
  CHECK(integrate_mc(make_parity(2), {{1, 1}, {1, 1}}, 1) == 0.0);
  CHECK_THROWS_AS(integrate_mc(one, {{0, 0}, {1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("crossing list invariants on random segments") {
  CounterRng rng(5);
  for (int k = 0; k < 2000; ++k) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 12);
    const Segment s = random_segment(rng, -2.0, n + 2.0);
    const CrossingList pieces = cell_crossings(s, n);
    double total = 0.0, last_out = -1.0;
    for (const Crossing& p : pieces) {
      CHECK(p.length >= 0.0);
      CHECK(p.length <= kSqrt2 + 1e-12);
      CHECK(p.t_in >= last_out - 1e-12);
      CHECK(p.t_out >= p.t_in);
      CHECK(p.i >= 0);
      CHECK(p.i < n);
      CHECK(p.j >= 0);
      CHECK(p.j < n);
      // Piece midpoint lies in its own cell.
      const Point mid = s.at_arclength(0.5 * (p.t_in + p.t_out));
      if (p.length > 1e-9) {
        CHECK(std::floor(mid.x) == p.i);
        CHECK(std::floor(mid.y) == p.j);
      }
      last_out = p.t_out;
      total += p.length;
    }
    CHECK(total == doctest::Approx(reference_clipped_length(s, n)).epsilon(1e-12));
  }
}

TEST_CASE("lattice-point crossings advance both indices") {
  // Slope-1 lines through lattice points never produce zero-length corner pieces.
  for (int n = 2; n <= 9; ++n) {
    const CrossingList l = cell_crossings({{0, 0}, {double(n), double(n)}}, n);
    REQUIRE(l.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      CHECK(l[k].i == k);
      CHECK(l[k].j == k);
    }
  }
  const CrossingList l = cell_crossings({{0, 1}, {3, 2.5}}, 4);  // passes (2, 2)
  for (const Crossing& p : l) CHECK(p.length > 1e-9);
}

TEST_CASE("integral properties") {
  CounterRng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 10);
    const Coloring c1 = random_real_board(n, rng.next_u64());
    const Coloring c2 = random_real_board(n, rng.next_u64());
    const Segment s = random_segment(rng, -1.0, n + 1.0);
    const double alpha = rng.uniform(-2, 2), beta = rng.uniform(-2, 2);

    CHECK(integrate(combine(alpha, c1, beta, c2), s) ==
          doctest::Approx(alpha * integrate(c1, s) + beta * integrate(c2, s)).epsilon(1e-12).scale(n));
    CHECK(integrate(-c1, s) == -integrate(c1, s));
    CHECK(std::abs(integrate(c1, s)) <= c1.max_abs() * clipped_length(s, n) + 1e-12);

    // Additivity at an interior split point.
    const double t = rng.uniform();
    const Point mid{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
    CHECK(std::abs(integrate(c1, Segment{s.a, mid}) + integrate(c1, Segment{mid, s.b}) - integrate(c1, s)) <= 1e-10);

    // Dihedral equivariance (square symmetries applied to board and segment).
    for (int k = 1; k < 8; ++k) {
      const Coloring tc = transform_board(c1, k);
      const Segment ts{transform_point(s.a, n, k), transform_point(s.b, n, k)};
      CHECK(integrate(tc, ts) == doctest::Approx(integrate(c1, s)).epsilon(1e-10).scale(n));
    }
  }
}

TEST_CASE("midpoint oracle converges at rate 1/m") {
  // Worst observed |exact - mc| * m / |s| over random off-gridline segments is
  // bounded by 4 (each gridline crossing costs at most one sample's width).
  CounterRng rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 8;
    const Coloring c = make_random(n, rng.next_u64());
    const Segment s = random_segment(rng, 0.0, n);
    const std::size_t m = 4096;
    const double err = std::abs(integrate(c, s) - integrate_mc(c, s, m));
    const double crossings = static_cast<double>(cell_crossings(s, n).size());
    worst = std::max(worst, err * m / (s.length() * crossings));
  }
  CHECK(worst <= 1.0);
}
