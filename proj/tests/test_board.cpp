#include <doctest.h>

#include <sstream>

#include "needleboard/board.hpp"
#include "needleboard/rng.hpp"

using namespace needleboard;

TEST_CASE("constant boards") {
  const Coloring two = make_constant(2, 1.0);
  for (double v : two.cells()) CHECK(v == 1.0);
  const Coloring one = make_constant(1, -1.0);
  CHECK(one.at(0, 0) == -1.0);
  CHECK(sum_squares(make_constant(3, 0.0)) == 0.0);
  CHECK(sum_squares(make_constant(2, 2.0)) == 16.0);
  CHECK_THROWS_AS(make_constant(0, 1.0), std::invalid_argument);
}

TEST_CASE("parity board") {
  const Coloring c = make_parity(2);
  CHECK(c.at(0, 0) == 1.0);
  CHECK(c.at(1, 0) == -1.0);
  CHECK(c.at(0, 1) == -1.0);
  CHECK(c.at(1, 1) == 1.0);
  CHECK(make_parity(1).at(0, 0) == 1.0);
  for (int n = 1; n <= 9; ++n) {
    const Coloring p = make_parity(n);
    const double s = cell_sum(p);
    CHECK((s == 0.0 || s == 1.0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(p.at(i, j) == p.at(j, i));
  }
}

TEST_CASE("stripes") {
  const Coloring h = make_stripes(2, StripeAxis::horizontal);
  CHECK(h.at(0, 0) == 1.0);
  CHECK(h.at(1, 0) == 1.0);
  CHECK(h.at(0, 1) == -1.0);
  CHECK(h.at(1, 1) == -1.0);
  const Coloring v = make_stripes(2, StripeAxis::vertical);
  CHECK(v.at(0, 0) == 1.0);
  CHECK(v.at(0, 1) == 1.0);
  CHECK(v.at(1, 0) == -1.0);
  CHECK(v.at(1, 1) == -1.0);
}

TEST_CASE("random boards are deterministic and balanced") {
  CHECK(make_random(17, 42) == make_random(17, 42));
  CHECK_FALSE(make_random(17, 42) == make_random(17, 43));
  const Coloring small = make_random(2, 5);
  for (double v : small.cells()) CHECK((v == 1.0 || v == -1.0));

  double mean = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) mean += cell_sum(make_random(64, s)) / (64.0 * 64.0);
  mean /= 100.0;
  CHECK(std::abs(mean) < 0.1);
  for (std::uint64_t s = 0; s < 100; ++s) CHECK(std::abs(cell_sum(make_random(64, s))) / 4096.0 < 0.1);
}

TEST_CASE("random cell formula") {
  // Reference values of the SplitMix64 finalizer.
  CHECK(mix64(0) == 0);
  CHECK(mix64(1) == 0x5692161D100B05E5ULL);
  CHECK(mix64(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
  const Coloring c = make_random(3, 7);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const std::uint64_t word = mix64(7ULL ^ mix64((static_cast<std::uint64_t>(i) << 32) + j + 1));
      CHECK(c.at(i, j) == ((word >> 63) == 0 ? 1.0 : -1.0));
    }
}

TEST_CASE("generators have n^2 energy") {
  for (int n : {1, 2, 5, 8}) {
    CHECK(sum_squares(make_parity(n)) == n * n);
    CHECK(sum_squares(make_stripes(n, StripeAxis::vertical)) == n * n);
    CHECK(sum_squares(make_random(n, 3)) == n * n);
    CHECK(sum_squares(make_constant(n, -1.0)) == n * n);
  }
}

TEST_CASE("text format") {
  std::ostringstream os;
  write_text(make_parity(2), os);
  CHECK(os.str() == "needleboard v1\n2\n-+\n+-\n");

  std::ostringstream stripes;
  write_text(make_stripes(3, StripeAxis::horizontal), stripes);
  CHECK(stripes.str() == "needleboard v1\n3\n+++\n---\n+++\n");

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Coloring c = make_random(1 + static_cast<int>(seed % 7), seed);
    std::stringstream ss;
    write_text(c, ss);
    CHECK(read_text(ss) == c);
  }
  std::ostringstream bad;
  CHECK_THROWS_AS(write_text(make_constant(2, 0.5), bad), std::invalid_argument);
}

TEST_CASE("text format errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_text(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("needleboard v2\n1\n+\n") == 1);
  CHECK(line_of("needleboard v1\nx\n+\n") == 2);
  CHECK(line_of("needleboard v1\n0\n") == 2);
  CHECK(line_of("needleboard v1\n2\n++\n+\n") == 4);
  CHECK(line_of("needleboard v1\n2\n++\n+x\n") == 4);
  CHECK(line_of("needleboard v1\n2\n++\n") == 4);
  CHECK(line_of("needleboard v1\n2\n++ \n++\n") == 3);
  CHECK(line_of("needleboard v1\n1\n+\n-\n") == 4);
  CHECK(line_of("needleboard v1\n1\n+\n") == -1);
}
