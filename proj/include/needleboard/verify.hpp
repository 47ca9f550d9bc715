#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "needleboard/board.hpp"
#include "needleboard/geom.hpp"

namespace needleboard {

/// Empirical tail of the segment integral over independent random colorings.
/// Trial k (1-based) uses the coloring make_random(n, seed + k).
struct TailExperiment {
  Segment segment;
  int n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double sigma = 0.0;        // sqrt(sum of squared piece lengths)
  double length_sum = 0.0;   // sum of piece lengths
  std::size_t pieces = 0;
  std::vector<double> lambdas;
  std::vector<std::size_t> exceedances;  // #trials with |integral| > lambda * sigma
  std::vector<double> frequencies;
  std::vector<double> hoeffding;  // 2 exp(-lambda^2 / 2)
  std::vector<double> allowance;  // 3 sqrt(p (1 - p) / trials), p the observed frequency

  bool within_bound(std::size_t k) const { return frequencies[k] <= hoeffding[k] + allowance[k]; }
};

TailExperiment hoeffding_tail(const Segment& seg, int n, std::size_t trials, std::uint64_t seed,
                              const std::vector<double>& lambdas);

/// Best-segment values of random colorings across board sizes. Trial t of
/// side n uses make_random(n, seed + t).
struct ScalingReport {
  std::vector<int> ns;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  int angles = 0;  // 0: default_angles(n) per side
  int refine = 0;
  std::vector<std::vector<double>> values;  // [n index][trial]
  std::vector<double> max_ratio;            // max over trials of value / sqrt(n ln n)
  std::optional<double> exponent;           // least-squares slope of log value vs log n
};

ScalingReport upper_bound_scan(const std::vector<int>& ns, std::size_t trials, std::uint64_t seed, int angles,
                               int refine = 3);

// Least-squares slope of log(y) against log(x); empty with fewer than two distinct x.
std::optional<double> fit_log_slope(const std::vector<double>& x, const std::vector<double>& y);

enum class FixtureKind { constant, parity, stripes, random };

struct Fixture {
  FixtureKind kind = FixtureKind::random;
  std::uint64_t seed = 0;  // random only

  Coloring make(int n) const;
  std::string label() const;
};

// "constant", "parity", "stripes", "random:<seed>"
Fixture parse_fixture(const std::string& text);

struct LowerBoundRow {
  std::string fixture;
  int n = 0;
  double best_chord = 0.0;
  double ratio_sqrt_n = 0.0;
  std::optional<double> certificate;
  std::optional<double> certificate_radius;
  bool sound = true;  // best_chord >= certificate
};

std::vector<LowerBoundRow> lower_bound_scan(const std::vector<Fixture>& fixtures, const std::vector<int>& ns,
                                            int angles, int refine = 3);

inline constexpr int kMaxPerturbationSide = 8;

// Rounds both endpoints to the lattice of the given spacing.
Segment snap_to_grid(const Segment& s, double spacing);

struct PerturbationReport {
  int n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double spacing = 0.0;            // n^-10
  double generic_max = 0.0;        // angle in [1/n, pi/2 - 1/n]
  double strip_max = 0.0;          // nearly horizontal, checked strip by strip
  std::size_t strip_splits = 0;    // nearly horizontal probes spanning two strips
  double max_deviation() const { return generic_max > strip_max ? generic_max : strip_max; }
};

/// Randomized check that snapping a segment's endpoints to the n^-10 grid
/// changes its integral by at most 1, for generic and nearly horizontal probes.
PerturbationReport perturbation_check(int n, std::size_t trials, std::uint64_t seed);

}  // namespace needleboard
