#include "needleboard/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "needleboard/parallel.hpp"
#include "needleboard/rng.hpp"
#include "needleboard/search.hpp"
#include "needleboard/spectral.hpp"

namespace needleboard {

TailExperiment hoeffding_tail(const Segment& seg, int n, std::size_t trials, std::uint64_t seed,
                              const std::vector<double>& lambdas) {
  if (n < 1) throw std::invalid_argument("hoeffding_tail: board side must be >= 1");
  if (trials < 1) throw std::invalid_argument("hoeffding_tail: trials must be >= 1");
  const CrossingList pieces = cell_crossings(seg, n);
  TailExperiment ex;
  ex.segment = seg;
  ex.n = n;
  ex.trials = trials;
  ex.seed = seed;
  ex.lambdas = lambdas;
  ex.pieces = pieces.size();
  ex.sigma = crossing_sigma(pieces);
  for (const Crossing& p : pieces) ex.length_sum += p.length;
  if (ex.sigma == 0.0) throw std::invalid_argument("hoeffding_tail: segment does not meet the board");

  // Per-block counts, merged in block order.
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (trials + kBlock - 1) / kBlock;
  std::vector<std::vector<std::size_t>> counts(blocks, std::vector<std::size_t>(lambdas.size(), 0));
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t end = std::min(trials, (b + 1) * kBlock);
    for (std::size_t k = b * kBlock; k < end; ++k) {
      const std::uint64_t trial_seed = seed + k + 1;
      double sum = 0.0;
      for (const Crossing& p : pieces)
        sum += random_cell_sign(trial_seed, static_cast<std::uint64_t>(p.i), static_cast<std::uint64_t>(p.j)) * p.length;
      const double a = std::abs(sum);
      for (std::size_t l = 0; l < lambdas.size(); ++l)
        if (a > lambdas[l] * ex.sigma) ++counts[b][l];
    }
  });
  ex.exceedances.assign(lambdas.size(), 0);
  for (const auto& block : counts)
    for (std::size_t l = 0; l < lambdas.size(); ++l) ex.exceedances[l] += block[l];
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    const double p = static_cast<double>(ex.exceedances[l]) / static_cast<double>(trials);
    ex.frequencies.push_back(p);
    ex.hoeffding.push_back(2.0 * std::exp(-lambdas[l] * lambdas[l] / 2.0));
    ex.allowance.push_back(3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials)));
  }
  return ex;
}

std::optional<double> fit_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_log_slope: size mismatch");
  double mx = 0.0, my = 0.0;
  std::size_t m = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0.0) || !(y[k] > 0.0)) continue;
    mx += std::log(x[k]);
    my += std::log(y[k]);
    ++m;
  }
  if (m < 2) return std::nullopt;
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0.0) || !(y[k] > 0.0)) continue;
    const double dx = std::log(x[k]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[k]) - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

ScalingReport upper_bound_scan(const std::vector<int>& ns, std::size_t trials, std::uint64_t seed, int angles,
                               int refine) {
  ScalingReport r;
  r.ns = ns;
  r.trials = trials;
  r.seed = seed;
  r.angles = angles;
  r.refine = refine;
  std::vector<double> xs, ys;
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("upper_bound_scan: board sides must be >= 2");
    const int a = angles > 0 ? angles : default_angles(n);
    std::vector<double> values;
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Coloring c = make_random(n, seed + t);
      const double v = best_segment(c, a, refine).value;
      values.push_back(v);
      worst = std::max(worst, v / std::sqrt(n * std::log(static_cast<double>(n))));
      xs.push_back(n);
      ys.push_back(v);
    }
    r.values.push_back(std::move(values));
    r.max_ratio.push_back(worst);
  }
  r.exponent = fit_log_slope(xs, ys);
  return r;
}

Coloring Fixture::make(int n) const {
  switch (kind) {
    case FixtureKind::constant:
      return make_constant(n, 1.0);
    case FixtureKind::parity:
      return make_parity(n);
    case FixtureKind::stripes:
      return make_stripes(n, StripeAxis::horizontal);
    case FixtureKind::random:
      break;
  }
  return make_random(n, seed);
}

std::string Fixture::label() const {
  switch (kind) {
    case FixtureKind::constant:
      return "constant";
    case FixtureKind::parity:
      return "parity";
    case FixtureKind::stripes:
      return "stripes";
    case FixtureKind::random:
      break;
  }
  return "random:" + std::to_string(seed);
}

Fixture parse_fixture(const std::string& text) {
  if (text == "constant") return {FixtureKind::constant, 0};
  if (text == "parity") return {FixtureKind::parity, 0};
  if (text == "stripes") return {FixtureKind::stripes, 0};
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    const std::string digits = text.substr(prefix.size());
    if (std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      return {FixtureKind::random, std::stoull(digits)};
  }
  throw std::invalid_argument("unknown fixture '" + text + "'");
}

std::vector<LowerBoundRow> lower_bound_scan(const std::vector<Fixture>& fixtures, const std::vector<int>& ns,
                                            int angles, int refine) {
  std::vector<LowerBoundRow> rows;
  for (const Fixture& fx : fixtures)
    for (int n : ns) {
      const Coloring c = fx.make(n);
      LowerBoundRow row;
      row.fixture = fx.label();
      row.n = n;
      row.best_chord = best_chord(c, angles > 0 ? angles : default_angles(n), refine).value;
      row.ratio_sqrt_n = row.best_chord / std::sqrt(static_cast<double>(n));
      if (const auto cert = certified_lower_bound(c)) {
        row.certificate = cert->bound;
        row.certificate_radius = cert->radius;
        row.sound = row.best_chord >= cert->bound;
      }
      rows.push_back(row);
    }
  return rows;
}

Segment snap_to_grid(const Segment& s, double spacing) {
  auto snap = [spacing](double v) { return std::round(v / spacing) * spacing; };
  return {{snap(s.a.x), snap(s.a.y)}, {snap(s.b.x), snap(s.b.y)}};
}

namespace {

// Splits a segment at every integer y it crosses.
std::vector<Segment> split_by_strips(const Segment& s) {
  std::vector<double> cuts = {0.0, 1.0};
  const double dy = s.b.y - s.a.y;
  if (dy != 0.0) {
    const double lo = std::min(s.a.y, s.b.y), hi = std::max(s.a.y, s.b.y);
    for (double k = std::floor(lo) + 1.0; k < hi; k += 1.0) cuts.push_back((k - s.a.y) / dy);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Segment> parts;
  auto at = [&](double t) { return Point{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * dy}; };
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Point a = at(cuts[k]), b = at(cuts[k + 1]);
    // Cut points sit exactly on the strip boundary.
    if (k > 0) a.y = std::round(a.y);
    if (k + 2 < cuts.size()) b.y = std::round(b.y);
    parts.push_back({a, b});
  }
  return parts;
}

}  // namespace

PerturbationReport perturbation_check(int n, std::size_t trials, std::uint64_t seed) {
  if (n < 2 || n > kMaxPerturbationSide)
    throw std::invalid_argument("perturbation_check: board side must be in [2, 8], got " + std::to_string(n));
  constexpr double pi = std::numbers::pi;
  PerturbationReport r;
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  r.spacing = std::pow(static_cast<double>(n), -10.0);
  const double side = n;
  const double min_angle = 1.0 / side;

  CounterRng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Coloring c = make_random(n, mix64(seed ^ (0x9E3779B97F4A7C15ULL * (t + 1))));

    // Generic branch: acute angle with the x-axis in [1/n, pi/2 - 1/n].
    Segment generic;
    for (;;) {
      const Point a{rng.uniform(0.0, side), rng.uniform(0.0, side)};
      const double acute = rng.uniform(min_angle, pi / 2 - min_angle);
      const double heading = rng.uniform() < 0.5 ? acute : pi - acute;
      const double len = rng.uniform(0.0, 2.0 * side);
      const Segment raw{a, {a.x + len * std::cos(heading), a.y + len * std::sin(heading)}};
      const auto range = clip_parameters(raw, n);
      if (!range || range->second <= range->first) continue;
      const double dx = raw.b.x - raw.a.x, dy = raw.b.y - raw.a.y;
      generic = {{raw.a.x + range->first * dx, raw.a.y + range->first * dy},
                 {raw.a.x + range->second * dx, raw.a.y + range->second * dy}};
      break;
    }
    const Segment snapped = snap_to_grid(generic, r.spacing);
    r.generic_max = std::max(r.generic_max, std::abs(integrate(c, generic) - integrate(c, snapped)));

    // Nearly horizontal branch: slope below tan(1/n), checked one strip at a time.
    Segment flat;
    for (;;) {
      const double row = std::floor(rng.uniform(0.0, side));
      const Point a{rng.uniform(0.0, side), rng.uniform(row, row + 1.0)};
      const double bx = rng.uniform(0.0, side);
      const double slope = std::tan(min_angle) * rng.uniform(-1.0, 1.0);
      const Point b{bx, a.y + slope * (bx - a.x)};
      if (b.y < 0.0 || b.y > side) continue;
      flat = {a, b};
      break;
    }
    const std::vector<Segment> parts = split_by_strips(flat);
    if (parts.size() > 1) ++r.strip_splits;
    double whole = 0.0;
    for (const Segment& part : parts) {
      const Segment part_snapped = snap_to_grid(part, r.spacing);
      const double d = integrate(c, part) - integrate(c, part_snapped);
      whole += d;
      r.strip_max = std::max(r.strip_max, std::abs(d));
    }
    r.strip_max = std::max(r.strip_max, std::abs(whole));
  }
  return r;
}

}  // namespace needleboard
