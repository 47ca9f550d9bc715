#include "needleboard/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "needleboard/parallel.hpp"

namespace needleboard {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGoldenTolerance = 1e-11;
constexpr int kGoldenMaxIterations = 90;
constexpr std::size_t kSnapCandidates = 4;
constexpr double kOnLineTolerance = 1e-9;

struct Probe {
  double theta = 0.0;
  double offset = 0.0;
  double value = -1.0;
  Segment segment;
};

bool better(const Probe& a, const Probe& b) {
  return a.value > b.value || (a.value == b.value && a.theta < b.theta);
}

Probe eval_chord(const Coloring& c, double theta) {
  const Direction dir(theta);
  const ChordMax m = max_chord_in_direction(c, dir);
  return {dir.theta(), m.offset, m.value, chord_segment(c.n(), dir, m.offset)};
}

Probe eval_segment(const Coloring& c, double theta) {
  const Direction dir(theta);
  const SegmentMax m = max_segment_in_direction(c, dir);
  return {dir.theta(), m.offset, m.value, m.segment};
}

double angular_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

double chord_theta_through(int dx, int dy) {
  // u_perp = (-sin, cos) parallel to (dx, dy)
  return Direction(std::atan2(-static_cast<double>(dx), static_cast<double>(dy))).theta();
}

// Lattice directions through the lattice points on the incumbent's line, nearest first.
std::vector<double> snap_candidates(int n, const Probe& incumbent, double window) {
  const Direction dir(incumbent.theta);
  const Point u = dir.u();
  std::vector<std::pair<int, int>> on_line;
  for (int py = 0; py <= n; ++py)
    for (int px = 0; px <= n; ++px)
      if (std::abs(px * u.x + py * u.y - incumbent.offset) <= kOnLineTolerance) on_line.emplace_back(px, py);
  std::vector<std::pair<double, double>> found;  // (gap, theta)
  for (const auto& [px, py] : on_line)
    for (int qy = 0; qy <= n; ++qy)
      for (int qx = 0; qx <= n; ++qx) {
        if (qx == px && qy == py) continue;
        const double theta = chord_theta_through(qx - px, qy - py);
        const double gap = angular_gap(theta, incumbent.theta);
        if (gap <= window) found.emplace_back(gap, theta);
      }
  std::sort(found.begin(), found.end());
  std::vector<double> out;
  for (const auto& [gap, theta] : found) {
    if (std::any_of(out.begin(), out.end(), [&](double t) { return angular_gap(t, theta) < 1e-13; })) continue;
    out.push_back(theta);
    if (out.size() == kSnapCandidates) break;
  }
  return out;
}

template <typename Eval>
Probe golden_maximize(Eval&& eval, double lo, double hi, std::size_t& evaluations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  Probe best;
  auto probe = [&](double theta) {
    Probe p = eval(theta);
    ++evaluations;
    if (better(p, best)) best = p;
    return p.value;
  };
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = probe(x1), f2 = probe(x2);
  for (int it = 0; it < kGoldenMaxIterations && hi - lo > kGoldenTolerance; ++it) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = probe(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = probe(x2);
    }
  }
  return best;
}

// Seeds for refinement: scan local maxima, best first, at least two steps apart.
std::vector<std::size_t> refinement_seeds(const std::vector<Probe>& scan, int refine) {
  const std::size_t m = scan.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scan[a].value > scan[b].value; });
  std::vector<std::size_t> seeds;
  for (std::size_t k : order) {
    if (seeds.size() >= static_cast<std::size_t>(refine)) break;
    const double v = scan[k].value;
    if (m > 2 && (v < scan[(k + m - 1) % m].value || v < scan[(k + 1) % m].value)) continue;
    const bool near = std::any_of(seeds.begin(), seeds.end(), [&](std::size_t s) {
      const std::size_t d = k > s ? k - s : s - k;
      return std::min(d, m - d) <= 1;
    });
    if (!near) seeds.push_back(k);
  }
  return seeds;
}

template <typename Eval>
Probe directional_search(const Coloring& c, int angles, int refine, Eval eval, SearchStrategy* strategy) {
  if (angles < 1) throw std::invalid_argument("angles must be >= 1");
  if (refine < 0) throw std::invalid_argument("refine must be >= 0");
  const std::size_t m = static_cast<std::size_t>(angles);
  std::vector<Probe> scan(m);
  parallel_for(m, [&](std::size_t k) { scan[k] = eval(kPi * static_cast<double>(k) / static_cast<double>(angles)); });
  Probe best;
  for (const Probe& p : scan)
    if (better(p, best)) best = p;
  std::size_t evaluations = m;

  const double window = kPi / static_cast<double>(angles);
  for (std::size_t seed : refinement_seeds(scan, refine)) {
    const double center = scan[seed].theta;
    Probe local = golden_maximize(eval, center - window, center + window, evaluations);
    if (better(scan[seed], local)) local = scan[seed];
    for (double theta : snap_candidates(c.n(), local, window)) {
      const Probe p = eval(theta);
      ++evaluations;
      if (better(p, local)) local = p;
    }
    if (better(local, best)) best = local;
  }
  if (strategy) *strategy = {angles, refine, false, evaluations};
  return best;
}

}  // namespace

int default_angles(int n) {
  const long long a = 8LL * n * n;
  return static_cast<int>(std::min<long long>(a, 200000));
}

ChordResult best_chord(const Coloring& c, int angles, int refine, SearchStrategy* strategy) {
  const Probe p = directional_search(c, angles, refine, [&](double theta) { return eval_chord(c, theta); }, strategy);
  return {{p.theta, p.offset}, p.segment, p.value};
}

SegmentResult best_segment(const Coloring& c, int angles, int refine, SearchStrategy* strategy) {
  const Probe p = directional_search(c, angles, refine, [&](double theta) { return eval_segment(c, theta); }, strategy);
  return {p.segment, p.theta, p.offset, p.value};
}

namespace {

void fill_ratios(DiscrepancyReport& r) {
  const double n = r.n;
  r.chord_ratio_sqrt_n = r.best_chord.value / std::sqrt(n);
  r.segment_ratio_sqrt_n = r.best_segment.value / std::sqrt(n);
  if (r.n > 1) {
    const double scale = std::sqrt(n * std::log(n));
    r.chord_ratio_sqrt_n_log_n = r.best_chord.value / scale;
    r.segment_ratio_sqrt_n_log_n = r.best_segment.value / scale;
  }
}

// A chord is itself a segment; keep the reported segment at least as good.
void reconcile(const Coloring& c, DiscrepancyReport& r) {
  if (r.best_segment.value >= r.best_chord.value) return;
  const Direction dir(r.best_chord.chord.theta);
  const SegmentMax m = best_subsegment(c, chord_segment(c.n(), dir, r.best_chord.chord.offset));
  r.best_segment = {m.segment, dir.theta(), r.best_chord.chord.offset, m.value};
}

}  // namespace

DiscrepancyReport search(const Coloring& c, int angles, int refine) {
  DiscrepancyReport r;
  r.n = c.n();
  SearchStrategy chord_strategy, segment_strategy;
  r.best_chord = best_chord(c, angles, refine, &chord_strategy);
  r.best_segment = best_segment(c, angles, refine, &segment_strategy);
  r.strategy = {angles, refine, false, chord_strategy.directions + segment_strategy.directions};
  reconcile(c, r);
  fill_ratios(r);
  return r;
}

std::vector<double> lattice_directions(int n) {
  std::vector<double> thetas;
  for (int dy = 0; dy <= n; ++dy)
    for (int dx = -n; dx <= n; ++dx) {
      if (dy == 0 && dx <= 0) continue;
      if (std::gcd(std::abs(dx), dy) != 1) continue;
      thetas.push_back(chord_theta_through(dx, dy));
    }
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
  return thetas;
}

DiscrepancyReport brute_force(const Coloring& c) {
  if (c.n() > kMaxBruteForceSide)
    throw std::invalid_argument("brute_force: board side " + std::to_string(c.n()) + " exceeds " +
                                std::to_string(kMaxBruteForceSide));
  const std::vector<double> thetas = lattice_directions(c.n());
  std::vector<Probe> chords(thetas.size()), segments(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t k) {
    chords[k] = eval_chord(c, thetas[k]);
    segments[k] = eval_segment(c, thetas[k]);
  });
  Probe chord, segment;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    if (better(chords[k], chord)) chord = chords[k];
    if (better(segments[k], segment)) segment = segments[k];
  }
  DiscrepancyReport r;
  r.n = c.n();
  r.best_chord = {{chord.theta, chord.offset}, chord.segment, chord.value};
  r.best_segment = {segment.segment, segment.theta, segment.offset, segment.value};
  r.strategy = {static_cast<int>(thetas.size()), 0, true, 2 * thetas.size()};
  reconcile(c, r);
  fill_ratios(r);
  return r;
}

}  // namespace needleboard
