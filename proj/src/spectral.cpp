#include "needleboard/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "needleboard/parallel.hpp"

namespace needleboard {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(-2 pi i x), with the argument reduced before the trig call.
Complex unit_phase(double x) noexcept {
  const double frac = x - std::round(x);
  return std::polar(1.0, -2.0 * kPi * frac);
}

// sin(x)/x and (sin x - x cos x)/x^3, both smooth through 0.
double sinc_unnormalized(double x) noexcept {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

double odd_moment_kernel(double x) noexcept {
  const double x2 = x * x;
  if (std::abs(x) < 0.1) return 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0 - x2 * x2 * x2 / 45360.0;
  return (std::sin(x) - x * std::cos(x)) / (x2 * x);
}

// |phi|^2 on the periodic midpoint grid ((k1 + 1/2)/K, (k2 + 1/2)/K).
// |phi|^2 at the cell midpoints (k + 1/2) / K, for k1, k2 in [lo, lo + count).
// When count >= K the whole period is stored and any index is accepted.
class PhiPowerTable {
 public:
  PhiPowerTable(const Coloring& c, int resolution, long long lo, long long count)
      : k_(resolution), lo_(count >= resolution ? 0 : lo), m_(std::min<long long>(count, resolution)),
        power_(static_cast<std::size_t>(m_ * m_)) {
    const int n = c.n();
    const std::size_t M = static_cast<std::size_t>(m_);
    // phase[p * M + q] = exp(-2 pi i p (k + 1/2) / K) = exp(-pi i p (2k+1) / K), k = lo + q
    std::vector<Complex> phase(static_cast<std::size_t>(n) * M);
    for (int p = 0; p < n; ++p)
      for (std::size_t q = 0; q < M; ++q) {
        const long long k = residue(lo_ + static_cast<long long>(q));
        const long long r = (static_cast<long long>(p) * (2 * k + 1)) % (2LL * k_);
        phase[p * M + q] = std::polar(1.0, -kPi * static_cast<double>(r) / k_);
      }
    // rows[j * M + q1] = sum_i z_ij phase_i(q1)
    std::vector<Complex> rows(static_cast<std::size_t>(n) * M);
    for (int j = 0; j < n; ++j)
      for (std::size_t q1 = 0; q1 < M; ++q1) {
        Complex s = 0.0;
        for (int i = 0; i < n; ++i) s += c.at(i, j) * phase[i * M + q1];
        rows[j * M + q1] = s;
      }
    parallel_for(M, [&](std::size_t q2) {
      for (std::size_t q1 = 0; q1 < M; ++q1) {
        Complex s = 0.0;
        for (int j = 0; j < n; ++j) s += rows[j * M + q1] * phase[j * M + q2];
        power_[q2 * M + q1] = std::norm(s);
      }
    });
  }

  PhiPowerTable(const Coloring& c, int resolution) : PhiPowerTable(c, resolution, 0, resolution) {}

  double at(long long k1, long long k2) const noexcept {
    return power_[static_cast<std::size_t>(slot(k2) * m_ + slot(k1))];
  }

  double mean() const noexcept {
    double s = 0.0;
    for (double v : power_) s += v;
    return s / static_cast<double>(power_.size());
  }

 private:
  long long residue(long long k) const noexcept { return ((k % k_) + k_) % k_; }
  long long slot(long long k) const noexcept { return m_ == k_ ? residue(k) : k - lo_; }

  long long k_;
  long long lo_;
  long long m_;
  std::vector<double> power_;
};

}  // namespace

double sinc(double x) noexcept { return sinc_unnormalized(kPi * x); }

Complex chi_q_hat(double xi1, double xi2) noexcept {
  return unit_phase(0.5 * (xi1 + xi2)) * (sinc(xi1) * sinc(xi2));
}

Complex phi(const Coloring& c, double xi1, double xi2) {
  const int n = c.n();
  std::vector<Complex> col(static_cast<std::size_t>(n)), row(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    col[static_cast<std::size_t>(p)] = unit_phase(p * xi1);
    row[static_cast<std::size_t>(p)] = unit_phase(p * xi2);
  }
  Complex total = 0.0;
  for (int j = 0; j < n; ++j) {
    Complex s = 0.0;
    for (int i = 0; i < n; ++i) s += c.at(i, j) * col[static_cast<std::size_t>(i)];
    total += s * row[static_cast<std::size_t>(j)];
  }
  return total;
}

Complex f_hat(const Coloring& c, double xi1, double xi2) { return chi_q_hat(xi1, xi2) * phi(c, xi1, xi2); }

Complex projection_transform(const Projection& p, double xi) {
  const double omega = -2.0 * kPi * xi;
  Complex total = 0.0;
  for (std::size_t k = 0; k < p.intervals(); ++k) {
    const double h = p.breakpoints[k + 1] - p.breakpoints[k];
    const double half = 0.5 * h;
    const double mid = p.breakpoints[k] + half;
    const double g_mid = 0.5 * (p.left_limits[k] + p.right_limits[k]);
    const double slope = h > 0.0 ? (p.right_limits[k] - p.left_limits[k]) / h : 0.0;
    const double x = omega * half;
    const Complex body(g_mid * h * sinc_unnormalized(x), slope * 2.0 * omega * half * half * half * odd_moment_kernel(x));
    total += unit_phase(xi * mid) * body;
  }
  return total;
}

double slice_residual(const Coloring& c, const Direction& dir, std::span<const double> freqs) {
  const Projection p = project(c, dir);
  const Point u = dir.u();
  double worst = 0.0;
  for (double xi : freqs) worst = std::max(worst, std::abs(projection_transform(p, xi) - f_hat(c, xi * u.x, xi * u.y)));
  return worst;
}

double line_energy(const Projection& p) {
  double sum = 0.0;
  for (std::size_t k = 0; k < p.intervals(); ++k) {
    const double a = p.left_limits[k], b = p.right_limits[k];
    sum += (p.breakpoints[k + 1] - p.breakpoints[k]) * (a * a + a * b + b * b) / 3.0;
  }
  return sum;
}

double line_energy(const Coloring& c, const Direction& dir) { return line_energy(project(c, dir)); }

double line_energy_spectral(const Coloring& c, const Direction& dir, double limit) {
  const Point u = dir.u();
  const double width = c.n() * (std::abs(u.x) + std::abs(u.y));
  // Autocorrelation of the projection lives on [-width, width]; step 1/(2 width) is alias-free.
  const long long half_count = static_cast<long long>(std::ceil(limit * 2.0 * width));
  const double step = limit / static_cast<double>(half_count);
  double sum = 0.0;
  for (long long k = -half_count; k <= half_count; ++k) {
    const double t = k * step;
    const double w = (k == -half_count || k == half_count) ? 0.5 : 1.0;
    sum += w * std::norm(f_hat(c, t * u.x, t * u.y));
  }
  return sum * step;
}

namespace {

double disk_sum(const Coloring& c, double radius, int resolution) {
  const long long K = resolution;
  const double scaled = radius * static_cast<double>(K);  // radius in cell units

  // Cells k cover [k, k+1) in units of 1/K; s(k) = sinc^2 at the cell midpoint.
  const long long k_min = static_cast<long long>(std::floor(-scaled)) - 1;
  const long long k_max = static_cast<long long>(std::ceil(scaled)) + 1;
  const PhiPowerTable table(c, resolution, k_min, k_max - k_min + 1);
  const std::size_t span = static_cast<std::size_t>(k_max - k_min + 1);
  std::vector<double> weight(span), stride_sum(span);
  for (std::size_t q = 0; q < span; ++q) {
    const double s = sinc((static_cast<double>(k_min + static_cast<long long>(q)) + 0.5) / static_cast<double>(K));
    weight[q] = s * s;
    stride_sum[q] = weight[q] + (q >= static_cast<std::size_t>(K) ? stride_sum[q - K] : 0.0);
  }
  auto w_at = [&](long long k) { return weight[static_cast<std::size_t>(k - k_min)]; };
  // Sum of s(k) over k = r (mod K) in [a, b].
  auto residue_sum = [&](long long r, long long a, long long b) {
    const long long first = a + ((r - a) % K + K) % K;
    if (first > b) return 0.0;
    const long long last = first + ((b - first) / K) * K;
    const double upto_last = stride_sum[static_cast<std::size_t>(last - k_min)];
    const long long before = first - K;
    return upto_last - (before >= k_min ? stride_sum[static_cast<std::size_t>(before - k_min)] : 0.0);
  };

  const long long row_lo = static_cast<long long>(std::floor(-scaled));
  const long long row_hi = static_cast<long long>(std::ceil(scaled)) - 1;
  const std::size_t rows = static_cast<std::size_t>(row_hi - row_lo + 1);
  std::vector<double> row_value(rows, 0.0);
  parallel_for(rows, [&](std::size_t idx) {
    const long long k2 = row_lo + static_cast<long long>(idx);
    const double mid2 = static_cast<double>(k2) + 0.5;
    if (std::abs(mid2) >= scaled) return;
    const double half = std::sqrt(scaled * scaled - mid2 * mid2);
    const double lo = -half, hi = half;
    const long long first_cell = static_cast<long long>(std::floor(lo));
    const long long last_cell = static_cast<long long>(std::ceil(hi)) - 1;
    double sum = 0.0;
    if (first_cell == last_cell) {
      sum = (hi - lo) * w_at(first_cell) * table.at(first_cell, k2);
    } else {
      sum += (static_cast<double>(first_cell + 1) - lo) * w_at(first_cell) * table.at(first_cell, k2);
      sum += (hi - static_cast<double>(last_cell)) * w_at(last_cell) * table.at(last_cell, k2);
      const long long a = first_cell + 1, b = last_cell - 1;
      if (b - a + 1 <= K) {
        for (long long k = a; k <= b; ++k) sum += w_at(k) * table.at(k, k2);
      } else if (a <= b) {
        for (long long r = 0; r < K; ++r) sum += table.at(r, k2) * residue_sum(r, a, b);
      }
    }
    row_value[idx] = w_at(k2) * sum;
  });

  double disk = 0.0;
  for (double v : row_value) disk += v;
  return disk / static_cast<double>(K * K);
}

}  // namespace

DiskQuadrature disk_quadrature(const Coloring& c, double radius, int resolution) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be > 0");
  if (resolution < 1) throw std::invalid_argument("quadrature resolution must be >= 1");
  DiskQuadrature out;
  out.resolution = resolution;
  out.disk = disk_sum(c, radius, resolution);
  // sum_m sinc^2(x + m) = 1, so the full-plane integral is the period mean of |phi|^2.
  out.full = PhiPowerTable(c, resolution).mean();
  return out;
}

namespace {

constexpr int kMaxResolution = 4096;
constexpr double kMaxRowWork = 4.0e8;

int initial_resolution(const Coloring& c, double radius) {
  const double want = std::max({2.0 * c.n(), 16.0, 8.0 / radius});
  int k = 1;
  while (k < want) k *= 2;
  return k;
}

EnergyEntry converge_disk(const Coloring& c, double radius, double total, double* full_out) {
  EnergyEntry e;
  e.radius = radius;
  int k = initial_resolution(c, radius);
  if (2.0 * radius * k * std::min<double>(2.0 * radius * k, k) > kMaxRowWork) {
    e.error_estimate = HUGE_VAL;
    e.tail = total;
    e.scaled_tail = total > 0.0 ? radius : 0.0;
    return e;
  }
  double prev = disk_sum(c, radius, k);
  for (;;) {
    const int next_k = 2 * k;
    const double work = 2.0 * radius * next_k * std::min<double>(2.0 * radius * next_k, next_k);
    if (next_k > kMaxResolution || work > kMaxRowWork) {
      e.disk = prev;
      e.resolution = k;
      e.error_estimate = HUGE_VAL;
      e.converged = false;
      break;
    }
    const double cur = disk_sum(c, radius, next_k);
    const double change = std::abs(cur - prev);
    prev = cur;
    k = next_k;
    if (change <= kDiskRelativeTolerance * std::max(std::abs(cur), 1e-300)) {
      e.disk = cur;
      e.resolution = k;
      e.error_estimate = change;
      e.converged = true;
      break;
    }
  }
  if (full_out) *full_out = PhiPowerTable(c, k).mean();
  e.tail = total - e.disk;
  e.scaled_tail = total > 0.0 ? radius * e.tail / total : 0.0;
  return e;
}

}  // namespace

EnergyReport tail_energy(const Coloring& c, std::span<const double> radii) {
  EnergyReport report;
  report.total = sum_squares(c);
  for (double radius : radii) {
    if (!(radius > 0.0)) throw std::invalid_argument("tail_energy: radius must be > 0");
    if (report.total == 0.0) {
      report.entries.push_back({radius, 0.0, 0.0, 0.0, 0.0, 0, true});
      continue;
    }
    double full = 0.0;
    report.entries.push_back(converge_disk(c, radius, report.total, &full));
    report.total_spectral = full;
  }
  return report;
}

EnergyReport tail_energy(const Coloring& c, double radius) { return tail_energy(c, std::span<const double>(&radius, 1)); }

std::optional<Certificate> certified_lower_bound(const Coloring& c) {
  const double total = sum_squares(c);
  if (total == 0.0) throw std::invalid_argument("certified_lower_bound: coloring has zero energy");
  for (int e = kCertificateMinExponent; e <= kCertificateMaxExponent; ++e) {
    const double radius = std::ldexp(1.0, e);
    const EnergyEntry entry = converge_disk(c, radius, total, nullptr);
    if (!entry.converged) continue;
    if (entry.disk - entry.error_estimate >= 0.5 * total) {
      Certificate cert;
      cert.radius = radius;
      cert.disk = entry.disk;
      cert.total = total;
      cert.bound = std::sqrt(total / (2.0 * kPi * radius * std::numbers::sqrt2 * c.n()));
      return cert;
    }
  }
  return std::nullopt;
}

}  // namespace needleboard
