#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "needleboard/board.hpp"
#include "needleboard/radon.hpp"

namespace needleboard {

// Transform convention throughout: F(xi) = integral f(x) exp(-2 pi i xi.x) dx.
//
// With that convention the unit-square transform is
//   chi_q_hat(xi) = exp(-pi i (xi1 + xi2)) sinc(xi1) sinc(xi2)
// and the cell polynomial is phi(xi) = sum_p z_p exp(-2 pi i p.xi), so that
// f_hat = chi_q_hat * phi holds exactly. The estimates below only use |phi|
// and |chi_q_hat|, which do not depend on the sign of either phase.

using Complex = std::complex<double>;

// sin(pi x) / (pi x), 1 at x = 0.
double sinc(double x) noexcept;

Complex chi_q_hat(double xi1, double xi2) noexcept;
Complex phi(const Coloring& c, double xi1, double xi2);
Complex f_hat(const Coloring& c, double xi1, double xi2);

// One-dimensional transform of the piecewise-linear projection, integrated
// exactly interval by interval.
Complex projection_transform(const Projection& p, double xi);

/// max over the grid of |FT(pi_L f)(xi) - f_hat(xi u)|.
double slice_residual(const Coloring& c, const Direction& dir, std::span<const double> freqs);

// Exact integral of pi(t)^2 over t.
double line_energy(const Projection& p);
double line_energy(const Coloring& c, const Direction& dir);

// Quadrature of |f_hat(t u)|^2 over |t| <= limit (uniform rule, step below the
// band limit of the projection's autocorrelation).
double line_energy_spectral(const Coloring& c, const Direction& dir, double limit);

struct DiskQuadrature {
  double disk = 0.0;      // integral of |f_hat|^2 over |xi| < radius
  double full = 0.0;      // integral of |f_hat|^2 over the plane, same grid
  int resolution = 0;     // samples per unit frequency
};

// Tensor midpoint rule at a fixed resolution; disk boundary cells are weighted
// by their exact overlap along xi1.
DiskQuadrature disk_quadrature(const Coloring& c, double radius, int resolution);

struct EnergyEntry {
  double radius = 0.0;
  double disk = 0.0;
  double tail = 0.0;          // total - disk
  double scaled_tail = 0.0;   // radius * tail / total (0 when total = 0)
  double error_estimate = 0.0;
  int resolution = 0;
  bool converged = false;
};

struct EnergyReport {
  double total = 0.0;           // sum of squared cells
  double total_spectral = 0.0;  // integral of |f_hat|^2 over the plane by quadrature
  std::vector<EnergyEntry> entries;
};

inline constexpr double kDiskRelativeTolerance = 1e-4;

// Resolution doubles until the disk integral changes by at most 1e-4 relative.
EnergyReport tail_energy(const Coloring& c, double radius);
EnergyReport tail_energy(const Coloring& c, std::span<const double> radii);

struct Certificate {
  double bound = 0.0;
  double radius = 0.0;
  double disk = 0.0;
  double total = 0.0;
};

inline constexpr int kCertificateMinExponent = -6;
inline constexpr int kCertificateMaxExponent = 14;

/// Lower bound on the largest chord discrepancy:
///   bound = sqrt(total / (2 pi A sqrt(2) n))
/// for the smallest A = 2^k, k in [-6, 14], whose disk holds at least half the
/// energy (quadrature error counted against it). Empty if no such A exists.
/// Throws std::invalid_argument when every cell is zero.
std::optional<Certificate> certified_lower_bound(const Coloring& c);

}  // namespace needleboard
