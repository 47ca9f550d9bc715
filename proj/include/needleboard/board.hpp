#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace needleboard {

/// An n x n board of real cell values. Cell (i, j) covers [i, i+1) x [j, j+1):
/// i is the column (x), j is the row (y). Immutable once built.
class Coloring {
 public:
  Coloring(int n, std::vector<double> cells);

  int n() const noexcept { return n_; }
  double at(int i, int j) const noexcept { return cells_[static_cast<std::size_t>(j) * n_ + i]; }
  // Row-major by j, then i.
  std::span<const double> cells() const noexcept { return cells_; }

  bool is_signed() const noexcept;  // every value is exactly +1 or -1
  double max_abs() const noexcept;

  Coloring operator-() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int n_;
  std::vector<double> cells_;
};

enum class StripeAxis { horizontal, vertical };

Coloring make_constant(int n, double value);
Coloring make_parity(int n);
Coloring make_stripes(int n, StripeAxis axis);
Coloring make_random(int n, std::uint64_t seed);

// alpha * a + beta * b, entrywise. Sides must match.
Coloring combine(double alpha, const Coloring& a, double beta, const Coloring& b);

double sum_squares(const Coloring& c);
double cell_sum(const Coloring& c);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& detail, const std::string& source = "");
  int line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  std::string detail_;
};

inline constexpr const char* kBoardMagic = "needleboard v1";

// Throws ParseError naming the offending line.
Coloring read_text(std::istream& in);
// Only +/-1 boards are representable; anything else throws std::invalid_argument.
void write_text(const Coloring& c, std::ostream& out);

Coloring read_board_file(const std::string& path);
void write_board_file(const Coloring& c, const std::string& path);

}  // namespace needleboard
