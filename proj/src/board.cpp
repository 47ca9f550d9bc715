#include "needleboard/board.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "needleboard/rng.hpp"

namespace needleboard {

namespace {

void require_side(int n) {
  if (n < 1) throw std::invalid_argument("board side must be >= 1, got " + std::to_string(n));
}

template <typename F>
Coloring generate(int n, F&& value) {
  require_side(n);
  std::vector<double> cells(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(j) * n + i] = value(i, j);
  return Coloring(n, std::move(cells));
}

}  // namespace

Coloring::Coloring(int n, std::vector<double> cells) : n_(n), cells_(std::move(cells)) {
  require_side(n);
  if (cells_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("coloring of side " + std::to_string(n) + " needs " +
                                std::to_string(static_cast<std::size_t>(n) * n) + " cells, got " +
                                std::to_string(cells_.size()));
}

bool Coloring::is_signed() const noexcept {
  return std::all_of(cells_.begin(), cells_.end(), [](double v) { return v == 1.0 || v == -1.0; });
}

double Coloring::max_abs() const noexcept {
  double m = 0.0;
  for (double v : cells_) m = std::max(m, std::abs(v));
  return m;
}

Coloring Coloring::operator-() const {
  std::vector<double> flipped(cells_.size());
  std::transform(cells_.begin(), cells_.end(), flipped.begin(), [](double v) { return -v; });
  return Coloring(n_, std::move(flipped));
}

Coloring make_constant(int n, double value) {
  return generate(n, [value](int, int) { return value; });
}

Coloring make_parity(int n) {
  return generate(n, [](int i, int j) { return (i + j) % 2 == 0 ? 1.0 : -1.0; });
}

Coloring make_stripes(int n, StripeAxis axis) {
  return generate(n, [axis](int i, int j) {
    const int k = axis == StripeAxis::horizontal ? j : i;
    return k % 2 == 0 ? 1.0 : -1.0;
  });
}

Coloring make_random(int n, std::uint64_t seed) {
  return generate(n, [seed](int i, int j) {
    return random_cell_sign(seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j));
  });
}

Coloring combine(double alpha, const Coloring& a, double beta, const Coloring& b) {
  if (a.n() != b.n()) throw std::invalid_argument("combine: board sides differ");
  std::vector<double> cells(a.cells().size());
  for (std::size_t k = 0; k < cells.size(); ++k) cells[k] = alpha * a.cells()[k] + beta * b.cells()[k];
  return Coloring(a.n(), std::move(cells));
}

double sum_squares(const Coloring& c) {
  double s = 0.0;
  for (double v : c.cells()) s += v * v;
  return s;
}

double cell_sum(const Coloring& c) {
  double s = 0.0;
  for (double v : c.cells()) s += v;
  return s;
}

ParseError::ParseError(int line, const std::string& detail, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ":") + "line " + std::to_string(line) + ": " + detail),
      line_(line),
      detail_(detail) {}

Coloring read_text(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError(line_no, "missing header");
  if (line != kBoardMagic) throw ParseError(line_no, "bad header '" + line + "', expected '" + kBoardMagic + "'");

  ++line_no;
  if (!std::getline(in, line)) throw ParseError(line_no, "missing board side");
  if (line.empty() || line.size() > 9 || !std::all_of(line.begin(), line.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw ParseError(line_no, "bad board side '" + line + "'");
  const int n = std::stoi(line);
  if (n < 1) throw ParseError(line_no, "board side must be >= 1");

  std::vector<double> cells(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    ++line_no;
    if (!std::getline(in, line))
      throw ParseError(line_no, "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    if (line.size() != static_cast<std::size_t>(n))
      throw ParseError(line_no, "row has " + std::to_string(line.size()) + " characters, expected " + std::to_string(n));
    const int j = n - 1 - r;
    for (int i = 0; i < n; ++i) {
      const char ch = line[static_cast<std::size_t>(i)];
      if (ch != '+' && ch != '-')
        throw ParseError(line_no, std::string("illegal character '") + ch + "' at column " + std::to_string(i + 1));
      cells[static_cast<std::size_t>(j) * n + i] = ch == '+' ? 1.0 : -1.0;
    }
  }
  ++line_no;
  while (std::getline(in, line)) {
    if (!line.empty()) throw ParseError(line_no, "unexpected trailing content");
    ++line_no;
  }
  return Coloring(n, std::move(cells));
}

void write_text(const Coloring& c, std::ostream& out) {
  if (!c.is_signed()) throw std::invalid_argument("only +/-1 colorings can be written as text");
  const int n = c.n();
  out << kBoardMagic << '\n' << n << '\n';
  std::string row(static_cast<std::size_t>(n), '+');
  for (int j = n - 1; j >= 0; --j) {
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = c.at(i, j) > 0 ? '+' : '-';
    out << row << '\n';
  }
}

Coloring read_board_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open board file '" + path + "'");
  try {
    return read_text(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

void write_board_file(const Coloring& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write board file '" + path + "'");
  write_text(c, out);
}

}  // namespace needleboard
