#pragma once

#include <optional>
#include <vector>

#include "needleboard/board.hpp"
#include "needleboard/radon.hpp"

namespace needleboard {

struct ChordResult {
  Chord chord;
  Segment segment;  // the chord clipped to the board
  double value = 0.0;
};

struct SegmentResult {
  Segment segment;
  double theta = 0.0;
  double offset = 0.0;
  double value = 0.0;
};

struct SearchStrategy {
  int angles = 0;
  int refine = 0;
  bool oracle = false;
  std::size_t directions = 0;  // per-direction evaluations performed
};

struct DiscrepancyReport {
  int n = 0;
  ChordResult best_chord;
  SegmentResult best_segment;
  SearchStrategy strategy;
  double chord_ratio_sqrt_n = 0.0;
  double segment_ratio_sqrt_n = 0.0;
  std::optional<double> chord_ratio_sqrt_n_log_n;  // absent for n = 1
  std::optional<double> segment_ratio_sqrt_n_log_n;
};

inline constexpr int kMaxBruteForceSide = 16;

// min(8 n^2, 200000)
int default_angles(int n);

/// Scans theta_k = k pi / angles with the exact per-direction chord maximum,
/// then refines the `refine` best scan peaks with a golden-section search over
/// a window of one scan step either side, finishing each with the nearest
/// lattice directions through the witness line.
ChordResult best_chord(const Coloring& c, int angles, int refine, SearchStrategy* strategy = nullptr);
SegmentResult best_segment(const Coloring& c, int angles, int refine, SearchStrategy* strategy = nullptr);

DiscrepancyReport search(const Coloring& c, int angles, int refine);

// Chord directions through pairs of distinct lattice points of {0..n}^2, ascending.
std::vector<double> lattice_directions(int n);

/// Exhaustive oracle over every lattice-pair direction (n <= 16).
DiscrepancyReport brute_force(const Coloring& c);

}  // namespace needleboard
