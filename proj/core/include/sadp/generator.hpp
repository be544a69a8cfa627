#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "sadp/cell_profile.hpp"
#include "sadp/legalizer.hpp"

namespace sadp {

/// mt19937_64 with a portable bounded-integer draw, so a seed produces the
/// same output on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(int percent) { return uniform(0, 99) < percent; }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

struct CellShape {
  Coord height = 14;
  Coord min_width = 6;
  Coord max_width = 16;
  int max_signal_patterns = 8;
  bool rails = true;
};

/// Random standard cell: full-width power and ground rails and width-1
/// vertical signal columns (single or stacked, some with a horizontal stub).
/// The result is structurally valid but not necessarily decomposable.
Cell randomCell(Rng& rng, const CellShape& shape, const std::string& name);

struct GeneratorOptions {
  std::size_t cells = 1000;  // placed instances
  int rows = 10;
  double util = 0.7;
  std::uint64_t seed = 1;
  std::size_t lib_cells = 24;
  std::array<int, 3> pg_mix{2, 1, 0};  // relative weights of FreePG, SamePG, DiffPG library cells
  int max_signal_patterns = 8;          // per library cell, rails excluded
  double s_dp = 3;
  double w_spacer = 1;
};

struct Benchmark {
  Library library;
  Placement placement;
};

/// Decomposable library plus a placer-like row placement: cells abut in
/// clusters separated by a few whitespace holes, orientations are random, and
/// every instance carries a random coloring that matches its row's rails.
/// Throws std::invalid_argument on unusable options.
Benchmark generateBenchmark(const GeneratorOptions& opts);

}  // namespace sadp
