// Hand-built cells with known answers, plus small random generators for
// property tests.
#pragma once

#include <string>
#include <vector>

#include "sadp/cell_profile.hpp"
#include "sadp/error.hpp"
#include "sadp/generator.hpp"
#include "sadp/geometry.hpp"

namespace fixture {

using sadp::Cell;
using sadp::Coord;
using sadp::Net;
using sadp::Pattern;
using sadp::Rect;

inline Pattern signal(std::string id, std::vector<Rect> rects) { return {std::move(id), std::move(rects), Net::Signal}; }

inline void addRails(Cell& c, Coord thickness = 1) {
  c.patterns.insert(c.patterns.begin(), {"VDD", {{0, c.height - thickness, c.width, c.height}}, Net::Power});
  c.patterns.insert(c.patterns.begin(), {"VSS", {{0, 0, c.width, thickness}}, Net::Ground});
}

// s_dp = 2. A bar near the left edge, and a conflicting pair A/B near the
// right edge: two components, four candidates.
inline Cell twoComponents() {
  Cell c{"TWO", 10, 10, {}, {}};
  c.patterns.push_back(signal("bar", {{1, 2, 2, 8}}));
  c.patterns.push_back(signal("A", {{6, 3, 7, 7}}));
  c.patterns.push_back(signal("B", {{8, 3, 9, 7}}));
  return c;
}

// s_dp = 2. A bar one unit from each rail ties power to ground.
inline Cell samePg() {
  Cell c{"SAME", 6, 10, {}, {}};
  c.patterns.push_back({"VSS", {{0, 0, 6, 1}}, Net::Ground});
  c.patterns.push_back({"VDD", {{0, 9, 6, 10}}, Net::Power});
  c.patterns.push_back(signal("bar", {{2, 2, 3, 8}}));
  return c;
}

// s_dp = 2. Ground - X - Y - power chain of three edges: rails always differ.
inline Cell diffPg() {
  Cell c{"DIFF", 6, 12, {}, {}};
  c.patterns.push_back({"VSS", {{0, 0, 6, 1}}, Net::Ground});
  c.patterns.push_back({"VDD", {{0, 11, 6, 12}}, Net::Power});
  c.patterns.push_back(signal("X", {{2, 2, 3, 5}}));
  c.patterns.push_back(signal("Y", {{2, 6, 3, 10}}));
  return c;
}

// s_dp = 2. Rails far from the only signal: independent.
inline Cell freePg() {
  Cell c{"FREE", 6, 12, {}, {}};
  c.patterns.push_back({"VSS", {{0, 0, 6, 1}}, Net::Ground});
  c.patterns.push_back({"VDD", {{0, 11, 6, 12}}, Net::Power});
  c.patterns.push_back(signal("S", {{2, 4, 3, 8}}));
  return c;
}

// s_dp = 2. Two stacked patterns one unit from the left edge, one unit apart:
// the left side is exposed through a single component.
inline Cell stacked() {
  Cell c{"STACK", 8, 10, {}, {}};
  c.patterns.push_back(signal("P", {{1, 1, 2, 4}}));
  c.patterns.push_back(signal("Q", {{1, 5, 2, 9}}));
  return c;
}

// s_dp = 2. Triangle: three mutually close patterns.
inline Cell triangle() {
  Cell c{"TRI", 8, 8, {}, {}};
  c.patterns.push_back(signal("a", {{1, 1, 2, 3}}));
  c.patterns.push_back(signal("b", {{1, 4, 2, 6}}));
  c.patterns.push_back(signal("c", {{3, 1, 4, 6}}));
  return c;
}

// Flip fixture, s_dp = 3, w_spacer = 1. In R0/R0 the left cell's X1 faces a
// free pattern Z two units away: one of them must be trim and nothing
// protects it. Mirroring the right cell brings Y next to X1, and a mandrel Y
// covers X1's whole edge.
inline Cell flipLeft() {
  Cell c{"FLIP_L", 6, 20, {}, {}};
  addRails(c);
  c.patterns.push_back(signal("X2", {{1, 4, 2, 14}}));
  c.patterns.push_back(signal("X1", {{4, 4, 5, 14}}));
  return c;
}

inline Cell flipRight() {
  Cell c{"FLIP_R", 6, 20, {}, {}};
  addRails(c);
  c.patterns.push_back(signal("Z", {{1, 6, 2, 12}}));
  c.patterns.push_back(signal("Y", {{5, 4, 6, 14}}));
  return c;
}

inline sadp::ColoringCandidate colors(std::initializer_list<char> spec) {
  sadp::ColoringCandidate c;
  for (char ch : spec) c.colors.push_back(ch == 'M' ? sadp::Color::Mandrel : sadp::Color::Trim);
  return c;
}

// Random cell of up to `max_patterns` axis-aligned rects (one rect per
// pattern, optionally an attached second rect) on a small grid. May overlap
// and may be non-decomposable.
inline Cell randomBlobCell(sadp::Rng& rng, int max_patterns, const std::string& name) {
  Cell c;
  c.name = name;
  c.width = rng.uniform(6, 14);
  c.height = rng.uniform(6, 14);
  const int n = static_cast<int>(rng.uniform(1, max_patterns));
  for (int i = 0; i < n; ++i) {
    const Coord x0 = rng.uniform(0, c.width - 1);
    const Coord y0 = rng.uniform(0, c.height - 1);
    const Coord x1 = rng.uniform(x0 + 1, std::min(c.width, x0 + 4));
    const Coord y1 = rng.uniform(y0 + 1, std::min(c.height, y0 + 5));
    Pattern p = signal("p" + std::to_string(i), {{x0, y0, x1, y1}});
    if (rng.chance(25) && x1 < c.width) p.rects.push_back({x1, y0, std::min(c.width, x1 + 2), y0 + 1});
    c.patterns.push_back(std::move(p));
  }
  return c;
}

// Random decomposable standard cell with rails, s_dp = 3, at most
// `max_patterns` patterns in total.
inline Cell randomRailCell(sadp::Rng& rng, int max_patterns, const std::string& name) {
  sadp::CellShape shape;
  shape.max_signal_patterns = max_patterns - 2;
  for (;;) {
    Cell c = sadp::randomCell(rng, shape, name);
    try {
      sadp::enumerateColorings(sadp::buildConflictGraph(c, 3.0));
      return c;
    } catch (const sadp::Error&) {
    }
  }
}

}  // namespace fixture
