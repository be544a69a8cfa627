#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sadp {

/// Layout coordinate. One unit equals the minimum feature width.
using Coord = std::int64_t;

struct Rect {
  Coord x_lo = 0;
  Coord y_lo = 0;
  Coord x_hi = 0;
  Coord y_hi = 0;

  bool valid() const { return x_lo < x_hi && y_lo < y_hi; }
  Coord width() const { return x_hi - x_lo; }
  Coord height() const { return y_hi - y_lo; }
  Rect translated(Coord dx, Coord dy) const { return {x_lo + dx, y_lo + dy, x_hi + dx, y_hi + dy}; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Net { Power, Ground, Signal };

struct Pattern {
  std::string id;
  std::vector<Rect> rects;  // union; one connected polygon
  Net net = Net::Signal;

  bool isRail() const { return net != Net::Signal; }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Pin {
  std::string name;
  Coord x = 0;
  Coord y = 0;
  friend bool operator==(const Pin&, const Pin&) = default;
};

struct Cell {
  std::string name;
  Coord width = 0;
  Coord height = 0;
  std::vector<Pattern> patterns;
  std::vector<Pin> pins;

  /// Index of the power (ground) pattern, or -1 if the cell has none.
  int powerIndex() const;
  int groundIndex() const;
  const Pin* findPin(std::string_view pin) const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class Side { Left, Right };
enum class Orientation { R0, MY };

inline Orientation flip(Orientation o) { return o == Orientation::R0 ? Orientation::MY : Orientation::R0; }
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* toString(Orientation o);
const char* toString(Net n);

/// Euclidean clearance between two rects; 0 when they touch or overlap.
double clearance(const Rect& a, const Rect& b);

/// Minimum clearance over all rect pairs of the two patterns.
double patternClearance(const Pattern& p, const Pattern& q);
double patternClearance(std::span<const Rect> p, std::span<const Rect> q);

/// Minimum horizontal distance from any signal pattern to the given vertical
/// cell edge. Power and ground patterns are row-global rails and do not form a
/// boundary, so a cell with rails only reports +infinity. Throws EmptyCell if
/// the cell has no patterns at all.
double boundaryClearance(const Cell& c, Side side);

/// Horizontal distance from one pattern to the given cell edge.
double patternBoundaryDistance(const Cell& c, const Pattern& p, Side side);

/// Reflects rects and pins about x = width / 2. Involutive.
Cell mirrorCell(const Cell& c);
Cell orient(const Cell& c, Orientation o);

/// Checks the structural invariants of a cell (positive-area rects inside the
/// outline, connected patterns, unique ids and pin names, at most one power and
/// one ground pattern). Throws InvalidCell.
void validateCell(const Cell& c);

/// True if the two rects overlap or share an edge segment of positive length.
bool rectsConnected(const Rect& a, const Rect& b);

}  // namespace sadp
