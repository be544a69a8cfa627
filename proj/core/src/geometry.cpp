#include "sadp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "sadp/error.hpp"

namespace sadp {

int Cell::powerIndex() const {
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (patterns[i].net == Net::Power) return static_cast<int>(i);
  return -1;
}

int Cell::groundIndex() const {
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (patterns[i].net == Net::Ground) return static_cast<int>(i);
  return -1;
}

const Pin* Cell::findPin(std::string_view pin) const {
  for (const auto& p : pins)
    if (p.name == pin) return &p;
  return nullptr;
}

const char* toString(Orientation o) { return o == Orientation::R0 ? "R0" : "MY"; }

const char* toString(Net n) {
  switch (n) {
    case Net::Power: return "power";
    case Net::Ground: return "ground";
    case Net::Signal: return "signal";
  }
  return "signal";
}

double clearance(const Rect& a, const Rect& b) {
  const Coord dx = std::max<Coord>({0, b.x_lo - a.x_hi, a.x_lo - b.x_hi});
  const Coord dy = std::max<Coord>({0, b.y_lo - a.y_hi, a.y_lo - b.y_hi});
  if (dy == 0) return static_cast<double>(dx);
  if (dx == 0) return static_cast<double>(dy);
  return std::hypot(static_cast<double>(dx), static_cast<double>(dy));
}

double patternClearance(std::span<const Rect> p, std::span<const Rect> q) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : p)
    for (const auto& b : q) best = std::min(best, clearance(a, b));
  return best;
}

double patternClearance(const Pattern& p, const Pattern& q) { return patternClearance(p.rects, q.rects); }

double patternBoundaryDistance(const Cell& c, const Pattern& p, Side side) {
  Coord best = std::numeric_limits<Coord>::max();
  for (const auto& r : p.rects) best = std::min(best, side == Side::Left ? r.x_lo : c.width - r.x_hi);
  return static_cast<double>(best);
}

double boundaryClearance(const Cell& c, Side side) {
  if (c.patterns.empty()) throw EmptyCell("cell '" + c.name + "' has no patterns");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : c.patterns) {
    if (p.isRail()) continue;
    best = std::min(best, patternBoundaryDistance(c, p, side));
  }
  return best;
}

Cell mirrorCell(const Cell& c) {
  Cell m = c;
  for (auto& p : m.patterns)
    for (auto& r : p.rects) r = {c.width - r.x_hi, r.y_lo, c.width - r.x_lo, r.y_hi};
  for (auto& pin : m.pins) pin.x = c.width - pin.x;
  return m;
}

Cell orient(const Cell& c, Orientation o) { return o == Orientation::R0 ? c : mirrorCell(c); }

bool rectsConnected(const Rect& a, const Rect& b) {
  const Coord ox = std::min(a.x_hi, b.x_hi) - std::max(a.x_lo, b.x_lo);
  const Coord oy = std::min(a.y_hi, b.y_hi) - std::max(a.y_lo, b.y_lo);
  return ox >= 0 && oy >= 0 && (ox > 0 || oy > 0);
}

namespace {

bool unionConnected(const std::vector<Rect>& rects) {
  std::vector<std::size_t> parent(rects.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < rects.size(); ++i)
    for (std::size_t j = i + 1; j < rects.size(); ++j)
      if (rectsConnected(rects[i], rects[j])) parent[find(i)] = find(j);
  for (std::size_t i = 1; i < rects.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace

void validateCell(const Cell& c) {
  auto fail = [&](const std::string& msg) { throw InvalidCell("cell '" + c.name + "': " + msg); };
  if (c.width <= 0 || c.height <= 0) fail("non-positive outline");
  std::set<std::string> ids;
  int power = 0;
  int ground = 0;
  for (const auto& p : c.patterns) {
    if (!ids.insert(p.id).second) fail("duplicate pattern id '" + p.id + "'");
    if (p.rects.empty()) fail("pattern '" + p.id + "' has no rects");
    for (const auto& r : p.rects) {
      if (!r.valid()) fail("pattern '" + p.id + "' has a rect with non-positive area");
      if (r.x_lo < 0 || r.y_lo < 0 || r.x_hi > c.width || r.y_hi > c.height)
        fail("pattern '" + p.id + "' leaves the cell outline");
    }
    if (!unionConnected(p.rects)) fail("pattern '" + p.id + "' is not connected");
    power += p.net == Net::Power;
    ground += p.net == Net::Ground;
  }
  if (power > 1 || ground > 1) fail("more than one power or ground pattern");
  std::set<std::string> pins;
  for (const auto& pin : c.pins)
    if (!pins.insert(pin.name).second) fail("duplicate pin '" + pin.name + "'");
}

}  // namespace sadp
