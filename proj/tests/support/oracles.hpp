// Brute-force reference implementations used to cross-check the library.
// Deliberately naive: lattice sampling, exhaustive assignment, raster sweeps.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "sadp/cell_profile.hpp"
#include "sadp/coloring.hpp"
#include "sadp/geometry.hpp"

namespace oracle {

using sadp::Cell;
using sadp::Color;
using sadp::Coord;
using sadp::Rect;

inline bool inside(const Rect& r, double x, double y) {
  return r.x_lo <= x && x <= r.x_hi && r.y_lo <= y && y <= r.y_hi;
}

// Closest points of integer rects have integer coordinates, so walking the
// lattice points of both perimeters is exact.
inline double rectDistance(const Rect& a, const Rect& b) {
  auto perimeter = [](const Rect& r) {
    std::vector<std::pair<Coord, Coord>> pts;
    for (Coord x = r.x_lo; x <= r.x_hi; ++x) {
      pts.emplace_back(x, r.y_lo);
      pts.emplace_back(x, r.y_hi);
    }
    for (Coord y = r.y_lo; y <= r.y_hi; ++y) {
      pts.emplace_back(r.x_lo, y);
      pts.emplace_back(r.x_hi, y);
    }
    return pts;
  };
  const auto pa = perimeter(a);
  const auto pb = perimeter(b);
  for (const auto& [x, y] : pa)
    if (inside(b, static_cast<double>(x), static_cast<double>(y))) return 0;
  for (const auto& [x, y] : pb)
    if (inside(a, static_cast<double>(x), static_cast<double>(y))) return 0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [x1, y1] : pa)
    for (const auto& [x2, y2] : pb)
      best = std::min(best, std::hypot(static_cast<double>(x1 - x2), static_cast<double>(y1 - y2)));
  return best;
}

inline double patternDistance(const std::vector<Rect>& p, const std::vector<Rect>& q) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : p)
    for (const auto& b : q) best = std::min(best, rectDistance(a, b));
  return best;
}

inline std::vector<std::pair<int, int>> conflictEdges(const Cell& c, double s_dp) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(c.patterns.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (patternDistance(c.patterns[i].rects, c.patterns[j].rects) < s_dp) edges.emplace_back(i, j);
  return edges;
}

inline int componentCount(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto [a, b] : edges) parent[static_cast<std::size_t>(find(a))] = find(b);
  int count = 0;
  for (int i = 0; i < n; ++i) count += find(i) == i;
  return count;
}

// Every valid assignment, as bitmasks (bit i set = pattern i is Trim).
inline std::set<std::uint32_t> bruteColorings(int n, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    bool ok = true;
    for (auto [a, b] : edges)
      if (((m >> a) & 1u) == ((m >> b) & 1u)) {
        ok = false;
        break;
      }
    if (ok) out.insert(m);
  }
  return out;
}

inline std::uint32_t mask(const sadp::ColoringCandidate& c) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < c.colors.size(); ++i)
    if (c.colors[i] == Color::Trim) m |= 1u << i;
  return m;
}

inline Cell mirror(const Cell& c) {
  Cell m = c;
  for (auto& p : m.patterns)
    for (auto& r : p.rects) r = {c.width - r.x_hi, r.y_lo, c.width - r.x_lo, r.y_hi};
  for (auto& pin : m.pins) pin.x = c.width - pin.x;
  return m;
}

inline Cell oriented(const Cell& c, sadp::Orientation o) { return o == sadp::Orientation::R0 ? c : mirror(c); }

struct FlatPattern {
  std::vector<Rect> rects;
  sadp::Net net;
  int side;   // 0 left cell, 1 right cell
  int index;  // pattern index within its cell
};

inline std::vector<FlatPattern> flattenPair(const Cell& left, const Cell& right, Coord gap) {
  std::vector<FlatPattern> out;
  for (std::size_t i = 0; i < left.patterns.size(); ++i)
    out.push_back({left.patterns[i].rects, left.patterns[i].net, 0, static_cast<int>(i)});
  for (std::size_t j = 0; j < right.patterns.size(); ++j) {
    FlatPattern f{{}, right.patterns[j].net, 1, static_cast<int>(j)};
    for (const auto& r : right.patterns[j].rects) f.rects.push_back(r.translated(left.width + gap, 0));
    out.push_back(std::move(f));
  }
  return out;
}

// Cross-boundary pairs closer than s_dp, excluding the merged same-net rails.
inline std::vector<std::pair<int, int>> crossPairs(const Cell& left, const Cell& right, Coord gap, double s_dp) {
  const auto flat = flattenPair(left, right, gap);
  std::vector<std::pair<int, int>> out;
  for (const auto& a : flat) {
    if (a.side != 0) continue;
    for (const auto& b : flat) {
      if (b.side != 1) continue;
      if (a.net != sadp::Net::Signal && a.net == b.net) continue;
      if (patternDistance(a.rects, b.rects) < s_dp) out.emplace_back(a.index, b.index);
    }
  }
  return out;
}

// Whether one concrete coloring of each cell survives the merged check:
// cross pairs bichromatic and same-net rails equal.
inline bool pairValid(const Cell& left, const sadp::ColoringCandidate& cl, const Cell& right,
                      const sadp::ColoringCandidate& cr, Coord gap, double s_dp) {
  for (auto [i, j] : crossPairs(left, right, gap, s_dp))
    if (cl[static_cast<std::size_t>(i)] == cr[static_cast<std::size_t>(j)]) return false;
  for (sadp::Net rail : {sadp::Net::Power, sadp::Net::Ground}) {
    int li = -1, ri = -1;
    for (std::size_t i = 0; i < left.patterns.size(); ++i)
      if (left.patterns[i].net == rail) li = static_cast<int>(i);
    for (std::size_t j = 0; j < right.patterns.size(); ++j)
      if (right.patterns[j].net == rail) ri = static_cast<int>(j);
    if (li >= 0 && ri >= 0 && cl[static_cast<std::size_t>(li)] != cr[static_cast<std::size_t>(ri)]) return false;
  }
  return true;
}

// Raster overlay: every unit slab of a trim edge that faces the boundary from
// closer than s_dp counts unless the same pattern continues past it or a
// mandrel starts within w_spacer beyond it.
inline double overlay(const Cell& left, const sadp::ColoringCandidate& cl, const Cell& right,
                      const sadp::ColoringCandidate& cr, double s_dp, double w_spacer) {
  const auto flat = flattenPair(left, right, 0);
  const Coord boundary = left.width;
  auto colorOf = [&](const FlatPattern& f) {
    return f.side == 0 ? cl[static_cast<std::size_t>(f.index)] : cr[static_cast<std::size_t>(f.index)];
  };
  double total = 0;
  for (const auto& f : flat) {
    if (f.net != sadp::Net::Signal || colorOf(f) != Color::Trim) continue;
    const int dir = f.side == 0 ? 1 : -1;  // outward direction, towards the boundary
    for (const auto& r : f.rects) {
      const Coord x = f.side == 0 ? r.x_hi : r.x_lo;
      if (static_cast<double>(std::abs(boundary - x)) >= s_dp) continue;
      for (Coord y = r.y_lo; y < r.y_hi; ++y) {
        const double py = static_cast<double>(y) + 0.5;
        const double px = static_cast<double>(x) + 0.5 * dir;
        bool covered = false;
        for (const auto& q : f.rects)
          if (q.x_lo < px && px < q.x_hi && q.y_lo < py && py < q.y_hi) covered = true;
        for (const auto& m : flat) {
          if (covered) break;
          if (colorOf(m) != Color::Mandrel) continue;
          for (const auto& mr : m.rects) {
            if (!(mr.y_lo < py && py < mr.y_hi)) continue;
            const Coord near = dir > 0 ? mr.x_lo : mr.x_hi;
            const double d = static_cast<double>((near - x) * dir);
            if (d >= 0 && d <= w_spacer) covered = true;
          }
        }
        if (!covered) total += 1;
      }
    }
  }
  return total;
}

}  // namespace oracle
