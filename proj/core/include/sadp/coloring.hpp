#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sadp/geometry.hpp"

namespace sadp {

/// Mask assignment. Mandrel patterns come from the first exposure; trim
/// patterns are formed by spacer plus the trim exposure.
enum class Color : std::uint8_t { Mandrel, Trim };

inline Color other(Color c) { return c == Color::Mandrel ? Color::Trim : Color::Mandrel; }
const char* toString(Color c);

/// Guardrail on the enumeration size (2^components candidates per cell).
inline constexpr int kMaxComponents = 20;

/// Conflict graph over the patterns of one cell. Node i is pattern i.
struct ConflictGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // (u, v) with u < v, sorted
  std::vector<std::vector<int>> adjacency;
  std::vector<std::vector<int>> components;  // each sorted; ordered by smallest node
  std::vector<int> component_of;

  static ConflictGraph fromEdges(int node_count, std::vector<std::pair<int, int>> edges);
  bool hasEdge(int u, int v) const;
};

struct ColoringCandidate {
  std::vector<Color> colors;  // indexed by pattern

  Color operator[](std::size_t i) const { return colors[i]; }
  friend bool operator==(const ColoringCandidate&, const ColoringCandidate&) = default;
};

/// Edge (p, q) iff patternClearance(p, q) < s_dp.
ConflictGraph buildConflictGraph(const Cell& c, double s_dp);

/// All valid two-colorings, 2^components of them, in canonical order:
/// components ordered by smallest pattern index, the first component most
/// significant, and within a component the assignment giving its smallest
/// pattern Mandrel before its swap. Throws NotDecomposable on an odd cycle and
/// TooManyComponents above kMaxComponents.
std::vector<ColoringCandidate> enumerateColorings(const ConflictGraph& g);

/// True iff every edge joins differently colored patterns. Throws
/// UnknownPattern if the assignment covers patterns outside the graph.
bool validateColoring(const ConflictGraph& g, const ColoringCandidate& c);

}  // namespace sadp
