#include "sadp/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sadp/error.hpp"

namespace sadp {

const char* toString(Color c) { return c == Color::Mandrel ? "mandrel" : "trim"; }

ConflictGraph ConflictGraph::fromEdges(int node_count, std::vector<std::pair<int, int>> edges) {
  ConflictGraph g;
  g.node_count = node_count;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("conflict graph self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);

  g.adjacency.assign(node_count, {});
  for (auto [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());

  g.component_of.assign(node_count, -1);
  for (int s = 0; s < node_count; ++s) {
    if (g.component_of[s] != -1) continue;
    const int id = static_cast<int>(g.components.size());
    std::vector<int> comp{s};
    g.component_of[s] = id;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int n : g.adjacency[comp[head]])
        if (g.component_of[n] == -1) {
          g.component_of[n] = id;
          comp.push_back(n);
        }
    std::sort(comp.begin(), comp.end());
    g.components.push_back(std::move(comp));
  }
  return g;
}

bool ConflictGraph::hasEdge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::pair{u, v});
}

ConflictGraph buildConflictGraph(const Cell& c, double s_dp) {
  if (!(s_dp > 0)) throw std::invalid_argument("s_dp must be positive");
  const int n = static_cast<int>(c.patterns.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (patternClearance(c.patterns[i], c.patterns[j]) < s_dp) edges.emplace_back(i, j);
  return ConflictGraph::fromEdges(n, std::move(edges));
}

namespace {

// BFS two-coloring of one component, rooted at its smallest node (Mandrel).
void colorComponent(const ConflictGraph& g, const std::vector<int>& comp, std::vector<Color>& colors,
                    std::vector<int>& parent, std::vector<int>& depth) {
  const int root = comp.front();
  colors[root] = Color::Mandrel;
  parent[root] = -1;
  depth[root] = 0;
  std::vector<int> queue{root};
  std::vector<bool> seen(g.node_count, false);
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        colors[v] = other(colors[u]);
        parent[v] = u;
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      } else if (colors[v] == colors[u]) {
        // Odd cycle: walk both endpoints up to their common ancestor.
        std::vector<int> up_u{u};
        std::vector<int> up_v{v};
        int a = u;
        int b = v;
        while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
        while (a != b) {
          up_u.push_back(a = parent[a]);
          up_v.push_back(b = parent[b]);
        }
        up_v.pop_back();
        std::vector<int> cycle(up_u.begin(), up_u.end());
        cycle.insert(cycle.end(), up_v.rbegin(), up_v.rend());
        std::string ids;
        for (int x : cycle) ids += (ids.empty() ? "" : " ") + std::to_string(x);
        throw NotDecomposable("odd cycle through patterns {" + ids + "}", std::move(cycle));
      }
    }
  }
}

}  // namespace

std::vector<ColoringCandidate> enumerateColorings(const ConflictGraph& g) {
  std::vector<Color> base(g.node_count, Color::Mandrel);
  std::vector<int> parent(g.node_count, -1);
  std::vector<int> depth(g.node_count, 0);
  for (const auto& comp : g.components) colorComponent(g, comp, base, parent, depth);

  const int k = static_cast<int>(g.components.size());
  if (k > kMaxComponents)
    throw TooManyComponents(std::to_string(k) + " components exceed the limit of " +
                            std::to_string(kMaxComponents));

  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<ColoringCandidate> out;
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    ColoringCandidate cand{base};
    for (int c = 0; c < k; ++c) {
      if (!((t >> (k - 1 - c)) & 1U)) continue;
      for (int node : g.components[c]) cand.colors[node] = other(cand.colors[node]);
    }
    out.push_back(std::move(cand));
  }
  return out;
}

bool validateColoring(const ConflictGraph& g, const ColoringCandidate& c) {
  if (c.colors.size() > static_cast<std::size_t>(g.node_count))
    throw UnknownPattern("assignment references pattern " + std::to_string(g.node_count) +
                         " outside a graph of " + std::to_string(g.node_count) + " nodes");
  if (c.colors.size() < static_cast<std::size_t>(g.node_count))
    throw std::invalid_argument("assignment does not cover every pattern");
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](const auto& e) { return c.colors[e.first] != c.colors[e.second]; });
}

}  // namespace sadp
