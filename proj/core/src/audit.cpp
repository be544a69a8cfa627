#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "sadp/error.hpp"
#include "sadp/legalizer.hpp"

namespace sadp {

std::string Violation::describe() const {
  std::string s = "row " + std::to_string(row) + ": ";
  s += instance_a == instance_b ? "inside '" + instance_a + "'" : "'" + instance_a + "' / '" + instance_b + "'";
  if (rail_mismatch) s += " rail color mismatch";
  for (const auto& [a, b] : patterns) s += " [" + a + " ~ " + b + "]";
  return s;
}

namespace {

struct Flat {
  std::string instance;
  Cell cell;  // oriented and translated into the row frame
  ColoringCandidate colors;
  Coord x_lo;
  Coord x_hi;
};

}  // namespace

std::vector<Violation> auditPlacement(const Placement& p, const ProfiledLibrary& lib, double s_dp) {
  std::vector<Violation> out;
  for (const auto& row : p.rows) {
    std::vector<Flat> flat;
    for (const auto& pc : row.cells) {
      auto it = lib.index.find(pc.cell);
      if (it == lib.index.end()) throw InconsistentLibrary("placement references unknown cell '" + pc.cell + "'");
      const CellProfile& prof = lib.profiles[it->second];
      if (pc.coloring < 0 || static_cast<std::size_t>(pc.coloring) >= prof.colorings.size())
        throw InconsistentLibrary("instance '" + pc.instance + "' has no coloring " + std::to_string(pc.coloring));
      Cell c = orient(prof.cell, pc.orient);
      for (auto& pat : c.patterns)
        for (auto& r : pat.rects) r = r.translated(pc.x, row.y);
      flat.push_back({pc.instance, std::move(c), prof.colorings[pc.coloring], pc.x, pc.x + prof.cell.width});
    }
    std::vector<std::size_t> order(flat.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return flat[a].x_lo < flat[b].x_lo; });

    std::map<std::pair<std::size_t, std::size_t>, Violation> found;
    auto record = [&](std::size_t a, std::size_t b) -> Violation& {
      auto key = std::minmax(a, b);
      auto [it, fresh] = found.try_emplace({key.first, key.second});
      if (fresh) {
        it->second.row = row.index;
        it->second.instance_a = flat[key.first].instance;
        it->second.instance_b = flat[key.second].instance;
      }
      return it->second;
    };

    // Intra-cell: same-colored patterns inside one instance.
    for (std::size_t a = 0; a < flat.size(); ++a) {
      const auto& pats = flat[a].cell.patterns;
      for (std::size_t i = 0; i < pats.size(); ++i)
        for (std::size_t j = i + 1; j < pats.size(); ++j)
          if (flat[a].colors[i] == flat[a].colors[j] && patternClearance(pats[i], pats[j]) < s_dp)
            record(a, a).patterns.emplace_back(pats[i].id, pats[j].id);
    }

    // Cross-instance spacing, windowed by outline distance.
    for (std::size_t oa = 0; oa < order.size(); ++oa) {
      const Flat& fa = flat[order[oa]];
      for (std::size_t ob = oa + 1; ob < order.size(); ++ob) {
        const Flat& fb = flat[order[ob]];
        if (static_cast<double>(fb.x_lo - fa.x_hi) >= s_dp) break;
        for (std::size_t i = 0; i < fa.cell.patterns.size(); ++i) {
          const auto& pi = fa.cell.patterns[i];
          for (std::size_t j = 0; j < fb.cell.patterns.size(); ++j) {
            const auto& pj = fb.cell.patterns[j];
            if (pi.isRail() && pi.net == pj.net) continue;  // one merged row rail
            if (fa.colors[i] == fb.colors[j] && patternClearance(pi, pj) < s_dp)
              record(order[oa], order[ob]).patterns.emplace_back(pi.id, pj.id);
          }
        }
      }
    }

    // Merged rails must carry a single color along the row.
    for (Net rail : {Net::Power, Net::Ground}) {
      std::optional<std::size_t> prev;
      for (std::size_t idx : order) {
        const auto& pats = flat[idx].cell.patterns;
        auto it = std::find_if(pats.begin(), pats.end(), [&](const Pattern& q) { return q.net == rail; });
        if (it == pats.end()) continue;
        const Color col = flat[idx].colors[static_cast<std::size_t>(it - pats.begin())];
        if (prev) {
          const auto& pp = flat[*prev].cell.patterns;
          auto jt = std::find_if(pp.begin(), pp.end(), [&](const Pattern& q) { return q.net == rail; });
          if (flat[*prev].colors[static_cast<std::size_t>(jt - pp.begin())] != col)
            record(*prev, idx).rail_mismatch = true;
        }
        prev = idx;
      }
    }

    // Report in placement order of the left instance.
    std::vector<std::size_t> rank(flat.size());
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Violation>> keyed;
    for (auto& [key, v] : found)
      keyed.push_back({std::minmax(rank[key.first], rank[key.second]), std::move(v)});
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
  }
  return out;
}

}  // namespace sadp
