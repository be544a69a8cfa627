#include "sadp/cell_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "sadp/error.hpp"

namespace sadp {

const char* toString(PgType t) {
  switch (t) {
    case PgType::SamePG: return "same-pg";
    case PgType::DiffPG: return "diff-pg";
    case PgType::FreePG: return "free-pg";
  }
  return "free-pg";
}

const char* toString(AbutType t) {
  switch (t) {
    case AbutType::SafeAbut: return "safe";
    case AbutType::FreeAbut: return "free";
    case AbutType::UnknownAbut: return "unknown";
  }
  return "unknown";
}

AbutType CellProfile::abut(Side side, Orientation o) const {
  const Side original = o == Orientation::R0 ? side : opposite(side);
  return original == Side::Left ? abut_left : abut_right;
}

double CellProfile::boundary(Side side, Orientation o) const {
  const Side original = o == Orientation::R0 ? side : opposite(side);
  return original == Side::Left ? s_b_left : s_b_right;
}

bool linked(std::span<const ColoringCandidate> colorings, int a, int b) {
  if (colorings.empty()) return false;
  const bool same = colorings.front()[a] == colorings.front()[b];
  return std::all_of(colorings.begin(), colorings.end(),
                     [&](const ColoringCandidate& c) { return (c[a] == c[b]) == same; });
}

PgType classifyPG(const Cell& c, std::span<const ColoringCandidate> colorings) {
  const int p = c.powerIndex();
  const int g = c.groundIndex();
  if (p < 0 || g < 0 || colorings.empty()) return PgType::FreePG;
  bool any_same = false;
  bool any_diff = false;
  for (const auto& cand : colorings) (cand[p] == cand[g] ? any_same : any_diff) = true;
  if (any_same && any_diff) return PgType::FreePG;
  return any_same ? PgType::SamePG : PgType::DiffPG;
}

AbutType classifyAbut(const Cell& c, std::span<const ColoringCandidate> colorings, Side side, double s_dp,
                      double s_b_min) {
  if (boundaryClearance(c, side) > s_dp - s_b_min) return AbutType::SafeAbut;

  std::vector<int> near;
  for (std::size_t i = 0; i < c.patterns.size(); ++i)
    if (!c.patterns[i].isRail() && patternBoundaryDistance(c, c.patterns[i], side) < s_dp)
      near.push_back(static_cast<int>(i));

  const int p = c.powerIndex();
  const int g = c.groundIndex();
  for (std::size_t i = 0; i < near.size(); ++i) {
    if ((p >= 0 && linked(colorings, near[i], p)) || (g >= 0 && linked(colorings, near[i], g)))
      return AbutType::UnknownAbut;
    for (std::size_t j = i + 1; j < near.size(); ++j)
      if (linked(colorings, near[i], near[j])) return AbutType::UnknownAbut;
  }
  return AbutType::FreeAbut;
}

bool pgCompatible(PgType a, PgType b) {
  if (a == PgType::FreePG || b == PgType::FreePG) return true;
  return a == b;
}

bool sharedRails(const CellProfile& a, const CellProfile& b) {
  return a.power_band && a.ground_band && a.power_band == b.power_band && a.ground_band == b.ground_band;
}

AbutCompat abutFastPath(AbutType left, AbutType right) {
  if (left == AbutType::SafeAbut || right == AbutType::SafeAbut) return AbutCompat::Compatible;
  if (left == AbutType::FreeAbut && right == AbutType::FreeAbut) return AbutCompat::Compatible;
  return AbutCompat::NeedsFullCheck;
}

CellProfile profileCell(const Cell& c, double s_dp, double s_b_min) {
  validateCell(c);
  CellProfile prof;
  prof.cell = c;
  prof.oriented = {c, mirrorCell(c)};
  prof.graph = buildConflictGraph(c, s_dp);
  prof.colorings = enumerateColorings(prof.graph);
  prof.pg = classifyPG(c, prof.colorings);
  prof.s_b_left = boundaryClearance(c, Side::Left);
  prof.s_b_right = boundaryClearance(c, Side::Right);
  prof.abut_left = classifyAbut(c, prof.colorings, Side::Left, s_dp, s_b_min);
  prof.abut_right = classifyAbut(c, prof.colorings, Side::Right, s_dp, s_b_min);
  prof.power = c.powerIndex();
  prof.ground = c.groundIndex();
  auto band = [&](int idx) -> std::optional<std::pair<Coord, Coord>> {
    if (idx < 0) return std::nullopt;
    const auto& rects = c.patterns[static_cast<std::size_t>(idx)].rects;
    if (rects.size() != 1 || rects[0].x_lo != 0 || rects[0].x_hi != c.width) return std::nullopt;
    return std::pair{rects[0].y_lo, rects[0].y_hi};
  };
  prof.power_band = band(prof.power);
  prof.ground_band = band(prof.ground);
  return prof;
}

double librarySbMin(std::span<const Cell> cells, double s_dp) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : cells) {
    if (c.patterns.empty()) continue;
    best = std::min({best, boundaryClearance(c, Side::Left), boundaryClearance(c, Side::Right)});
  }
  return std::isfinite(best) ? std::min(best, s_dp) : s_dp;
}

std::size_t ProfiledLibrary::indexOf(const std::string& name) const {
  auto it = index.find(name);
  if (it == index.end()) throw UnknownCell("unknown cell '" + name + "'");
  return it->second;
}

ProfiledLibrary profileLibrary(const Library& lib) {
  ProfiledLibrary out;
  out.params = lib.params;
  out.s_b_min = lib.params.s_b_min ? std::min(*lib.params.s_b_min, lib.params.s_dp)
                                   : librarySbMin(lib.cells, lib.params.s_dp);
  out.profiles.reserve(lib.cells.size());
  for (const auto& c : lib.cells) {
    if (out.index.count(c.name)) throw InvalidCell("duplicate cell name '" + c.name + "'");
    try {
      out.profiles.push_back(profileCell(c, lib.params.s_dp, out.s_b_min));
    } catch (const NotDecomposable& e) {
      std::string ids;
      for (int i : e.cycle()) ids += (ids.empty() ? "" : ", ") + c.patterns[i].id;
      throw NotDecomposable("cell '" + c.name + "' is not decomposable: odd cycle {" + ids + "}", e.cycle());
    } catch (const TooManyComponents& e) {
      throw TooManyComponents("cell '" + c.name + "': " + e.what());
    }
    out.index.emplace(c.name, out.profiles.size() - 1);
  }
  return out;
}

}  // namespace sadp
