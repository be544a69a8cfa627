#include "sadp/legalizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "sadp/error.hpp"

namespace sadp {

const char* toString(LegalizeMode m) { return m == LegalizeMode::UB ? "ub" : "b"; }

double LegalizeReport::areaDeltaPct() const {
  return area_before > 0 ? (area_after - area_before) / area_before * 100.0 : 0.0;
}

double LegalizeReport::hpwlDeltaPct() const {
  return hpwl_before > 0 ? (hpwl_after - hpwl_before) / hpwl_before * 100.0 : 0.0;
}

double LegalizeReport::resolvedFraction() const {
  if (conflicts_before == 0) return 0.0;
  return static_cast<double>(conflicts_before - std::min(conflicts_after, conflicts_before)) /
         static_cast<double>(conflicts_before);
}

namespace {

const CellProfile& profileOf(const ProfiledLibrary& lib, const std::string& cell) {
  auto it = lib.index.find(cell);
  if (it == lib.index.end()) throw InconsistentLibrary("placement references unknown cell '" + cell + "'");
  return lib.profiles[it->second];
}

}  // namespace

double hpwl(const Placement& p, const ProfiledLibrary& lib) {
  struct Where {
    const PlacedCell* cell;
    Coord y;
  };
  std::unordered_map<std::string, Where> where;
  for (const auto& row : p.rows)
    for (const auto& c : row.cells) where.emplace(c.instance, Where{&c, row.y});

  double total = 0;
  for (const auto& net : p.netlist.nets) {
    if (net.pins.size() < 2) continue;
    Coord x_lo = std::numeric_limits<Coord>::max();
    Coord x_hi = std::numeric_limits<Coord>::min();
    Coord y_lo = x_lo;
    Coord y_hi = x_hi;
    for (const auto& ref : net.pins) {
      auto it = where.find(ref.instance);
      if (it == where.end())
        throw InconsistentLibrary("net '" + net.name + "' references unknown instance '" + ref.instance + "'");
      const PlacedCell& pc = *it->second.cell;
      const Cell& cell = profileOf(lib, pc.cell).cell;
      const Pin* pin = cell.findPin(ref.pin);
      if (!pin) throw InconsistentLibrary("cell '" + cell.name + "' has no pin '" + ref.pin + "'");
      const Coord px = pc.x + (pc.orient == Orientation::MY ? cell.width - pin->x : pin->x);
      const Coord py = it->second.y + pin->y;
      x_lo = std::min(x_lo, px);
      x_hi = std::max(x_hi, px);
      y_lo = std::min(y_lo, py);
      y_hi = std::max(y_hi, py);
    }
    total += static_cast<double>((x_hi - x_lo) + (y_hi - y_lo));
  }
  return total;
}

double placementArea(const Placement& p, const ProfiledLibrary& lib) {
  Coord lo = std::numeric_limits<Coord>::max();
  Coord hi = std::numeric_limits<Coord>::min();
  for (const auto& row : p.rows)
    for (const auto& c : row.cells) {
      lo = std::min(lo, c.x);
      hi = std::max(hi, c.x + profileOf(lib, c.cell).cell.width);
    }
  if (lo > hi) return 0;
  return static_cast<double>(hi - lo) * static_cast<double>(p.row_height) * static_cast<double>(p.rows.size());
}

void validatePlacement(const Placement& p, const ProfiledLibrary& lib) {
  std::set<std::string> names;
  for (const auto& row : p.rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      const auto& c = row.cells[i];
      const CellProfile& prof = profileOf(lib, c.cell);
      if (!names.insert(c.instance).second)
        throw InconsistentLibrary("duplicate instance name '" + c.instance + "'");
      if (prof.cell.height != p.row_height)
        throw InconsistentLibrary("cell '" + c.cell + "' height " + std::to_string(prof.cell.height) +
                                  " differs from the row height " + std::to_string(p.row_height));
      if (c.coloring < 0 || static_cast<std::size_t>(c.coloring) >= prof.colorings.size())
        throw InconsistentLibrary("instance '" + c.instance + "' uses coloring " + std::to_string(c.coloring) +
                                  " but cell '" + c.cell + "' has " + std::to_string(prof.colorings.size()));
      if (c.x < 0) throw OverlapError("instance '" + c.instance + "' has a negative x");
      if (i > 0) {
        const auto& prev = row.cells[i - 1];
        if (prev.x + profileOf(lib, prev.cell).cell.width > c.x)
          throw OverlapError("row " + std::to_string(row.index) + ": instances '" + prev.instance + "' and '" +
                             c.instance + "' overlap or are out of order");
      }
    }
  }
}

Legalizer::Legalizer(const ProfiledLibrary& lib, const Dplut& table) : lib_(lib), table_(table) {
  table_index_.assign(lib.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < lib.size(); ++i)
    if (table.contains(lib.profiles[i].cell.name)) table_index_[i] = table.indexOf(lib.profiles[i].cell.name);
}

Legalizer::Resolved Legalizer::resolve(const PlacedCell& c) const {
  auto it = lib_.index.find(c.cell);
  if (it == lib_.index.end() || table_index_[it->second] == std::numeric_limits<std::size_t>::max())
    throw InconsistentLibrary("cell '" + c.cell + "' is missing from the library or the DPLUT");
  return {&lib_.profiles[it->second], table_index_[it->second]};
}

Coord Legalizer::safeGap(const PlacedCell& left, const PlacedCell& right) const {
  const auto l = resolve(left);
  const auto r = resolve(right);
  const double need = sharedRails(*l.profile, *r.profile)
                          ? sDp() - l.profile->boundary(Side::Right, left.orient) -
                                r.profile->boundary(Side::Left, right.orient)
                          : sDp();
  if (!(need > 0)) return 0;
  return static_cast<Coord>(std::ceil(need));
}

bool Legalizer::validAtGap(const PlacedCell& left, const PlacedCell& right, Coord gap) const {
  if (gap < 0) return false;
  const auto l = resolve(left);
  const auto r = resolve(right);
  const auto& cl = l.profile->colorings[left.coloring];
  const auto& cr = r.profile->colorings[right.coloring];
  if (!railsAgree(*l.profile, cl, *r.profile, cr)) return false;

  if (gap >= safeGap(left, right)) return true;

  for (const auto& cand : table_.entry(l.table_index, r.table_index))
    if (cand.orient_left == left.orient && cand.orient_right == right.orient &&
        cand.coloring_left == left.coloring && cand.coloring_right == right.coloring)
      return true;

  const auto edges = crossEdges(l.profile->as(left.orient), r.profile->as(right.orient), gap, sDp());
  return pairColoringValid(*l.profile, cl, *r.profile, cr, edges);
}

bool Legalizer::isConflict(const PlacedCell& left, const PlacedCell& right) const {
  const Coord gap = right.x - (left.x + resolve(left).profile->cell.width);
  return !validAtGap(left, right, gap);
}

Coord Legalizer::minValidGap(const PlacedCell& left, const PlacedCell& right, Coord upto) const {
  // Validity is monotone in the gap: moving the right cell away only removes
  // cross edges.
  Coord lo = 0;
  Coord hi = upto;
  while (lo < hi) {
    const Coord mid = lo + (hi - lo) / 2;
    if (validAtGap(left, right, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::size_t Legalizer::countConflicts(const Row& row) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < row.cells.size(); ++i) n += isConflict(row.cells[i], row.cells[i + 1]);
  return n;
}

std::size_t Legalizer::countConflicts(const Placement& p) const {
  std::size_t n = 0;
  for (const auto& row : p.rows) n += countConflicts(row);
  return n;
}

bool Legalizer::pgFeasible(const Row& row) const {
  bool same = false;
  bool diff = false;
  for (const auto& c : row.cells) {
    const PgType t = resolve(c).profile->pg;
    same |= t == PgType::SamePG;
    diff |= t == PgType::DiffPG;
  }
  return !(same && diff);
}

std::size_t Legalizer::alignRails(Row& row) const {
  if (!pgFeasible(row)) return 0;
  PgType kind = PgType::FreePG;
  for (const auto& c : row.cells)
    if (const PgType t = resolve(c).profile->pg; t != PgType::FreePG) kind = t;

  std::optional<Color> power;
  std::optional<Color> ground;
  for (const auto& c : row.cells) {
    const CellProfile& prof = *resolve(c).profile;
    if (prof.power < 0 || prof.ground < 0) continue;
    const auto& col = prof.colorings[c.coloring];
    const bool same = col[prof.power] == col[prof.ground];
    if (kind == PgType::FreePG || same == (kind == PgType::SamePG)) {
      power = col[prof.power];
      ground = col[prof.ground];
      break;
    }
  }
  if (!power) {
    power = Color::Mandrel;
    ground = kind == PgType::SamePG ? Color::Mandrel : Color::Trim;
  }

  std::size_t changed = 0;
  for (auto& c : row.cells) {
    const CellProfile& prof = *resolve(c).profile;
    auto fits = [&](const ColoringCandidate& col) {
      return (prof.power < 0 || col[prof.power] == *power) && (prof.ground < 0 || col[prof.ground] == *ground);
    };
    if (fits(prof.colorings[c.coloring])) continue;
    const auto& current = prof.colorings[c.coloring].colors;
    int best = -1;
    std::size_t best_distance = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < prof.colorings.size(); ++k) {
      if (!fits(prof.colorings[k])) continue;
      std::size_t d = 0;
      for (std::size_t i = 0; i < current.size(); ++i) d += current[i] != prof.colorings[k][i];
      if (d < best_distance) {
        best_distance = d;
        best = static_cast<int>(k);
      }
    }
    if (best >= 0) {
      c.coloring = best;
      ++changed;
    }
  }
  return changed;
}

namespace {

bool keepsRails(const CellProfile& prof, int from, int to) {
  const auto& a = prof.colorings[from];
  const auto& b = prof.colorings[to];
  return (prof.power < 0 || a[prof.power] == b[prof.power]) && (prof.ground < 0 || a[prof.ground] == b[prof.ground]);
}

}  // namespace

std::size_t Legalizer::flipPass(Row& row) const {
  std::size_t flips = 0;
  auto& cells = row.cells;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    PlacedCell& left = cells[i];
    PlacedCell& right = cells[i + 1];
    if (!isConflict(left, right)) continue;
    const auto l = resolve(left);
    const auto r = resolve(right);
    if (!pgCompatible(l.profile->pg, r.profile->pg)) continue;

    const PlacedCell* next = i + 2 < cells.size() ? &cells[i + 2] : nullptr;
    const bool next_was_conflict = next && isConflict(right, *next);
    for (const auto& cand : table_.entry(l.table_index, r.table_index)) {
      // Past the row start the left cell is settled against its own left
      // neighbor and must stay as it is.
      if (i > 0 && (cand.orient_left != left.orient || cand.coloring_left != left.coloring)) continue;
      // Rails were aligned to the row; a flip may not recolor them.
      if (!keepsRails(*l.profile, left.coloring, cand.coloring_left) ||
          !keepsRails(*r.profile, right.coloring, cand.coloring_right))
        continue;
      PlacedCell new_right = right;
      new_right.orient = cand.orient_right;
      new_right.coloring = cand.coloring_right;
      if (next && !next_was_conflict && isConflict(new_right, *next)) continue;

      flips += (left.orient != cand.orient_left || left.coloring != cand.coloring_left);
      flips += (right.orient != new_right.orient || right.coloring != new_right.coloring);
      left.orient = cand.orient_left;
      left.coloring = cand.coloring_left;
      right = new_right;
      break;
    }
  }
  return flips;
}

Legalizer::SpreadResult Legalizer::spreadPass(Row& row, LegalizeMode mode, Coord limit) const {
  SpreadResult result;
  auto& cells = row.cells;
  const std::size_t n = cells.size();
  auto width = [&](std::size_t k) { return resolve(cells[k]).profile->cell.width; };
  auto gapAfter = [&](std::size_t k) { return cells[k + 1].x - (cells[k].x + width(k)); };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!isConflict(cells[i], cells[i + 1])) continue;
    const auto l = resolve(cells[i]);
    const auto r = resolve(cells[i + 1]);
    if (!pgCompatible(l.profile->pg, r.profile->pg)) continue;
    if (!railsAgree(*l.profile, l.profile->colorings[cells[i].coloring], *r.profile,
                    r.profile->colorings[cells[i + 1].coloring]))
      continue;

    const Coord shift = safeGap(cells[i], cells[i + 1]) - gapAfter(i);
    if (shift <= 0) continue;

    // Push the cells to the right as far as needed, consuming whitespace but
    // never closing a gap below what keeps an already-clean pair clean.
    std::vector<Coord> push{shift};
    for (std::size_t j = i + 1; j + 1 < n && push.back() > 0; ++j) {
      const Coord gap = gapAfter(j);
      const Coord keep = isConflict(cells[j], cells[j + 1]) ? 0 : minValidGap(cells[j], cells[j + 1], gap);
      push.push_back(std::max<Coord>(0, push.back() - (gap - keep)));
    }
    if (push.back() == 0) push.pop_back();
    const std::size_t last = i + push.size();
    if (mode == LegalizeMode::B && cells[last].x + push.back() + width(last) > limit) continue;

    for (std::size_t k = 0; k < push.size(); ++k) cells[i + 1 + k].x += push[k];
    ++result.applied;
    result.total += shift;
  }
  return result;
}

LegalizeReport Legalizer::legalize(Placement& p, LegalizeMode mode) const {
  validatePlacement(p, lib_);
  for (const auto& row : p.rows)
    for (const auto& c : row.cells) resolve(c);

  LegalizeReport rep;
  rep.mode = mode;
  rep.conflicts_before = countConflicts(p);
  rep.area_before = placementArea(p, lib_);
  rep.hpwl_before = hpwl(p, lib_);

  for (auto& row : p.rows) {
    if (!pgFeasible(row)) rep.unsolvable_pg_rows.push_back(row.index);
    rep.recolored += alignRails(row);
    // B mode keeps every row inside its original extent (and its capacity).
    Coord extent = 0;
    for (const auto& c : row.cells) extent = std::max(extent, c.x + resolve(c).profile->cell.width);
    const Coord limit = row.capacity > 0 ? std::min(row.capacity, extent) : extent;
    // Each applied flip or shift removes at least one conflict without adding
    // any, so this settles in at most (pairs + 1) rounds.
    for (;;) {
      const std::size_t flips = flipPass(row);
      const SpreadResult spread = spreadPass(row, mode, limit);
      rep.flips += flips;
      rep.total_spread += spread.total;
      if (flips == 0 && spread.applied == 0) break;
    }
  }

  rep.conflicts_after = countConflicts(p);
  rep.area_after = placementArea(p, lib_);
  rep.hpwl_after = hpwl(p, lib_);
  return rep;
}

}  // namespace sadp
