#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sadp/cell_profile.hpp"
#include "sadp/dplut.hpp"

namespace sadp {

struct PlacedCell {
  std::string instance;
  std::string cell;
  Coord x = 0;  // left edge
  Orientation orient = Orientation::R0;
  int coloring = 0;  // index into the cell's canonical coloring list

  friend bool operator==(const PlacedCell&, const PlacedCell&) = default;
};

struct Row {
  int index = 0;
  Coord y = 0;
  Coord capacity = 0;
  std::vector<PlacedCell> cells;  // ordered by x

  friend bool operator==(const Row&, const Row&) = default;
};

struct PinRef {
  std::string instance;
  std::string pin;
  friend bool operator==(const PinRef&, const PinRef&) = default;
};

struct NetDef {
  std::string name;
  std::vector<PinRef> pins;
  friend bool operator==(const NetDef&, const NetDef&) = default;
};

struct Netlist {
  std::vector<NetDef> nets;
  friend bool operator==(const Netlist&, const Netlist&) = default;
};

struct Placement {
  std::string library;  // name of the library document the placement resolves against
  Coord row_height = 0;
  std::vector<Row> rows;
  Netlist netlist;

  friend bool operator==(const Placement&, const Placement&) = default;
};

enum class LegalizeMode { UB, B };
const char* toString(LegalizeMode m);

struct LegalizeReport {
  LegalizeMode mode = LegalizeMode::UB;
  std::size_t conflicts_before = 0;
  std::size_t conflicts_after = 0;
  double area_before = 0;
  double area_after = 0;
  double hpwl_before = 0;
  double hpwl_after = 0;
  std::size_t flips = 0;     // cell orientation/coloring changes made by the flip pass
  std::size_t recolored = 0;  // cells recolored to match their row's rail colors
  Coord total_spread = 0;
  std::vector<int> unsolvable_pg_rows;

  double areaDeltaPct() const;
  double hpwlDeltaPct() const;
  /// Fraction of the initial conflicts that were resolved; 0 when there were none.
  double resolvedFraction() const;

  friend bool operator==(const LegalizeReport&, const LegalizeReport&) = default;
};

/// Half-perimeter wirelength over all nets. Pins follow cell orientation.
double hpwl(const Placement& p, const ProfiledLibrary& lib);

/// (max right edge - min left edge) x (row height x row count).
double placementArea(const Placement& p, const ProfiledLibrary& lib);

/// Checks that every instance resolves to a library cell of the row height with
/// a valid coloring index, instance names are unique, and rows are sorted and
/// overlap-free. Throws InconsistentLibrary or OverlapError.
void validatePlacement(const Placement& p, const ProfiledLibrary& lib);

/// Row-wise greedy SADP legalization driven by a DPLUT: a flip pass followed
/// by a spread pass per row, repeated until the row stops changing.
class Legalizer {
 public:
  /// Throws InconsistentLibrary if the table was not built from `lib`'s cells.
  Legalizer(const ProfiledLibrary& lib, const Dplut& table);

  double sDp() const { return lib_.params.s_dp; }

  /// True when the abutting pair is not decomposable as currently placed:
  /// overlapping, mismatched rail colors, or a same-colored cross-boundary
  /// pattern pair closer than s_dp. Resolved through the distance bound and the
  /// stored DPLUT candidates before falling back to an exact check.
  bool isConflict(const PlacedCell& left, const PlacedCell& right) const;
  std::size_t countConflicts(const Row& row) const;
  std::size_t countConflicts(const Placement& p) const;

  /// Left-to-right sweep applying the first admissible DPLUT candidate at each
  /// conflicting pair. Positions are never changed. Returns the number of cells
  /// whose orientation or coloring changed.
  std::size_t flipPass(Row& row) const;

  struct SpreadResult {
    std::size_t applied = 0;
    Coord total = 0;
  };
  /// Left-to-right sweep opening the distance-safe gap at each remaining
  /// conflicting pair. Cells only move right and keep their order. In B mode a
  /// shift that would push a cell past `limit` is skipped.
  SpreadResult spreadPass(Row& row, LegalizeMode mode, Coord limit) const;

  /// Recolors cells so every rail in the row carries the same color. Returns
  /// the number of recolored cells; rows with both SamePG and DiffPG cells are
  /// left untouched.
  std::size_t alignRails(Row& row) const;
  bool pgFeasible(const Row& row) const;

  LegalizeReport legalize(Placement& p, LegalizeMode mode) const;

  /// Smallest integer gap at which the pair is safe from cross-boundary
  /// conflicts by distance alone. Pairs without shared rails need s_dp.
  Coord safeGap(const PlacedCell& left, const PlacedCell& right) const;

 private:
  struct Resolved {
    const CellProfile* profile;
    std::size_t table_index;
  };
  Resolved resolve(const PlacedCell& c) const;
  bool validAtGap(const PlacedCell& left, const PlacedCell& right, Coord gap) const;
  Coord minValidGap(const PlacedCell& left, const PlacedCell& right, Coord upto) const;

  const ProfiledLibrary& lib_;
  const Dplut& table_;
  std::vector<std::size_t> table_index_;  // library index -> table index
};

/// One manufacturability violation between two instances of a row (or inside
/// one instance when both names are equal).
struct Violation {
  int row = 0;
  std::string instance_a;
  std::string instance_b;
  std::vector<std::pair<std::string, std::string>> patterns;  // same-colored pairs closer than s_dp
  bool rail_mismatch = false;

  std::string describe() const;
};

/// Flattens the placement, re-derives every spacing violation from geometry
/// with rails merged per row, and groups them by instance pair. Independent of
/// the DPLUT.
std::vector<Violation> auditPlacement(const Placement& p, const ProfiledLibrary& lib, double s_dp);

}  // namespace sadp
