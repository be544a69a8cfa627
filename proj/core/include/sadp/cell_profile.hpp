#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sadp/coloring.hpp"
#include "sadp/geometry.hpp"

namespace sadp {

enum class PgType { SamePG, DiffPG, FreePG };
enum class AbutType { SafeAbut, FreeAbut, UnknownAbut };
enum class AbutCompat { Compatible, NeedsFullCheck };

const char* toString(PgType t);
const char* toString(AbutType t);

/// Process parameters shared by a library and everything built from it.
struct Params {
  double s_dp = 2.0;      // same-mask spacing threshold
  double w_spacer = 1.0;  // spacer width; protection radius for trim edges
  std::optional<double> s_b_min;  // library-wide boundary spacing override

  friend bool operator==(const Params&, const Params&) = default;
};

struct Library {
  Params params;
  std::vector<Cell> cells;
};

/// Everything the legalizer needs to know about one cell, precomputed for
/// both orientations.
struct CellProfile {
  Cell cell;
  std::array<Cell, 2> oriented;  // indexed by Orientation
  ConflictGraph graph;
  std::vector<ColoringCandidate> colorings;
  PgType pg = PgType::FreePG;
  AbutType abut_left = AbutType::UnknownAbut;
  AbutType abut_right = AbutType::UnknownAbut;
  double s_b_left = 0;
  double s_b_right = 0;
  int power = -1;
  int ground = -1;
  /// y-range of a rail made of one full-width rect.
  std::optional<std::pair<Coord, Coord>> power_band;
  std::optional<std::pair<Coord, Coord>> ground_band;

  const Cell& as(Orientation o) const { return oriented[static_cast<int>(o)]; }
  /// Abut-type / boundary clearance of the side that ends up on `side` once
  /// the cell is placed in orientation `o`.
  AbutType abut(Side side, Orientation o) const;
  double boundary(Side side, Orientation o) const;
};

/// Relation between power and ground across the candidate set. Cells without
/// both rails are FreePG.
PgType classifyPG(const Cell& c, std::span<const ColoringCandidate> colorings);

/// Safe when the boundary clearance exceeds s_dp - s_b_min. Free when the
/// signal patterns closer than s_dp to the boundary sit in pairwise distinct
/// components, none holding power or ground. Unknown otherwise.
AbutType classifyAbut(const Cell& c, std::span<const ColoringCandidate> colorings, Side side, double s_dp,
                      double s_b_min);

bool pgCompatible(PgType a, PgType b);

/// Both cells carry single-rect full-width power and ground rails on the same
/// tracks. Only then do rail-to-signal spacings across the boundary follow
/// from each cell's own coloring, and the boundary clearances alone bound the
/// cross-boundary spacing.
bool sharedRails(const CellProfile& a, const CellProfile& b);

/// `left` is the right-side type of the left cell, `right` the left-side type
/// of the right cell.
AbutCompat abutFastPath(AbutType left, AbutType right);

/// True iff the two patterns keep the same color relation in every candidate,
/// i.e. they belong to one connected component.
bool linked(std::span<const ColoringCandidate> colorings, int a, int b);

CellProfile profileCell(const Cell& c, double s_dp, double s_b_min);

/// Minimum finite boundary clearance over all cells and sides, clamped to
/// s_dp; s_dp when no cell has a signal pattern.
double librarySbMin(std::span<const Cell> cells, double s_dp);

struct ProfiledLibrary {
  Params params;
  double s_b_min = 0;
  std::vector<CellProfile> profiles;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const { return profiles.size(); }
  /// Throws UnknownCell.
  std::size_t indexOf(const std::string& name) const;
  const CellProfile& at(const std::string& name) const { return profiles[indexOf(name)]; }
};

/// Profiles every cell. NotDecomposable is rethrown with the cell name
/// prefixed to the message.
ProfiledLibrary profileLibrary(const Library& lib);

}  // namespace sadp
