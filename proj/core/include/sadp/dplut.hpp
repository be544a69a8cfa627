#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sadp/cell_profile.hpp"

namespace sadp {

/// One decomposable way to abut two cells: orientations, coloring indices
/// into each cell's canonical candidate list, and the resulting overlay error.
struct SolutionCandidate {
  Orientation orient_left = Orientation::R0;
  Orientation orient_right = Orientation::R0;
  int coloring_left = 0;
  int coloring_right = 0;
  double overlay = 0;

  friend bool operator==(const SolutionCandidate&, const SolutionCandidate&) = default;
};

/// Canonical orientation-pair rank: R0R0, R0MY, MYR0, MYMY.
inline int orientationRank(Orientation left, Orientation right) {
  return static_cast<int>(left) * 2 + static_cast<int>(right);
}

/// Conflict edge between pattern `left` of the left cell and pattern `right`
/// of the right cell.
struct CrossEdge {
  int left;
  int right;
  friend bool operator==(const CrossEdge&, const CrossEdge&) = default;
};

/// Cross-boundary conflict edges with `right` placed at x = width(left) + gap.
/// Power/power and ground/ground pairs are one row-global rail and never
/// conflict.
std::vector<CrossEdge> crossEdges(const Cell& left, const Cell& right, Coord gap, double s_dp);

/// Power colors match and ground colors match (rails absent on either side
/// impose nothing).
bool railsAgree(const CellProfile& left, const ColoringCandidate& cl, const CellProfile& right,
                const ColoringCandidate& cr);

/// Rails agree and every cross edge is bichromatic.
bool pairColoringValid(const CellProfile& left, const ColoringCandidate& cl, const CellProfile& right,
                       const ColoringCandidate& cr, std::span<const CrossEdge> edges);

/// Every (coloring_left, coloring_right) index pair that is consistent with the
/// merged conflict graph of the two cells abutted at `gap`.
std::vector<std::pair<int, int>> fullPairCheck(const CellProfile& left, Orientation ol, const CellProfile& right,
                                               Orientation orr, Coord gap, double s_dp);

/// Total length of non-rail trim edges that face the abutting boundary from
/// closer than s_dp and have no mandrel within w_spacer on their outer side.
double overlayError(const CellProfile& left, Orientation ol, int cl, const CellProfile& right, Orientation orr,
                    int cr, double s_dp, double w_spacer);

class Dplut {
 public:
  Dplut() = default;
  Dplut(std::vector<std::string> cells, Params params, double s_b_min,
        std::vector<std::vector<SolutionCandidate>> entries);

  std::size_t size() const { return cells_.size(); }
  const std::vector<std::string>& cells() const { return cells_; }
  const Params& params() const { return params_; }
  double sbMin() const { return s_b_min_; }
  const std::string& libraryHash() const { return library_hash_; }
  void setLibraryHash(std::string h) { library_hash_ = std::move(h); }

  /// Throws UnknownCell.
  std::size_t indexOf(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  const std::vector<SolutionCandidate>& entry(std::size_t left, std::size_t right) const {
    return entries_[left * cells_.size() + right];
  }
  const std::vector<SolutionCandidate>& query(const std::string& left, const std::string& right) const {
    return entry(indexOf(left), indexOf(right));
  }
  std::size_t nonEmptyCount() const;

  friend bool operator==(const Dplut& a, const Dplut& b) {
    return a.cells_ == b.cells_ && a.params_ == b.params_ && a.s_b_min_ == b.s_b_min_ &&
           a.entries_ == b.entries_ && a.library_hash_ == b.library_hash_;
  }

 private:
  std::vector<std::string> cells_;
  Params params_;
  double s_b_min_ = 0;
  std::vector<std::vector<SolutionCandidate>> entries_;  // row-major, left cell first
  std::unordered_map<std::string, std::size_t> index_;
  std::string library_hash_;
};

/// Minimum-overlay candidate per orientation pair for one ordered cell pair,
/// sorted by overlay then orientation rank. Empty when no orientation works.
std::vector<SolutionCandidate> buildEntry(const CellProfile& left, const CellProfile& right, double s_dp,
                                          double w_spacer);

/// Builds the N x N table. `threads` = 0 uses the hardware concurrency.
Dplut buildDplut(const ProfiledLibrary& lib, unsigned threads = 0);

/// Stored candidates for (left, right), ascending overlay. Throws UnknownCell.
std::vector<SolutionCandidate> query(const Dplut& t, const std::string& left, const std::string& right);

}  // namespace sadp
