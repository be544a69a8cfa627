#include "sadp/dplut.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <thread>

#include "sadp/error.hpp"

namespace sadp {

std::vector<CrossEdge> crossEdges(const Cell& left, const Cell& right, Coord gap, double s_dp) {
  std::vector<CrossEdge> out;
  const Coord offset = left.width + gap;
  std::vector<Rect> shifted;
  for (std::size_t j = 0; j < right.patterns.size(); ++j) {
    const auto& q = right.patterns[j];
    const double reach = patternBoundaryDistance(right, q, Side::Left) + static_cast<double>(gap);
    if (reach >= s_dp && !q.isRail()) continue;
    shifted.clear();
    for (const auto& r : q.rects) shifted.push_back(r.translated(offset, 0));
    for (std::size_t i = 0; i < left.patterns.size(); ++i) {
      const auto& p = left.patterns[i];
      if (p.isRail() && p.net == q.net) continue;
      if (patternClearance(p.rects, shifted) < s_dp)
        out.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return out;
}

bool railsAgree(const CellProfile& left, const ColoringCandidate& cl, const CellProfile& right,
                const ColoringCandidate& cr) {
  if (left.power >= 0 && right.power >= 0 && cl[left.power] != cr[right.power]) return false;
  if (left.ground >= 0 && right.ground >= 0 && cl[left.ground] != cr[right.ground]) return false;
  return true;
}

bool pairColoringValid(const CellProfile& left, const ColoringCandidate& cl, const CellProfile& right,
                       const ColoringCandidate& cr, std::span<const CrossEdge> edges) {
  if (!railsAgree(left, cl, right, cr)) return false;
  return std::all_of(edges.begin(), edges.end(), [&](const CrossEdge& e) { return cl[e.left] != cr[e.right]; });
}

std::vector<std::pair<int, int>> fullPairCheck(const CellProfile& left, Orientation ol, const CellProfile& right,
                                               Orientation orr, Coord gap, double s_dp) {
  if (gap < 0) throw std::invalid_argument("negative gap");
  const auto edges = crossEdges(left.as(ol), right.as(orr), gap, s_dp);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < left.colorings.size(); ++i)
    for (std::size_t j = 0; j < right.colorings.size(); ++j)
      if (pairColoringValid(left, left.colorings[i], right, right.colorings[j], edges))
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

namespace {

using Interval = std::pair<Coord, Coord>;

void subtract(std::vector<Interval>& spans, Interval cut) {
  std::vector<Interval> out;
  for (auto [lo, hi] : spans) {
    if (cut.second <= lo || cut.first >= hi) {
      out.emplace_back(lo, hi);
      continue;
    }
    if (lo < cut.first) out.emplace_back(lo, cut.first);
    if (cut.second < hi) out.emplace_back(cut.second, hi);
  }
  spans = std::move(out);
}

// Unprotected length of the boundary-facing edges of one trim pattern that lie
// closer than s_dp to the boundary at `boundary`. `toward` is the side of the
// pattern that faces the boundary. Rects are in the pair frame.
double unprotectedLength(const std::vector<Rect>& rects, Side toward, Coord boundary,
                         const std::vector<Rect>& mandrels, double s_dp, double w_spacer) {
  double total = 0;
  for (const auto& r : rects) {
    const Coord x = toward == Side::Right ? r.x_hi : r.x_lo;
    if (static_cast<double>(toward == Side::Right ? boundary - x : x - boundary) >= s_dp) continue;
    std::vector<Interval> spans{{r.y_lo, r.y_hi}};
    for (const auto& q : rects) {
      const bool interior = toward == Side::Right ? (q.x_lo <= x && x < q.x_hi) : (q.x_lo < x && x <= q.x_hi);
      if (interior) subtract(spans, {q.y_lo, q.y_hi});
    }
    for (const auto& m : mandrels) {
      const Coord d = toward == Side::Right ? m.x_lo - x : x - m.x_hi;
      if (d >= 0 && static_cast<double>(d) <= w_spacer) subtract(spans, {m.y_lo, m.y_hi});
    }
    for (auto [lo, hi] : spans) total += static_cast<double>(hi - lo);
  }
  return total;
}

double overlayOriented(const Cell& lc, const ColoringCandidate& cl, const Cell& rc, const ColoringCandidate& cr,
                       double s_dp, double w_spacer) {
  const Coord offset = lc.width;
  std::vector<Rect> mandrels;
  for (std::size_t i = 0; i < lc.patterns.size(); ++i)
    if (cl[i] == Color::Mandrel)
      for (const auto& r : lc.patterns[i].rects) mandrels.push_back(r);
  for (std::size_t j = 0; j < rc.patterns.size(); ++j)
    if (cr[j] == Color::Mandrel)
      for (const auto& r : rc.patterns[j].rects) mandrels.push_back(r.translated(offset, 0));

  double total = 0;
  for (std::size_t i = 0; i < lc.patterns.size(); ++i) {
    const auto& p = lc.patterns[i];
    if (p.isRail() || cl[i] != Color::Trim) continue;
    total += unprotectedLength(p.rects, Side::Right, offset, mandrels, s_dp, w_spacer);
  }
  std::vector<Rect> shifted;
  for (std::size_t j = 0; j < rc.patterns.size(); ++j) {
    const auto& q = rc.patterns[j];
    if (q.isRail() || cr[j] != Color::Trim) continue;
    shifted.clear();
    for (const auto& r : q.rects) shifted.push_back(r.translated(offset, 0));
    total += unprotectedLength(shifted, Side::Left, offset, mandrels, s_dp, w_spacer);
  }
  return total;
}

// Colorings of one oriented cell grouped by their restriction to the patterns
// that can influence a pair check on one side (everything within
// s_dp + w_spacer of that boundary, plus the rails). One representative, the
// lowest index, per group.
std::vector<int> sideRepresentatives(const CellProfile& prof, Orientation o, Side side, double s_dp,
                                     double w_spacer) {
  const Cell& c = prof.as(o);
  std::vector<int> relevant;
  for (std::size_t i = 0; i < c.patterns.size(); ++i)
    if (c.patterns[i].isRail() || patternBoundaryDistance(c, c.patterns[i], side) < s_dp + w_spacer)
      relevant.push_back(static_cast<int>(i));

  std::map<std::vector<Color>, int> seen;
  std::vector<int> reps;
  for (std::size_t k = 0; k < prof.colorings.size(); ++k) {
    std::vector<Color> key;
    key.reserve(relevant.size());
    for (int i : relevant) key.push_back(prof.colorings[k][i]);
    if (seen.emplace(std::move(key), static_cast<int>(k)).second) reps.push_back(static_cast<int>(k));
  }
  return reps;
}

struct OrientedReps {
  std::array<std::vector<int>, 2> as_left;   // by orientation; right side faces the pair
  std::array<std::vector<int>, 2> as_right;  // by orientation; left side faces the pair
};

OrientedReps representatives(const CellProfile& prof, double s_dp, double w_spacer) {
  OrientedReps r;
  for (Orientation o : {Orientation::R0, Orientation::MY}) {
    r.as_left[static_cast<int>(o)] = sideRepresentatives(prof, o, Side::Right, s_dp, w_spacer);
    r.as_right[static_cast<int>(o)] = sideRepresentatives(prof, o, Side::Left, s_dp, w_spacer);
  }
  return r;
}

std::vector<SolutionCandidate> entryFor(const CellProfile& left, const OrientedReps& lreps,
                                        const CellProfile& right, const OrientedReps& rreps, double s_dp,
                                        double w_spacer) {
  std::vector<SolutionCandidate> out;
  if (!pgCompatible(left.pg, right.pg)) return out;

  for (Orientation ol : {Orientation::R0, Orientation::MY}) {
    for (Orientation orr : {Orientation::R0, Orientation::MY}) {
      const bool safe = sharedRails(left, right) && (left.abut(Side::Right, ol) == AbutType::SafeAbut ||
                                                      right.abut(Side::Left, orr) == AbutType::SafeAbut);
      const auto edges = safe ? std::vector<CrossEdge>{} : crossEdges(left.as(ol), right.as(orr), 0, s_dp);

      SolutionCandidate best;
      double best_overlay = std::numeric_limits<double>::infinity();
      for (int cl : lreps.as_left[static_cast<int>(ol)]) {
        for (int cr : rreps.as_right[static_cast<int>(orr)]) {
          if (!pairColoringValid(left, left.colorings[cl], right, right.colorings[cr], edges)) continue;
          const double ov = overlayOriented(left.as(ol), left.colorings[cl], right.as(orr), right.colorings[cr],
                                            s_dp, w_spacer);
          if (ov < best_overlay) {
            best_overlay = ov;
            best = {ol, orr, cl, cr, ov};
          }
        }
      }
      if (best_overlay < std::numeric_limits<double>::infinity()) out.push_back(best);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SolutionCandidate& a, const SolutionCandidate& b) {
    if (a.overlay != b.overlay) return a.overlay < b.overlay;
    return orientationRank(a.orient_left, a.orient_right) < orientationRank(b.orient_left, b.orient_right);
  });
  return out;
}

}  // namespace

double overlayError(const CellProfile& left, Orientation ol, int cl, const CellProfile& right, Orientation orr,
                    int cr, double s_dp, double w_spacer) {
  return overlayOriented(left.as(ol), left.colorings.at(cl), right.as(orr), right.colorings.at(cr), s_dp,
                         w_spacer);
}

Dplut::Dplut(std::vector<std::string> cells, Params params, double s_b_min,
             std::vector<std::vector<SolutionCandidate>> entries)
    : cells_(std::move(cells)), params_(params), s_b_min_(s_b_min), entries_(std::move(entries)) {
  if (entries_.size() != cells_.size() * cells_.size())
    throw std::invalid_argument("DPLUT entry count must be N*N");
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!index_.emplace(cells_[i], i).second) throw InvalidCell("duplicate cell name '" + cells_[i] + "'");
}

std::size_t Dplut::indexOf(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownCell("cell '" + name + "' is not in the DPLUT");
  return it->second;
}

std::size_t Dplut::nonEmptyCount() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.empty(); }));
}

std::vector<SolutionCandidate> buildEntry(const CellProfile& left, const CellProfile& right, double s_dp,
                                          double w_spacer) {
  return entryFor(left, representatives(left, s_dp, w_spacer), right, representatives(right, s_dp, w_spacer),
                  s_dp, w_spacer);
}

Dplut buildDplut(const ProfiledLibrary& lib, unsigned threads) {
  const std::size_t n = lib.size();
  const double s_dp = lib.params.s_dp;
  const double w_spacer = lib.params.w_spacer;

  std::vector<OrientedReps> reps;
  reps.reserve(n);
  for (const auto& p : lib.profiles) reps.push_back(representatives(p, s_dp, w_spacer));

  std::vector<std::vector<SolutionCandidate>> entries(n * n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  // Each worker owns the table rows i = w, w + threads, ...; writes are disjoint.
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += threads)
      for (std::size_t j = 0; j < n; ++j)
        entries[i * n + j] = entryFor(lib.profiles[i], reps[i], lib.profiles[j], reps[j], s_dp, w_spacer);
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : lib.profiles) names.push_back(p.cell.name);
  return Dplut(std::move(names), lib.params, lib.s_b_min, std::move(entries));
}

std::vector<SolutionCandidate> query(const Dplut& t, const std::string& left, const std::string& right) {
  return t.query(left, right);
}

}  // namespace sadp
