#include <gtest/gtest.h>

#include <cmath>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "sadp/cell_profile.hpp"
#include "sadp/dplut.hpp"
#include "sadp/error.hpp"

using namespace sadp;

namespace {

std::vector<ColoringCandidate> colorings(const Cell& c, double s_dp) {
  return enumerateColorings(buildConflictGraph(c, s_dp));
}

TEST(ClassifyPG, Fixtures) {
  EXPECT_EQ(classifyPG(fixture::samePg(), colorings(fixture::samePg(), 2)), PgType::SamePG);
  EXPECT_EQ(classifyPG(fixture::diffPg(), colorings(fixture::diffPg(), 2)), PgType::DiffPG);
  EXPECT_EQ(classifyPG(fixture::freePg(), colorings(fixture::freePg(), 2)), PgType::FreePG);
  EXPECT_EQ(classifyPG(fixture::twoComponents(), colorings(fixture::twoComponents(), 2)), PgType::FreePG);
}

TEST(ClassifyPG, MatchesRailRelationAcrossAllCandidates) {
  Rng rng(31);
  for (int k = 0; k < 200; ++k) {
    const Cell c = fixture::randomRailCell(rng, 8, "c");
    const auto cands = colorings(c, 3);
    const auto p = static_cast<std::size_t>(c.powerIndex());
    const auto g = static_cast<std::size_t>(c.groundIndex());
    std::size_t same = 0;
    for (const auto& cand : cands) same += cand[p] == cand[g];
    const PgType expected = same == cands.size() ? PgType::SamePG : same == 0 ? PgType::DiffPG : PgType::FreePG;
    EXPECT_EQ(classifyPG(c, cands), expected);
  }
}

TEST(PgCompatible, Table) {
  EXPECT_TRUE(pgCompatible(PgType::SamePG, PgType::SamePG));
  EXPECT_TRUE(pgCompatible(PgType::DiffPG, PgType::DiffPG));
  EXPECT_FALSE(pgCompatible(PgType::SamePG, PgType::DiffPG));
  EXPECT_FALSE(pgCompatible(PgType::DiffPG, PgType::SamePG));
  for (PgType t : {PgType::SamePG, PgType::DiffPG, PgType::FreePG}) {
    EXPECT_TRUE(pgCompatible(PgType::FreePG, t));
    EXPECT_TRUE(pgCompatible(t, PgType::FreePG));
  }
}

TEST(ClassifyAbut, SafeWhenClearanceExceedsThreshold) {
  const Cell c = fixture::freePg();  // clearances 2 (left) and 3 (right)
  const auto cands = colorings(c, 2);
  EXPECT_EQ(classifyAbut(c, cands, Side::Right, 2.0, 1.0), AbutType::SafeAbut);
  // Threshold equal to the clearance is not enough.
  EXPECT_NE(classifyAbut(c, cands, Side::Left, 2.0, 0.0), AbutType::SafeAbut);
}

TEST(ClassifyAbut, FreeWhenNearPatternsAreIndependent) {
  const Cell c = fixture::twoComponents();
  const auto cands = colorings(c, 2);
  EXPECT_EQ(classifyAbut(c, cands, Side::Left, 2.0, 1.0), AbutType::FreeAbut);
  EXPECT_EQ(classifyAbut(c, cands, Side::Right, 2.0, 1.0), AbutType::FreeAbut);
}

TEST(ClassifyAbut, UnknownWhenNearPatternsShareAComponent) {
  const Cell c = fixture::stacked();
  EXPECT_EQ(classifyAbut(c, colorings(c, 2), Side::Left, 2.0, 1.0), AbutType::UnknownAbut);
  EXPECT_EQ(classifyAbut(c, colorings(c, 2), Side::Right, 2.0, 1.0), AbutType::SafeAbut);
}

TEST(ClassifyAbut, UnknownWhenNearPatternIsTiedToARail) {
  const Cell c = fixture::samePg();  // bar two units from the left edge, one from each rail
  EXPECT_EQ(classifyAbut(c, colorings(c, 3), Side::Left, 3.0, 0.0), AbutType::UnknownAbut);
}

TEST(AbutFastPath, Table) {
  const AbutType all[] = {AbutType::SafeAbut, AbutType::FreeAbut, AbutType::UnknownAbut};
  for (AbutType a : all) {
    EXPECT_EQ(abutFastPath(AbutType::SafeAbut, a), AbutCompat::Compatible);
    EXPECT_EQ(abutFastPath(a, AbutType::SafeAbut), AbutCompat::Compatible);
  }
  EXPECT_EQ(abutFastPath(AbutType::FreeAbut, AbutType::FreeAbut), AbutCompat::Compatible);
  EXPECT_EQ(abutFastPath(AbutType::FreeAbut, AbutType::UnknownAbut), AbutCompat::NeedsFullCheck);
  EXPECT_EQ(abutFastPath(AbutType::UnknownAbut, AbutType::FreeAbut), AbutCompat::NeedsFullCheck);
  EXPECT_EQ(abutFastPath(AbutType::UnknownAbut, AbutType::UnknownAbut), AbutCompat::NeedsFullCheck);
}

// A free pattern facing two patterns of opposite color is a real conflict even
// though one side is free: the fast path must not accept {Free, Unknown}.
TEST(AbutFastPath, FreeAgainstUnknownCanBeUndecomposable) {
  Library lib;
  lib.params.s_dp = 2;
  Cell l{"L", 4, 10, {fixture::signal("a", {{3, 2, 4, 8}})}, {}};
  Cell r = fixture::stacked();
  lib.cells = {l, r};
  const auto prof = profileLibrary(lib);
  const auto& pl = prof.at("L");
  const auto& pr = prof.at("STACK");
  ASSERT_EQ(pl.abut(Side::Right, Orientation::R0), AbutType::FreeAbut);
  ASSERT_EQ(pr.abut(Side::Left, Orientation::R0), AbutType::UnknownAbut);
  EXPECT_TRUE(fullPairCheck(pl, Orientation::R0, pr, Orientation::R0, 0, 2.0).empty());
}

TEST(Linked, ConstantRelationAcrossCandidates) {
  const auto cands = colorings(fixture::twoComponents(), 2);
  EXPECT_TRUE(linked(cands, 1, 2));
  EXPECT_FALSE(linked(cands, 0, 1));
  EXPECT_TRUE(linked(cands, 0, 0));
}

TEST(CellProfile, OrientationSwapsSides) {
  const CellProfile p = profileCell(fixture::stacked(), 2.0, 1.0);
  EXPECT_EQ(p.abut(Side::Left, Orientation::R0), AbutType::UnknownAbut);
  EXPECT_EQ(p.abut(Side::Right, Orientation::MY), AbutType::UnknownAbut);
  EXPECT_EQ(p.abut(Side::Left, Orientation::MY), AbutType::SafeAbut);
  EXPECT_DOUBLE_EQ(p.boundary(Side::Left, Orientation::R0), 1.0);
  EXPECT_DOUBLE_EQ(p.boundary(Side::Right, Orientation::MY), 1.0);
  EXPECT_DOUBLE_EQ(p.boundary(Side::Left, Orientation::MY), 6.0);
  EXPECT_EQ(p.as(Orientation::MY), mirrorCell(p.cell));
  EXPECT_EQ(p.colorings.size(), 2u);
}

TEST(CellProfile, RailBands) {
  const CellProfile p = profileCell(fixture::freePg(), 2.0, 1.0);
  ASSERT_TRUE(p.power_band && p.ground_band);
  EXPECT_EQ(*p.power_band, (std::pair<Coord, Coord>{11, 12}));
  EXPECT_EQ(*p.ground_band, (std::pair<Coord, Coord>{0, 1}));
  EXPECT_TRUE(sharedRails(p, p));
  const CellProfile q = profileCell(fixture::twoComponents(), 2.0, 1.0);
  EXPECT_FALSE(sharedRails(p, q));
}

TEST(LibrarySbMin, MinimumFiniteClearanceClampedToSpacing) {
  const std::vector<Cell> cells{fixture::freePg(), fixture::stacked()};
  EXPECT_DOUBLE_EQ(librarySbMin(cells, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(librarySbMin(std::vector<Cell>{fixture::freePg()}, 1.5), 1.5);
  Cell tap{"TAP", 4, 12, {}, {}};
  fixture::addRails(tap);
  EXPECT_DOUBLE_EQ(librarySbMin(std::vector<Cell>{tap}, 2.0), 2.0);
}

TEST(ProfileLibrary, NamesTheCellAndPatternsOfAnOddCycle) {
  Library lib;
  lib.params.s_dp = 2;
  lib.cells = {fixture::freePg(), fixture::triangle()};
  try {
    profileLibrary(lib);
    FAIL() << "expected NotDecomposable";
  } catch (const NotDecomposable& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("TRI"), std::string::npos);
    EXPECT_NE(msg.find("a"), std::string::npos);
    EXPECT_EQ(e.cycle().size(), 3u);
  }
}

TEST(ProfileLibrary, RejectsDuplicateNamesAndHonoursOverride) {
  Library lib;
  lib.params.s_dp = 2;
  lib.cells = {fixture::freePg(), fixture::freePg()};
  EXPECT_THROW(profileLibrary(lib), InvalidCell);
  lib.cells.pop_back();
  lib.params.s_b_min = 0.5;
  EXPECT_DOUBLE_EQ(profileLibrary(lib).s_b_min, 0.5);
  lib.params.s_b_min = 9.0;
  EXPECT_DOUBLE_EQ(profileLibrary(lib).s_b_min, 2.0);
  EXPECT_THROW(profileLibrary(lib).indexOf("NOPE"), UnknownCell);
}

}  // namespace
