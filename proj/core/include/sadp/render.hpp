#pragma once

#include <string>

#include "sadp/cell_profile.hpp"
#include "sadp/legalizer.hpp"

namespace sadp {

struct RenderOptions {
  double scale = 8.0;  // pixels per layout unit
  /// Label instances and outline the patterns involved in violations.
  bool annotate = false;
};

/// Deterministic SVG of a placement. Mandrel and trim patterns get distinct
/// fill classes; cell outlines and row boundaries are drawn on top.
std::string renderSvg(const Placement& p, const ProfiledLibrary& lib, const RenderOptions& opts = {});

}  // namespace sadp
