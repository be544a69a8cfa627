#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sadp/cell_profile.hpp"
#include "sadp/dplut.hpp"
#include "sadp/legalizer.hpp"

namespace sadp::io {

inline constexpr int kFormatVersion = 1;

struct LoadOptions {
  /// Rail-less cells and rails that do not span the cell width are errors
  /// instead of warnings.
  bool strict_rails = false;
};

/// Parsers throw ParseError (syntax errors carry line/column, semantic errors a
/// JSON pointer) or InvalidCell.
Library parseLibrary(std::string_view text, const LoadOptions& opts = {}, std::vector<std::string>* warnings = nullptr);
std::string serializeLibrary(const Library& lib);

Placement parsePlacement(std::string_view text);
std::string serializePlacement(const Placement& p);

Dplut parseDplut(std::string_view text);
std::string serializeDplut(const Dplut& t);
/// Parses a table and rejects it with StaleTable unless its library hash and
/// parameters match.
Dplut loadDplut(std::string_view text, const std::string& expected_hash);

LegalizeReport parseReport(std::string_view text);
std::string serializeReport(const LegalizeReport& r);

/// Deterministic fingerprint of the cells and parameters of a library.
std::string libraryHash(const Library& lib);

/// Partial parameter set, e.g. from the SADP_PARAMS file.
struct ParamOverrides {
  std::optional<double> s_dp;
  std::optional<double> w_spacer;
  std::optional<double> s_b_min;
};
ParamOverrides parseParams(std::string_view text);
void applyOverrides(Params& p, const ParamOverrides& o);

std::string readFile(const std::filesystem::path& path);
void writeFile(const std::filesystem::path& path, std::string_view content);

}  // namespace sadp::io
