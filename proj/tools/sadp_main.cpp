// sadp: profile cells, build the pair table, legalize, render and check.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sadp/cell_profile.hpp"
#include "sadp/dplut.hpp"
#include "sadp/error.hpp"
#include "sadp/generator.hpp"
#include "sadp/io.hpp"
#include "sadp/legalizer.hpp"
#include "sadp/render.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

struct Globals {
  sadp::io::ParamOverrides flags;
  bool strict = false;
};

sadp::Library loadLibrary(const std::string& path, const Globals& g) {
  std::vector<std::string> warnings;
  sadp::io::LoadOptions opts;
  opts.strict_rails = g.strict;
  sadp::Library lib = sadp::io::parseLibrary(sadp::io::readFile(path), opts, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  if (const char* env = std::getenv("SADP_PARAMS"); env && *env)
    sadp::io::applyOverrides(lib.params, sadp::io::parseParams(sadp::io::readFile(env)));
  sadp::io::applyOverrides(lib.params, g.flags);
  if (!(lib.params.s_dp > 0)) throw sadp::Error("s_dp must be positive");
  if (lib.params.w_spacer < 0) throw sadp::Error("w_spacer must be non-negative");
  return lib;
}

sadp::Dplut timedBuild(const sadp::ProfiledLibrary& lib, const sadp::Library& raw, unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  sadp::Dplut t = sadp::buildDplut(lib, threads);
  t.setLibraryHash(sadp::io::libraryHash(raw));
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "dplut: %zu cells, %zu non-empty entries, built in %.1f ms\n", t.size(), t.nonEmptyCount(),
               ms);
  return t;
}

int runProfile(const std::string& lib_path, const Globals& g) {
  const sadp::Library raw = loadLibrary(lib_path, g);
  const sadp::ProfiledLibrary lib = sadp::profileLibrary(raw);
  std::printf("s_dp %g  w_spacer %g  s_b_min %g\n", lib.params.s_dp, lib.params.w_spacer, lib.s_b_min);
  std::printf("%-16s %8s %10s %9s %8s %8s %8s %8s %8s\n", "cell", "patterns", "components", "colorings", "pg",
              "left", "right", "s_b_l", "s_b_r");
  for (const auto& p : lib.profiles)
    std::printf("%-16s %8zu %10zu %9zu %8s %8s %8s %8g %8g\n", p.cell.name.c_str(), p.cell.patterns.size(),
                p.graph.components.size(), p.colorings.size(), sadp::toString(p.pg), sadp::toString(p.abut_left),
                sadp::toString(p.abut_right), p.s_b_left, p.s_b_right);
  return kOk;
}

int runDplut(const std::string& lib_path, const std::string& out, unsigned threads, const Globals& g) {
  const sadp::Library raw = loadLibrary(lib_path, g);
  const sadp::ProfiledLibrary lib = sadp::profileLibrary(raw);
  sadp::io::writeFile(out, sadp::io::serializeDplut(timedBuild(lib, raw, threads)));
  return kOk;
}

int runLegalize(const std::string& lib_path, const std::string& pl_path, const std::string& mode,
                const std::string& table_path, const std::string& out, const std::string& out_placement,
                const Globals& g) {
  const sadp::Library raw = loadLibrary(lib_path, g);
  const sadp::ProfiledLibrary lib = sadp::profileLibrary(raw);
  sadp::Placement placement = sadp::io::parsePlacement(sadp::io::readFile(pl_path));
  const sadp::Dplut table = table_path.empty()
                                ? timedBuild(lib, raw, 0)
                                : sadp::io::loadDplut(sadp::io::readFile(table_path), sadp::io::libraryHash(raw));
  const sadp::Legalizer legalizer(lib, table);
  const sadp::LegalizeReport rep =
      legalizer.legalize(placement, mode == "ub" ? sadp::LegalizeMode::UB : sadp::LegalizeMode::B);
  sadp::io::writeFile(out, sadp::io::serializeReport(rep));
  if (!out_placement.empty()) sadp::io::writeFile(out_placement, sadp::io::serializePlacement(placement));
  std::printf("conflicts %zu -> %zu (resolved %.4f), area %+.4f%%, hpwl %+.4f%%, flips %zu, spread %lld\n",
              rep.conflicts_before, rep.conflicts_after, rep.resolvedFraction(), rep.areaDeltaPct(),
              rep.hpwlDeltaPct(), rep.flips, static_cast<long long>(rep.total_spread));
  for (int r : rep.unsolvable_pg_rows) std::printf("row %d: mixes same-pg and diff-pg cells\n", r);
  return kOk;
}

int runRender(const std::string& lib_path, const std::string& pl_path, const std::string& out, bool annotate,
              const Globals& g) {
  const sadp::ProfiledLibrary lib = sadp::profileLibrary(loadLibrary(lib_path, g));
  const sadp::Placement placement = sadp::io::parsePlacement(sadp::io::readFile(pl_path));
  sadp::validatePlacement(placement, lib);
  sadp::RenderOptions opts;
  opts.annotate = annotate;
  sadp::io::writeFile(out, sadp::renderSvg(placement, lib, opts));
  return kOk;
}

int runCheck(const std::string& lib_path, const std::string& pl_path, const Globals& g) {
  const sadp::ProfiledLibrary lib = sadp::profileLibrary(loadLibrary(lib_path, g));
  const sadp::Placement placement = sadp::io::parsePlacement(sadp::io::readFile(pl_path));
  sadp::validatePlacement(placement, lib);
  const auto violations = sadp::auditPlacement(placement, lib, lib.params.s_dp);
  for (const auto& v : violations) std::printf("%s\n", v.describe().c_str());
  std::printf("%zu violation%s\n", violations.size(), violations.size() == 1 ? "" : "s");
  return violations.empty() ? kOk : kViolations;
}

int runGen(sadp::GeneratorOptions opts, const std::string& mix, const std::string& lib_out,
           const std::string& pl_out, const Globals& g) {
  std::istringstream in(mix);
  std::string part;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::getline(in, part, ',')) throw sadp::Error("--pg-mix expects three weights free,same,diff");
    try {
      opts.pg_mix[i] = std::stoi(part);
    } catch (const std::exception&) {
      throw sadp::Error("--pg-mix: '" + part + "' is not an integer");
    }
  }
  if (g.flags.s_dp) opts.s_dp = *g.flags.s_dp;
  if (g.flags.w_spacer) opts.w_spacer = *g.flags.w_spacer;
  sadp::Benchmark b;
  try {
    b = sadp::generateBenchmark(opts);
  } catch (const std::invalid_argument& e) {
    throw sadp::Error(e.what());
  }
  sadp::io::writeFile(lib_out, sadp::io::serializeLibrary(b.library));
  sadp::io::writeFile(pl_out, sadp::io::serializePlacement(b.placement));
  const sadp::ProfiledLibrary lib = sadp::profileLibrary(b.library);
  const auto violations = sadp::auditPlacement(b.placement, lib, lib.params.s_dp);
  std::printf("generated %zu instances in %d rows from %zu cells; %zu conflicting pairs\n", opts.cells, opts.rows,
              b.library.cells.size(), violations.size());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SADP-aware detailed placement legalization"};
  app.require_subcommand(1);
  Globals g;
  double s_dp = 0, w_spacer = 0, s_b_min = 0;
  auto* o_sdp = app.add_option("--s-dp", s_dp, "Same-mask spacing threshold")->check(CLI::PositiveNumber);
  auto* o_ws = app.add_option("--w-spacer", w_spacer, "Spacer width")->check(CLI::NonNegativeNumber);
  auto* o_sb = app.add_option("--s-b-min", s_b_min, "Library-wide boundary spacing")->check(CLI::NonNegativeNumber);
  app.add_flag("--strict", g.strict, "Treat missing or partial rails as errors");

  std::string lib_path, pl_path, out, table_path, out_placement, mode = "ub";
  unsigned threads = 0;
  bool annotate = false;

  auto* profile = app.add_subcommand("profile", "Print the per-cell profile");
  profile->add_option("library", lib_path)->required();

  auto* dplut = app.add_subcommand("dplut", "Build the pair lookup table");
  dplut->add_option("library", lib_path)->required();
  dplut->add_option("-o,--output", out)->required();
  dplut->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* legalize = app.add_subcommand("legalize", "Legalize a placement");
  legalize->add_option("library", lib_path)->required();
  legalize->add_option("placement", pl_path)->required();
  legalize->add_option("--mode", mode)->check(CLI::IsMember({"ub", "b"}));
  legalize->add_option("--table", table_path, "Prebuilt table; built on the fly when omitted");
  legalize->add_option("-o,--output", out, "Report file")->required();
  legalize->add_option("--out-placement", out_placement, "Write the legalized placement");

  auto* render = app.add_subcommand("render", "Draw a placement as SVG");
  render->add_option("library", lib_path)->required();
  render->add_option("placement", pl_path)->required();
  render->add_option("-o,--output", out)->required();
  render->add_flag("--annotate", annotate, "Label instances and mark violations");

  sadp::GeneratorOptions gen_opts;
  std::string mix = "2,1,0", lib_out, pl_out;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic library and placement");
  gen->add_option("--cells", gen_opts.cells)->check(CLI::PositiveNumber);
  gen->add_option("--rows", gen_opts.rows)->check(CLI::PositiveNumber);
  gen->add_option("--util", gen_opts.util)->check(CLI::Range(0.01, 1.0));
  gen->add_option("--seed", gen_opts.seed);
  gen->add_option("--lib-cells", gen_opts.lib_cells)->check(CLI::PositiveNumber);
  gen->add_option("--pg-mix", mix, "Weights free,same,diff");
  gen->add_option("--out-library", lib_out)->required();
  gen->add_option("--out-placement", pl_out)->required();

  auto* check = app.add_subcommand("check", "Audit a placement; exit 1 on violations");
  check->add_option("library", lib_path)->required();
  check->add_option("placement", pl_path)->required();

  for (auto* sub : {profile, dplut, legalize, render, gen, check}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  if (*o_sdp) g.flags.s_dp = s_dp;
  if (*o_ws) g.flags.w_spacer = w_spacer;
  if (*o_sb) g.flags.s_b_min = s_b_min;

  try {
    if (*profile) return runProfile(lib_path, g);
    if (*dplut) return runDplut(lib_path, out, threads, g);
    if (*legalize) return runLegalize(lib_path, pl_path, mode, table_path, out, out_placement, g);
    if (*render) return runRender(lib_path, pl_path, out, annotate, g);
    if (*gen) return runGen(gen_opts, mix, lib_out, pl_out, g);
    if (*check) return runCheck(lib_path, pl_path, g);
  } catch (const sadp::ParseError& e) {
    if (e.line() > 0)
      std::fprintf(stderr, "error: line %zu, column %zu: %s\n", e.line(), e.column(), e.what());
    else
      std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
  return kInputError;
}
