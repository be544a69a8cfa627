#include "sadp/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sadp/error.hpp"

namespace sadp::io {

using Json = nlohmann::ordered_json;

namespace {

// ---- reading -------------------------------------------------------------

Json parseText(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(msg, line, col);
  }
}

[[noreturn]] void semantic(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg, 0, 0, path);
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) semantic(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) semantic(path, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t asInt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) semantic(path, "expected an integer");
  return j.get<std::int64_t>();
}

double asNumber(const Json& j, const std::string& path) {
  if (!j.is_number()) semantic(path, "expected a number");
  return j.get<double>();
}

std::string asString(const Json& j, const std::string& path) {
  if (!j.is_string()) semantic(path, "expected a string");
  return j.get<std::string>();
}

const Json& asArray(const Json& j, const std::string& path) {
  if (!j.is_array()) semantic(path, "expected an array");
  return j;
}

void checkHeader(const Json& doc, const char* format) {
  if (!doc.is_object()) semantic("", "expected a JSON object");
  if (asString(field(doc, "", "format"), "/format") != format)
    semantic("/format", std::string("expected '") + format + "'");
  const auto version = asInt(field(doc, "", "version"), "/version");
  if (version != kFormatVersion) semantic("/version", "unsupported version " + std::to_string(version));
}

Orientation parseOrientation(const Json& j, const std::string& path) {
  const std::string s = asString(j, path);
  if (s == "R0") return Orientation::R0;
  if (s == "MY") return Orientation::MY;
  semantic(path, "orientation must be R0 or MY");
}

Net parseNet(const Json& j, const std::string& path) {
  const std::string s = asString(j, path);
  if (s == "power") return Net::Power;
  if (s == "ground") return Net::Ground;
  if (s == "signal") return Net::Signal;
  semantic(path, "net must be power, ground or signal");
}

Params parseParamsObject(const Json& j, const std::string& path) {
  Params p;
  p.s_dp = asNumber(field(j, path, "s_dp"), path + "/s_dp");
  p.w_spacer = asNumber(field(j, path, "w_spacer"), path + "/w_spacer");
  if (auto it = j.find("s_b_min"); it != j.end() && !it->is_null())
    p.s_b_min = asNumber(*it, path + "/s_b_min");
  if (!(p.s_dp > 0)) semantic(path + "/s_dp", "must be positive");
  if (p.w_spacer < 0) semantic(path + "/w_spacer", "must be non-negative");
  return p;
}

// ---- writing -------------------------------------------------------------

std::string oneLine(const Json& j) {
  if (!j.is_structured()) return j.dump();
  std::string out = j.is_object() ? "{" : "[";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ", ";
    first = false;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    out += oneLine(*it);
  }
  out += j.is_object() ? "}" : "]";
  return out;
}

// Objects and arrays whose one-line form fits stay on one line; larger ones
// put one child per line. Field order is insertion order.
void pretty(const Json& j, std::string& out, int indent) {
  const std::string compact = oneLine(j);
  if (!j.is_structured() || j.empty() || compact.size() + static_cast<std::size_t>(indent) <= 100) {
    out += compact;
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    pretty(*it, out, indent + 2);
    if (k + 1 < j.size()) out += ",";
    out += "\n";
  }
  out += std::string(static_cast<std::size_t>(indent), ' ');
  out += object ? "}" : "]";
}

std::string render(const Json& j) {
  std::string out;
  pretty(j, out, 0);
  out += "\n";
  return out;
}

Json paramsJson(const Params& p) {
  Json j;
  j["s_dp"] = p.s_dp;
  j["w_spacer"] = p.w_spacer;
  if (p.s_b_min) j["s_b_min"] = *p.s_b_min;
  return j;
}

Json cellJson(const Cell& c) {
  Json j;
  j["name"] = c.name;
  j["width"] = c.width;
  j["height"] = c.height;
  Json pats = Json::array();
  for (const auto& p : c.patterns) {
    Json pj;
    pj["id"] = p.id;
    pj["net"] = toString(p.net);
    Json rects = Json::array();
    for (const auto& r : p.rects) rects.push_back({r.x_lo, r.y_lo, r.x_hi, r.y_hi});
    pj["rects"] = std::move(rects);
    pats.push_back(std::move(pj));
  }
  j["patterns"] = std::move(pats);
  Json pins = Json::array();
  for (const auto& pin : c.pins) pins.push_back(Json{{"name", pin.name}, {"x", pin.x}, {"y", pin.y}});
  j["pins"] = std::move(pins);
  return j;
}

Json libraryJson(const Library& lib) {
  Json j;
  j["format"] = "sadp-library";
  j["version"] = kFormatVersion;
  j["units"] = "1 unit = minimum feature width";
  j["params"] = paramsJson(lib.params);
  Json cells = Json::array();
  for (const auto& c : lib.cells) cells.push_back(cellJson(c));
  j["cells"] = std::move(cells);
  return j;
}

bool spansWidth(const Pattern& p, Coord width) {
  bool left = false;
  bool right = false;
  for (const auto& r : p.rects) {
    left |= r.x_lo == 0;
    right |= r.x_hi == width;
  }
  return left && right;
}

}  // namespace

Library parseLibrary(std::string_view text, const LoadOptions& opts, std::vector<std::string>* warnings) {
  const Json doc = parseText(text);
  checkHeader(doc, "sadp-library");
  Library lib;
  lib.params = parseParamsObject(field(doc, "", "params"), "/params");

  auto warn = [&](const std::string& path, const std::string& msg) {
    if (opts.strict_rails) semantic(path, msg);
    if (warnings) warnings->push_back(path + ": " + msg);
  };

  const Json& cells = asArray(field(doc, "", "cells"), "/cells");
  std::set<std::string> names;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const std::string cp = "/cells/" + std::to_string(ci);
    const Json& cj = cells[ci];
    Cell c;
    c.name = asString(field(cj, cp, "name"), cp + "/name");
    c.width = asInt(field(cj, cp, "width"), cp + "/width");
    c.height = asInt(field(cj, cp, "height"), cp + "/height");
    if (!names.insert(c.name).second) semantic(cp + "/name", "duplicate cell name '" + c.name + "'");

    const Json& pats = asArray(field(cj, cp, "patterns"), cp + "/patterns");
    for (std::size_t pi = 0; pi < pats.size(); ++pi) {
      const std::string pp = cp + "/patterns/" + std::to_string(pi);
      Pattern p;
      p.id = asString(field(pats[pi], pp, "id"), pp + "/id");
      p.net = parseNet(field(pats[pi], pp, "net"), pp + "/net");
      const Json& rects = asArray(field(pats[pi], pp, "rects"), pp + "/rects");
      for (std::size_t ri = 0; ri < rects.size(); ++ri) {
        const std::string rp = pp + "/rects/" + std::to_string(ri);
        const Json& r = asArray(rects[ri], rp);
        if (r.size() != 4) semantic(rp, "rect must be [x_lo, y_lo, x_hi, y_hi]");
        p.rects.push_back({asInt(r[0], rp + "/0"), asInt(r[1], rp + "/1"), asInt(r[2], rp + "/2"),
                           asInt(r[3], rp + "/3")});
      }
      c.patterns.push_back(std::move(p));
    }
    if (auto it = cj.find("pins"); it != cj.end()) {
      const Json& pins = asArray(*it, cp + "/pins");
      for (std::size_t k = 0; k < pins.size(); ++k) {
        const std::string pp = cp + "/pins/" + std::to_string(k);
        c.pins.push_back({asString(field(pins[k], pp, "name"), pp + "/name"),
                          asInt(field(pins[k], pp, "x"), pp + "/x"), asInt(field(pins[k], pp, "y"), pp + "/y")});
      }
    }
    try {
      validateCell(c);
    } catch (const InvalidCell& e) {
      semantic(cp, e.what());
    }

    if (!lib.cells.empty() && c.height != lib.cells.front().height)
      semantic(cp + "/height", "multi-height cell: height " + std::to_string(c.height) + " differs from " +
                                   std::to_string(lib.cells.front().height));
    const int power = c.powerIndex();
    const int ground = c.groundIndex();
    if (power < 0 || ground < 0) warn(cp, "cell '" + c.name + "' lacks a power or ground rail");
    for (int r : {power, ground})
      if (r >= 0 && !spansWidth(c.patterns[r], c.width))
        warn(cp, "rail '" + c.patterns[r].id + "' of cell '" + c.name + "' does not span the cell width");
    lib.cells.push_back(std::move(c));
  }
  return lib;
}

std::string serializeLibrary(const Library& lib) { return render(libraryJson(lib)); }

std::string libraryHash(const Library& lib) {
  // FNV-1a over the canonical compact document.
  const std::string text = libraryJson(lib).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Placement parsePlacement(std::string_view text) {
  const Json doc = parseText(text);
  checkHeader(doc, "sadp-placement");
  Placement p;
  p.library = asString(field(doc, "", "library"), "/library");
  p.row_height = asInt(field(doc, "", "row_height"), "/row_height");
  std::set<std::string> instances;
  const Json& rows = asArray(field(doc, "", "rows"), "/rows");
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const std::string rp = "/rows/" + std::to_string(ri);
    Row row;
    row.index = static_cast<int>(asInt(field(rows[ri], rp, "index"), rp + "/index"));
    row.y = asInt(field(rows[ri], rp, "y"), rp + "/y");
    row.capacity = asInt(field(rows[ri], rp, "capacity"), rp + "/capacity");
    const Json& cells = asArray(field(rows[ri], rp, "cells"), rp + "/cells");
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const std::string cp = rp + "/cells/" + std::to_string(ci);
      PlacedCell c;
      c.instance = asString(field(cells[ci], cp, "instance"), cp + "/instance");
      c.cell = asString(field(cells[ci], cp, "cell"), cp + "/cell");
      c.x = asInt(field(cells[ci], cp, "x"), cp + "/x");
      c.orient = parseOrientation(field(cells[ci], cp, "orient"), cp + "/orient");
      c.coloring = static_cast<int>(asInt(field(cells[ci], cp, "coloring"), cp + "/coloring"));
      if (!instances.insert(c.instance).second) semantic(cp + "/instance", "duplicate instance '" + c.instance + "'");
      row.cells.push_back(std::move(c));
    }
    p.rows.push_back(std::move(row));
  }
  if (auto it = doc.find("nets"); it != doc.end()) {
    const Json& nets = asArray(*it, "/nets");
    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
      const std::string np = "/nets/" + std::to_string(ni);
      NetDef net;
      net.name = asString(field(nets[ni], np, "name"), np + "/name");
      const Json& pins = asArray(field(nets[ni], np, "pins"), np + "/pins");
      for (std::size_t k = 0; k < pins.size(); ++k) {
        const std::string pp = np + "/pins/" + std::to_string(k);
        const Json& pj = asArray(pins[k], pp);
        if (pj.size() != 2) semantic(pp, "pin must be [instance, pin]");
        net.pins.push_back({asString(pj[0], pp + "/0"), asString(pj[1], pp + "/1")});
      }
      p.netlist.nets.push_back(std::move(net));
    }
  }
  return p;
}

std::string serializePlacement(const Placement& p) {
  Json j;
  j["format"] = "sadp-placement";
  j["version"] = kFormatVersion;
  j["library"] = p.library;
  j["row_height"] = p.row_height;
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json rj;
    rj["index"] = row.index;
    rj["y"] = row.y;
    rj["capacity"] = row.capacity;
    Json cells = Json::array();
    for (const auto& c : row.cells) {
      Json cj;
      cj["instance"] = c.instance;
      cj["cell"] = c.cell;
      cj["x"] = c.x;
      cj["orient"] = toString(c.orient);
      cj["coloring"] = c.coloring;
      cells.push_back(std::move(cj));
    }
    rj["cells"] = std::move(cells);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  Json nets = Json::array();
  for (const auto& n : p.netlist.nets) {
    Json pins = Json::array();
    for (const auto& pin : n.pins) pins.push_back({pin.instance, pin.pin});
    nets.push_back(Json{{"name", n.name}, {"pins", std::move(pins)}});
  }
  j["nets"] = std::move(nets);
  return render(j);
}

Dplut parseDplut(std::string_view text) {
  const Json doc = parseText(text);
  checkHeader(doc, "sadp-dplut");
  const Params params = parseParamsObject(field(doc, "", "params"), "/params");
  const double s_b_min = asNumber(field(doc, "", "s_b_min_effective"), "/s_b_min_effective");
  std::vector<std::string> cells;
  const Json& cj = asArray(field(doc, "", "cells"), "/cells");
  for (std::size_t i = 0; i < cj.size(); ++i) cells.push_back(asString(cj[i], "/cells/" + std::to_string(i)));

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!index.emplace(cells[i], i).second) semantic("/cells/" + std::to_string(i), "duplicate cell");
  auto lookup = [&](const Json& j, const std::string& path) {
    auto it = index.find(asString(j, path));
    if (it == index.end()) semantic(path, "unknown cell");
    return it->second;
  };

  std::vector<std::vector<SolutionCandidate>> entries(cells.size() * cells.size());
  const Json& ej = asArray(field(doc, "", "entries"), "/entries");
  for (std::size_t e = 0; e < ej.size(); ++e) {
    const std::string ep = "/entries/" + std::to_string(e);
    const std::size_t l = lookup(field(ej[e], ep, "left"), ep + "/left");
    const std::size_t r = lookup(field(ej[e], ep, "right"), ep + "/right");
    const Json& cands = asArray(field(ej[e], ep, "candidates"), ep + "/candidates");
    auto& slot = entries[l * cells.size() + r];
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const std::string kp = ep + "/candidates/" + std::to_string(k);
      const Json& o = asArray(field(cands[k], kp, "orient"), kp + "/orient");
      const Json& c = asArray(field(cands[k], kp, "coloring"), kp + "/coloring");
      if (o.size() != 2 || c.size() != 2) semantic(kp, "orient and coloring must be pairs");
      slot.push_back({parseOrientation(o[0], kp + "/orient/0"), parseOrientation(o[1], kp + "/orient/1"),
                      static_cast<int>(asInt(c[0], kp + "/coloring/0")),
                      static_cast<int>(asInt(c[1], kp + "/coloring/1")),
                      asNumber(field(cands[k], kp, "overlay"), kp + "/overlay")});
    }
  }
  Dplut t(std::move(cells), params, s_b_min, std::move(entries));
  t.setLibraryHash(asString(field(doc, "", "library_hash"), "/library_hash"));
  return t;
}

std::string serializeDplut(const Dplut& t) {
  Json j;
  j["format"] = "sadp-dplut";
  j["version"] = kFormatVersion;
  j["library_hash"] = t.libraryHash();
  j["params"] = paramsJson(t.params());
  j["s_b_min_effective"] = t.sbMin();
  j["cells"] = t.cells();
  Json entries = Json::array();
  for (std::size_t l = 0; l < t.size(); ++l)
    for (std::size_t r = 0; r < t.size(); ++r) {
      const auto& e = t.entry(l, r);
      if (e.empty()) continue;
      Json cands = Json::array();
      for (const auto& c : e)
        cands.push_back(Json{{"orient", {toString(c.orient_left), toString(c.orient_right)}},
                             {"coloring", {c.coloring_left, c.coloring_right}},
                             {"overlay", c.overlay}});
      entries.push_back(Json{{"left", t.cells()[l]}, {"right", t.cells()[r]}, {"candidates", std::move(cands)}});
    }
  j["entries"] = std::move(entries);
  return render(j);
}

Dplut loadDplut(std::string_view text, const std::string& expected_hash) {
  Dplut t = parseDplut(text);
  if (t.libraryHash() != expected_hash)
    throw StaleTable("DPLUT was built for library " + t.libraryHash() + " but the current library is " +
                     expected_hash);
  return t;
}

LegalizeReport parseReport(std::string_view text) {
  const Json doc = parseText(text);
  checkHeader(doc, "sadp-report");
  LegalizeReport r;
  const std::string mode = asString(field(doc, "", "mode"), "/mode");
  if (mode != "ub" && mode != "b") semantic("/mode", "mode must be ub or b");
  r.mode = mode == "ub" ? LegalizeMode::UB : LegalizeMode::B;
  auto count = [&](const char* key) {
    const auto v = asInt(field(doc, "", key), std::string("/") + key);
    if (v < 0) semantic(std::string("/") + key, "must be non-negative");
    return static_cast<std::size_t>(v);
  };
  r.conflicts_before = count("conflicts_before");
  r.conflicts_after = count("conflicts_after");
  r.area_before = asNumber(field(doc, "", "area_before"), "/area_before");
  r.area_after = asNumber(field(doc, "", "area_after"), "/area_after");
  r.hpwl_before = asNumber(field(doc, "", "hpwl_before"), "/hpwl_before");
  r.hpwl_after = asNumber(field(doc, "", "hpwl_after"), "/hpwl_after");
  r.flips = count("flips");
  r.recolored = count("recolored");
  r.total_spread = asInt(field(doc, "", "total_spread"), "/total_spread");
  const Json& rows = asArray(field(doc, "", "unsolvable_pg_rows"), "/unsolvable_pg_rows");
  for (std::size_t i = 0; i < rows.size(); ++i)
    r.unsolvable_pg_rows.push_back(static_cast<int>(asInt(rows[i], "/unsolvable_pg_rows/" + std::to_string(i))));
  return r;
}

std::string serializeReport(const LegalizeReport& r) {
  Json j;
  j["format"] = "sadp-report";
  j["version"] = kFormatVersion;
  j["mode"] = toString(r.mode);
  j["conflicts_before"] = r.conflicts_before;
  j["conflicts_after"] = r.conflicts_after;
  j["resolved_fraction"] = r.resolvedFraction();
  j["area_before"] = r.area_before;
  j["area_after"] = r.area_after;
  j["area_delta_pct"] = r.areaDeltaPct();
  j["hpwl_before"] = r.hpwl_before;
  j["hpwl_after"] = r.hpwl_after;
  j["hpwl_delta_pct"] = r.hpwlDeltaPct();
  j["flips"] = r.flips;
  j["recolored"] = r.recolored;
  j["total_spread"] = r.total_spread;
  j["unsolvable_pg_rows"] = r.unsolvable_pg_rows;
  return render(j);
}

ParamOverrides parseParams(std::string_view text) {
  const Json doc = parseText(text);
  if (!doc.is_object()) semantic("", "expected a JSON object");
  ParamOverrides o;
  if (auto it = doc.find("s_dp"); it != doc.end()) o.s_dp = asNumber(*it, "/s_dp");
  if (auto it = doc.find("w_spacer"); it != doc.end()) o.w_spacer = asNumber(*it, "/w_spacer");
  if (auto it = doc.find("s_b_min"); it != doc.end() && !it->is_null()) o.s_b_min = asNumber(*it, "/s_b_min");
  return o;
}

void applyOverrides(Params& p, const ParamOverrides& o) {
  if (o.s_dp) p.s_dp = *o.s_dp;
  if (o.w_spacer) p.w_spacer = *o.w_spacer;
  if (o.s_b_min) p.s_b_min = *o.s_b_min;
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace sadp::io
